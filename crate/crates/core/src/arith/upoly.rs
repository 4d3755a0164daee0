use std::ops::Mul;

use super::{DeltaPoly, DeltaScalar};
use crate::error::{Error, Result};

/// A coefficient domain for [`UniPoly`]: an additive group that can be
/// scaled by elements of `Self::Scalar`.
pub trait Coefficient: Clone + PartialEq {
    type Scalar;

    fn is_zero(&self) -> bool;
    fn add_assign_ref(&mut self, other: &Self);
    fn sub_assign_ref(&mut self, other: &Self);
    fn scaled(&self, c: &Self::Scalar) -> Self;
}

impl Coefficient for DeltaScalar {
    type Scalar = DeltaScalar;

    fn is_zero(&self) -> bool {
        DeltaScalar::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self = &*self + other;
    }
    fn sub_assign_ref(&mut self, other: &Self) {
        *self = &*self - other;
    }
    fn scaled(&self, c: &DeltaScalar) -> Self {
        self * c
    }
}

impl Coefficient for DeltaPoly {
    type Scalar = DeltaPoly;

    fn is_zero(&self) -> bool {
        DeltaPoly::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other;
    }
    fn scaled(&self, c: &DeltaPoly) -> Self {
        self * c
    }
}

/// Polynomial in one evaluation variable `u` with coefficients in `C`.
///
/// `coeffs[k]` is the coefficient of `u^k`; trailing zeros are trimmed. A
/// zero coefficient prototype is kept so that evaluation of the zero
/// polynomial still produces a value of the right kind (e.g. an algebra
/// element of the right shape).
#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly<C> {
    coeffs: Vec<C>,
    zero: C,
}

impl<C: Coefficient> UniPoly<C> {
    pub fn new(coeffs: Vec<C>, zero: C) -> Self {
        let mut p = UniPoly { coeffs, zero };
        p.trim();
        p
    }

    pub fn zero(zero: C) -> Self {
        UniPoly {
            coeffs: Vec::new(),
            zero,
        }
    }

    pub fn constant(c: C, zero: C) -> Self {
        Self::new(vec![c], zero)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(C::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| self.zero.clone())
    }

    pub fn zero_coeff(&self) -> &C {
        &self.zero
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Horner evaluation at `u = c`.
    pub fn eval(&self, c: &C::Scalar) -> C {
        let mut iter = self.coeffs.iter().rev();
        let Some(top) = iter.next() else {
            return self.zero.clone();
        };
        let mut acc = top.clone();
        for k in iter {
            acc = acc.scaled(c);
            acc.add_assign_ref(k);
        }
        acc
    }

    /// One step of synthetic division by `u - c`: returns `(q, rem)` with
    /// `self = (u - c)·q + rem`.
    pub fn divide_linear(&self, c: &C::Scalar) -> (Self, C) {
        let d = self.coeffs.len();
        if d == 0 {
            return (self.clone(), self.zero.clone());
        }
        let mut q = vec![self.zero.clone(); d - 1];
        let mut carry = self.coeffs[d - 1].clone();
        for k in (0..d - 1).rev() {
            q[k] = carry.clone();
            carry = carry.scaled(c);
            carry.add_assign_ref(&self.coeffs[k]);
        }
        (Self::new(q, self.zero.clone()), carry)
    }

    /// Returns `q` with `self = (u - c)^m · q`; fails with
    /// [`Error::NonzeroRemainder`] when some division step is inexact.
    pub fn divide_linear_power(&self, c: &C::Scalar, m: usize) -> Result<Self> {
        let mut cur = self.clone();
        for done in 0..m {
            let (q, rem) = cur.divide_linear(c);
            if !rem.is_zero() {
                return Err(Error::NonzeroRemainder {
                    completed: done,
                    requested: m,
                });
            }
            cur = q;
        }
        Ok(cur)
    }

    /// Largest `m` such that `(u - c)^m` divides `self`; `None` for zero.
    pub fn root_multiplicity(&self, c: &C::Scalar) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let mut m = 0;
        let mut cur = self.clone();
        loop {
            let (q, rem) = cur.divide_linear(c);
            if !rem.is_zero() {
                return Some(m);
            }
            m += 1;
            cur = q;
        }
    }

    /// Multiplication by `a + b·u`.
    pub fn mul_linear(&self, a: &C::Scalar, b: &C::Scalar) -> Self {
        let mut out = vec![self.zero.clone(); self.coeffs.len() + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k].add_assign_ref(&c.scaled(a));
            out[k + 1].add_assign_ref(&c.scaled(b));
        }
        Self::new(out, self.zero.clone())
    }

    pub fn scaled(&self, c: &C::Scalar) -> Self {
        Self::new(
            self.coeffs.iter().map(|k| k.scaled(c)).collect(),
            self.zero.clone(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.coeffs.clone();
        if out.len() < other.coeffs.len() {
            out.resize(other.coeffs.len(), self.zero.clone());
        }
        for (a, b) in out.iter_mut().zip(&other.coeffs) {
            a.add_assign_ref(b);
        }
        Self::new(out, self.zero.clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.coeffs.clone();
        if out.len() < other.coeffs.len() {
            out.resize(other.coeffs.len(), self.zero.clone());
        }
        for (a, b) in out.iter_mut().zip(&other.coeffs) {
            a.sub_assign_ref(b);
        }
        Self::new(out, self.zero.clone())
    }

    pub fn map<D: Coefficient>(&self, zero: D, f: impl Fn(&C) -> D) -> UniPoly<D> {
        UniPoly::new(self.coeffs.iter().map(f).collect(), zero)
    }
}

impl<C> UniPoly<C>
where
    C: Coefficient<Scalar = C>,
    for<'a> &'a C: Mul<&'a C, Output = C>,
{
    /// The polynomial `u`.
    pub fn variable(zero: C, one: C) -> Self {
        Self::new(vec![zero.clone(), one], zero)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.zero.clone());
        }
        let mut out = vec![self.zero.clone(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j].add_assign_ref(&(a * b));
            }
        }
        Self::new(out, self.zero.clone())
    }
}

/// Convenience constructors for scalar polynomials in `u` over `Q(δ)`.
pub type ScalarPoly = UniPoly<DeltaScalar>;

impl ScalarPoly {
    pub fn scalar_const(c: DeltaScalar) -> Self {
        Self::constant(c, DeltaScalar::zero())
    }

    /// `a + b·u`
    pub fn affine(a: DeltaScalar, b: DeltaScalar) -> Self {
        Self::new(vec![a, b], DeltaScalar::zero())
    }

    /// `u - c`
    pub fn u_minus(c: &DeltaScalar) -> Self {
        Self::affine(-c, DeltaScalar::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(cs: &[DeltaScalar]) -> ScalarPoly {
        ScalarPoly::new(cs.to_vec(), DeltaScalar::zero())
    }

    #[test]
    fn difference_of_squares() {
        let c = DeltaScalar::linear(2, 1);
        // u^2 - c^2 divided by (u - c) gives u + c
        let p = sp(&[-(&c * &c), DeltaScalar::zero(), DeltaScalar::one()]);
        let q = p.divide_linear_power(&c, 1).unwrap();
        assert_eq!(q, sp(&[c.clone(), DeltaScalar::one()]));
    }

    #[test]
    fn non_divisible_case() {
        let c = DeltaScalar::delta();
        let other = DeltaScalar::linear(1, 1);
        let p = ScalarPoly::u_minus(&c);
        assert_eq!(
            p.divide_linear_power(&other, 1),
            Err(Error::NonzeroRemainder {
                completed: 0,
                requested: 1
            })
        );
    }

    #[test]
    fn constructed_product() {
        // (u - δ)^2 · (1 + δ u) has root δ of multiplicity exactly two
        let d = DeltaScalar::delta();
        let cof = ScalarPoly::affine(DeltaScalar::one(), d.clone());
        let p = ScalarPoly::u_minus(&d)
            .mul(&ScalarPoly::u_minus(&d))
            .mul(&cof);
        assert_eq!(p.divide_linear_power(&d, 2).unwrap(), cof);
        assert_eq!(p.root_multiplicity(&d), Some(2));
        assert!(p.divide_linear_power(&d, 3).is_err());
    }

    #[test]
    fn evaluation() {
        let d = DeltaScalar::delta();
        let u = ScalarPoly::variable(DeltaScalar::zero(), DeltaScalar::one());
        assert_eq!(u.eval(&d), d);
        let p = sp(&[
            DeltaScalar::from_int(-1),
            DeltaScalar::zero(),
            DeltaScalar::one(),
        ]);
        assert!(p.eval(&DeltaScalar::one()).is_zero());
        assert!(ScalarPoly::zero(DeltaScalar::zero()).eval(&d).is_zero());
    }
}
