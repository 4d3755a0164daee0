use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::forward_owned_binop;
use super::upoly::Coefficient;
use super::{DeltaPoly, Rational};

/// Polynomial in `δ` with integer coefficients.
///
/// Used for numerators of algebra elements, where addition must not pay for
/// rational normalization.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Splits a rational polynomial as `numerator / scale` with positive
    /// integer `scale`.
    pub fn from_delta_poly(p: &DeltaPoly) -> (IntPoly, BigInt) {
        let (ints, scale) = p.to_integer_coeffs();
        (IntPoly::new(ints), scale)
    }

    pub fn to_delta_poly(&self) -> DeltaPoly {
        DeltaPoly::from_big_ints(self.coeffs.clone())
    }

    /// Multiplication by `δ^k`.
    pub fn shift(&self, k: usize) -> Self {
        if k == 0 || self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Exact division by an integer; the caller guarantees divisibility.
    pub fn div_int(&self, c: &BigInt) -> Self {
        if c.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|a| {
                    let (q, r) = a.div_rem(c);
                    debug_assert!(r.is_zero());
                    q
                })
                .collect(),
        }
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc
    }

    /// Quotient in `Z[δ]` when `divisor` divides `self` with an integral
    /// quotient, otherwise `None`.
    pub fn exact_div(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let d = divisor.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        if divisor.is_constant() {
            let c = &divisor.coeffs[0];
            let mut out = Vec::with_capacity(self.coeffs.len());
            for a in &self.coeffs {
                let (q, r) = a.div_rem(c);
                if !r.is_zero() {
                    return None;
                }
                out.push(q);
            }
            return Some(IntPoly { coeffs: out });
        }
        let n = self.degree()?;
        if n < d {
            return None;
        }
        let lead = &divisor.coeffs[d];
        let mut rem = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); n - d + 1];
        for k in (0..=n - d).rev() {
            let top = &rem[k + d];
            if top.is_zero() {
                continue;
            }
            let (qk, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &qk * b;
            }
            q[k] = qk;
        }
        rem.iter().all(Zero::is_zero).then(|| IntPoly::new(q))
    }

    /// Primitive gcd with positive leading coefficient; `gcd(0,0) = 0`.
    pub fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
        if a.is_zero() && b.is_zero() {
            return Self::zero();
        }
        if a.is_constant() && !a.is_zero() || b.is_constant() && !b.is_zero() {
            return Self::one();
        }
        let g = DeltaPoly::gcd(&a.to_delta_poly(), &b.to_delta_poly());
        let (g, _) = IntPoly::from_delta_poly(&g);
        g.primitive()
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> IntPoly {
        let mut c = self.content();
        if c.is_zero() {
            return self.clone();
        }
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        self.div_int(&c)
    }

    /// Largest absolute coefficient bit length; 0 for the zero polynomial.
    pub(crate) fn max_bits(&self) -> u64 {
        self.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0)
    }

    pub(crate) fn to_i128(&self) -> Option<Vec<i128>> {
        self.coeffs.iter().map(ToPrimitive::to_i128).collect()
    }

    pub(crate) fn from_i128(coeffs: &[i128]) -> IntPoly {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub(crate) fn add_assign_ref(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.trim();
    }

    pub(crate) fn sub_assign_ref(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        self.trim();
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Coefficient for IntPoly {
    type Scalar = IntPoly;

    fn is_zero(&self) -> bool {
        IntPoly::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        IntPoly::add_assign_ref(self, other);
    }
    fn sub_assign_ref(&mut self, other: &Self) {
        IntPoly::sub_assign_ref(self, other);
    }
    fn scaled(&self, c: &IntPoly) -> Self {
        self * c
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_delta_poly().write_terms(f)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl Add<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out.sub_assign_ref(rhs);
        out
    }
}

impl Mul<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        if rhs.is_constant() {
            return self.scale(&rhs.coeffs[0]);
        }
        if self.is_constant() {
            return rhs.scale(&self.coeffs[0]);
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

forward_owned_binop!(IntPoly, Add, add);
forward_owned_binop!(IntPoly, Sub, sub);
forward_owned_binop!(IntPoly, Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_division() {
        let a = IntPoly::from_ints(&[-1, 1]);
        let b = IntPoly::from_ints(&[1, 2]);
        let p = &a * &b;
        assert_eq!(p.exact_div(&a), Some(b.clone()));
        assert_eq!(p.exact_div(&IntPoly::from_ints(&[1, 1])), None);
        // divisible over Q but not with an integral quotient
        assert_eq!(a.exact_div(&IntPoly::from_ints(&[0, 2])), None);
    }

    #[test]
    fn gcd_is_primitive() {
        let a = IntPoly::from_ints(&[0, 2, -2]); // 2δ - 2δ²
        let b = IntPoly::from_ints(&[0, 0, 6]); // 6δ²
        assert_eq!(IntPoly::gcd(&a, &b), IntPoly::from_ints(&[0, 1]));
        assert_eq!(
            IntPoly::from_ints(&[4, -6]).primitive(),
            IntPoly::from_ints(&[-2, 3])
        );
    }
}
