use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Polynomial in the formal parameter `δ` with rational coefficients.
///
/// Coefficients are stored in ascending order of degree and trailing zeros
/// are always trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DeltaPoly {
    coeffs: Vec<Rational>,
}

impl DeltaPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        DeltaPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        DeltaPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The polynomial `δ`.
    pub fn delta() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    /// `a + b·δ`
    pub fn linear(a: i64, b: i64) -> Self {
        Self::from_ints(&[a, b])
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

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        DeltaPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplication by `δ^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        DeltaPoly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Scales to leading coefficient one. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Euclidean division; `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &DeltaPoly) -> Result<(DeltaPoly, DeltaPoly)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let lead_inv = divisor.coeffs[dd].recip();
        if self.coeffs.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let q = top * &lead_inv;
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * dc;
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Exact quotient; fails when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &DeltaPoly) -> Result<DeltaPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonzeroRemainder {
                completed: 0,
                requested: 1,
            })
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &DeltaPoly, b: &DeltaPoly) -> DeltaPoly {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        if a.is_constant() || b.is_constant() {
            return Self::one();
        }
        let (mut x, mut y) = if a.coeffs.len() >= b.coeffs.len() {
            (a.monic(), b.monic())
        } else {
            (b.monic(), a.monic())
        };
        while !y.is_zero() {
            if y.is_constant() {
                return Self::one();
            }
            let (_, r) = x.div_rem(&y).expect("nonzero divisor");
            x = y;
            y = r.monic();
        }
        x.monic()
    }

    /// Splits into integer coefficients: `self = numbers / scale`, where `scale`
    /// is the least common multiple of the coefficient denominators.
    pub fn to_integer_coeffs(&self) -> (Vec<BigInt>, BigInt) {
        let mut l = BigInt::one();
        for c in &self.coeffs {
            l = l.lcm(c.denom());
        }
        let ints = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&l / c.denom()))
            .collect();
        (ints, l)
    }

    pub fn from_big_ints(coeffs: Vec<BigInt>) -> Self {
        Self::new(coeffs.into_iter().map(Rational::from_integer).collect())
    }

    /// Writes the polynomial in the variable `d`, highest degree first.
    pub(crate) fn write_terms(&self, f: &mut impl fmt::Write) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = abs.is_one();
            if k == 0 || !unit {
                write!(f, "{abs}")?;
            }
            if k > 0 {
                if !unit {
                    f.write_str("*")?;
                }
                f.write_str("d")?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }

    /// Number of nonzero monomials.
    pub(crate) fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

impl fmt::Display for DeltaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_terms(f)
    }
}

impl fmt::Debug for DeltaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DeltaPoly({self})")
    }
}

impl AddAssign<&DeltaPoly> for DeltaPoly {
    fn add_assign(&mut self, rhs: &DeltaPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl SubAssign<&DeltaPoly> for DeltaPoly {
    fn sub_assign(&mut self, rhs: &DeltaPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Add<&DeltaPoly> for &DeltaPoly {
    type Output = DeltaPoly;
    fn add(self, rhs: &DeltaPoly) -> DeltaPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&DeltaPoly> for &DeltaPoly {
    type Output = DeltaPoly;
    fn sub(self, rhs: &DeltaPoly) -> DeltaPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&DeltaPoly> for &DeltaPoly {
    type Output = DeltaPoly;
    fn mul(self, rhs: &DeltaPoly) -> DeltaPoly {
        if self.is_zero() || rhs.is_zero() {
            return DeltaPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        DeltaPoly::new(coeffs)
    }
}

impl Neg for &DeltaPoly {
    type Output = DeltaPoly;
    fn neg(self) -> DeltaPoly {
        DeltaPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($ty:ty, $tr:ident, $m:ident) => {
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty {
                (&self).$m(rhs)
            }
        }
        impl $tr<$ty> for &$ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                self.$m(&rhs)
            }
        }
    };
}
pub(crate) use forward_owned_binop;

forward_owned_binop!(DeltaPoly, Add, add);
forward_owned_binop!(DeltaPoly, Sub, sub);
forward_owned_binop!(DeltaPoly, Mul, mul);

impl Neg for DeltaPoly {
    type Output = DeltaPoly;
    fn neg(self) -> DeltaPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> DeltaPoly {
        DeltaPoly::from_ints(c)
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(p(&[1, 0, 0]).degree(), Some(0));
        assert!(p(&[0, 0]).is_zero());
    }

    #[test]
    fn division_and_gcd() {
        // (δ^2 - 1) = (δ - 1)(δ + 1)
        let a = p(&[-1, 0, 1]);
        let b = p(&[-1, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(DeltaPoly::gcd(&a, &p(&[2, 2])), p(&[1, 1]));
        assert_eq!(DeltaPoly::gcd(&a, &p(&[0, 1])), DeltaPoly::one());
        assert!(a.div_rem(&DeltaPoly::zero()).is_err());
    }

    #[test]
    fn display_uses_d() {
        assert_eq!(p(&[-3, 0, 2]).to_string(), "2*d^2-3");
        assert_eq!(p(&[1, -1]).to_string(), "-d+1");
        assert_eq!(DeltaPoly::zero().to_string(), "0");
    }

    #[test]
    fn pow_and_eval() {
        let x = p(&[1, 1]).pow(3);
        assert_eq!(x, p(&[1, 3, 3, 1]));
        assert_eq!(
            x.eval(&Rational::from_integer(1.into())),
            Rational::from_integer(8.into())
        );
    }
}
