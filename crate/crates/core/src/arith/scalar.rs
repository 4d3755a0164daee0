use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{forward_owned_binop, DeltaPoly};
use super::Rational;
use crate::error::{Error, Result};

/// An element of the field `Q(δ)`.
///
/// Always stored in canonical form: the denominator is monic and coprime to
/// the numerator, so two scalars are equal iff they are structurally equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DeltaScalar {
    num: DeltaPoly,
    den: DeltaPoly,
}

impl DeltaScalar {
    /// Builds `num / den` in canonical form.
    pub fn new(num: DeltaPoly, den: DeltaPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: DeltaPoly, den: DeltaPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = DeltaPoly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides"),
                den.exact_div(&g).expect("gcd divides"),
            )
        };
        let lead = den.leading().expect("nonzero").clone();
        if lead.is_one() {
            DeltaScalar { num, den }
        } else {
            let inv = lead.recip();
            DeltaScalar {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        DeltaScalar {
            num: DeltaPoly::zero(),
            den: DeltaPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(DeltaPoly::one())
    }

    pub fn delta() -> Self {
        Self::from_poly(DeltaPoly::delta())
    }

    pub fn from_poly(p: DeltaPoly) -> Self {
        DeltaScalar {
            num: p,
            den: DeltaPoly::one(),
        }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(DeltaPoly::from_int(c))
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_poly(DeltaPoly::constant(c))
    }

    /// `a + b·δ`
    pub fn linear(a: i64, b: i64) -> Self {
        Self::from_poly(DeltaPoly::linear(a, b))
    }

    /// `p/q` as a constant.
    pub fn ratio(p: i64, q: i64) -> Self {
        Self::from_rational(Rational::new(p.into(), q.into()))
    }

    pub fn numer(&self) -> &DeltaPoly {
        &self.num
    }

    pub fn denom(&self) -> &DeltaPoly {
        &self.den
    }

    pub fn into_parts(self) -> (DeltaPoly, DeltaPoly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&DeltaPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    /// Returns the value when the scalar does not depend on `δ`.
    pub fn as_rational(&self) -> Option<Rational> {
        (self.num.is_constant() && self.den.is_one()).then(|| self.num.constant_term())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        DeltaScalar {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    pub fn mul_poly(&self, p: &DeltaPoly) -> Self {
        if p.is_zero() || self.is_zero() {
            return Self::zero();
        }
        let g = DeltaPoly::gcd(p, &self.den);
        if g.is_one() {
            Self::reduce_unit(&self.num * p, self.den.clone())
        } else {
            Self::reduce(&self.num * p, self.den.clone())
        }
    }

    // den already coprime to num; only a unit may need normalizing
    fn reduce_unit(num: DeltaPoly, den: DeltaPoly) -> Self {
        DeltaScalar { num, den }
    }

    /// Integer numerator and denominator with positive denominator leading
    /// coefficient and no common integer content. Display form only.
    fn integer_form(&self) -> (DeltaPoly, DeltaPoly) {
        let (n_int, n_scale) = self.num.to_integer_coeffs();
        let (d_int, d_scale) = self.den.to_integer_coeffs();
        // num/den = (n_int/n_scale) / (d_int/d_scale) = (n_int*d_scale)/(d_int*n_scale)
        let mut top: Vec<BigInt> = n_int.iter().map(|c| c * &d_scale).collect();
        let mut bot: Vec<BigInt> = d_int.iter().map(|c| c * &n_scale).collect();
        let mut g = BigInt::zero();
        for c in top.iter().chain(bot.iter()) {
            g = g.gcd(c);
        }
        if !g.is_zero() && !g.is_one() {
            for c in top.iter_mut().chain(bot.iter_mut()) {
                *c /= &g;
            }
        }
        if bot.last().is_some_and(Signed::is_negative) {
            for c in top.iter_mut().chain(bot.iter_mut()) {
                *c = -&*c;
            }
        }
        (DeltaPoly::from_big_ints(top), DeltaPoly::from_big_ints(bot))
    }
}

impl Default for DeltaScalar {
    fn default() -> Self {
        Self::zero()
    }
}

fn needs_den_parens(den: &DeltaPoly) -> bool {
    if den.term_count() > 1 {
        return true;
    }
    // single monomial: bare integer, `d` or `d^k` are unambiguous
    let k = den.degree().unwrap_or(0);
    let c = den.coeff(k);
    k > 0 && !c.is_one()
}

impl fmt::Display for DeltaScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, den) = self.integer_form();
        if den.is_one() {
            return num.write_terms(f);
        }
        if num.term_count() > 1 {
            f.write_str("(")?;
            num.write_terms(f)?;
            f.write_str(")")?;
        } else {
            num.write_terms(f)?;
        }
        f.write_str("/")?;
        if needs_den_parens(&den) {
            f.write_str("(")?;
            den.write_terms(f)?;
            f.write_str(")")
        } else {
            den.write_terms(f)
        }
    }
}

impl fmt::Debug for DeltaScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DeltaScalar({self})")
    }
}

impl FromStr for DeltaScalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        super::parse::parse_scalar(s)
    }
}

impl From<DeltaPoly> for DeltaScalar {
    fn from(p: DeltaPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for DeltaScalar {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl Add<&DeltaScalar> for &DeltaScalar {
    type Output = DeltaScalar;
    fn add(self, rhs: &DeltaScalar) -> DeltaScalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return DeltaScalar::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let g = DeltaPoly::gcd(&self.den, &rhs.den);
        let a_cof = self.den.exact_div(&g).expect("gcd divides");
        let b_cof = rhs.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &b_cof) + &(&rhs.num * &a_cof);
        DeltaScalar::reduce(num, &self.den * &b_cof)
    }
}

impl Sub<&DeltaScalar> for &DeltaScalar {
    type Output = DeltaScalar;
    fn sub(self, rhs: &DeltaScalar) -> DeltaScalar {
        self + &(-rhs)
    }
}

impl Mul<&DeltaScalar> for &DeltaScalar {
    type Output = DeltaScalar;
    fn mul(self, rhs: &DeltaScalar) -> DeltaScalar {
        if self.is_zero() || rhs.is_zero() {
            return DeltaScalar::zero();
        }
        if rhs.is_polynomial() {
            return self.mul_poly(&rhs.num);
        }
        if self.is_polynomial() {
            return rhs.mul_poly(&self.num);
        }
        let g1 = DeltaPoly::gcd(&self.num, &rhs.den);
        let g2 = DeltaPoly::gcd(&rhs.num, &self.den);
        let n1 = self.num.exact_div(&g1).expect("gcd divides");
        let d2 = rhs.den.exact_div(&g1).expect("gcd divides");
        let n2 = rhs.num.exact_div(&g2).expect("gcd divides");
        let d1 = self.den.exact_div(&g2).expect("gcd divides");
        DeltaScalar::reduce(&n1 * &n2, &d1 * &d2)
    }
}

/// Panics on division by zero, like integer division; use
/// [`DeltaScalar::checked_div`] for a fallible variant.
impl Div<&DeltaScalar> for &DeltaScalar {
    type Output = DeltaScalar;
    fn div(self, rhs: &DeltaScalar) -> DeltaScalar {
        self.checked_div(rhs).expect("division by zero in Q(δ)")
    }
}

impl Neg for &DeltaScalar {
    type Output = DeltaScalar;
    fn neg(self) -> DeltaScalar {
        DeltaScalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for DeltaScalar {
    type Output = DeltaScalar;
    fn neg(self) -> DeltaScalar {
        -&self
    }
}

forward_owned_binop!(DeltaScalar, Add, add);
forward_owned_binop!(DeltaScalar, Sub, sub);
forward_owned_binop!(DeltaScalar, Mul, mul);
forward_owned_binop!(DeltaScalar, Div, div);

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> DeltaScalar {
        text.parse().unwrap()
    }

    #[test]
    fn common_denominator_sum() {
        // 1/δ + 1/(δ(δ-1)) = 1/(δ-1)
        assert_eq!(s("1/d") + s("1/(d*(d-1))"), s("1/(d-1)"));
    }

    #[test]
    fn gcd_cancellation() {
        let x = DeltaScalar::new(
            DeltaPoly::from_ints(&[-1, 0, 1]),
            DeltaPoly::from_ints(&[-1, 1]),
        )
        .unwrap();
        assert_eq!(x, DeltaScalar::linear(1, 1));
        assert!(x.is_polynomial());
    }

    #[test]
    fn inverse_matches_golden_scalar() {
        let x = s("2*d*(d-1)");
        let inv = x.inv().unwrap();
        assert_eq!(inv.to_string(), "1/(2*d^2-2*d)");
        assert_eq!(&inv * &x, DeltaScalar::one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(DeltaScalar::zero().inv(), Err(Error::DivisionByZero));
        assert!(DeltaScalar::new(DeltaPoly::one(), DeltaPoly::zero()).is_err());
    }

    #[test]
    fn canonical_denominator_is_monic() {
        let x = s("3/(2*d+4)");
        assert_eq!(x.denom(), &DeltaPoly::from_ints(&[2, 1]));
        assert_eq!(x.to_string(), "3/(2*d+4)");
        assert_eq!(s("-1/2").to_string(), "-1/2");
        assert_eq!(s("d/2").to_string(), "d/2");
    }
}
