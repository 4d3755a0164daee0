use num_traits::{Signed, Zero};

use crate::arith::Rational;

/// Whether `B_{r,s}(δ)` is semisimple at the given value of `δ`.
pub fn is_semisimple(r: usize, s: usize, delta: &Rational) -> bool {
    if r == 0 || s == 0 || !delta.is_integer() {
        return true;
    }
    let n = (r + s) as i64;
    if delta.abs() > Rational::from_integer((n - 2).into()) {
        return true;
    }
    delta.is_zero() && matches!((r, s), (1, 2) | (1, 3) | (2, 1) | (3, 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p.into(), d.into())
    }

    #[test]
    fn criterion() {
        assert!(is_semisimple(2, 2, &q(1, 2)));
        assert!(!is_semisimple(2, 2, &q(2, 1)));
        assert!(is_semisimple(1, 2, &q(0, 1)));
        assert!(!is_semisimple(2, 2, &q(0, 1)));
        assert!(is_semisimple(2, 2, &q(3, 1)));
        assert!(is_semisimple(0, 4, &q(0, 1)));
        assert!(!is_semisimple(1, 1, &q(0, 1)));
    }
}
