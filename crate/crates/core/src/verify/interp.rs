use crate::algebra::{jm_element, AlgebraElement};
use crate::error::{Error, Result};
use crate::tableaux::{Move, WalledTableau};

/// `E_T` by Jucys–Murphy interpolation, level by level:
/// `E ← E · Π (x_k − a)/(c_k − a)` over the contents `a` of the other legal
/// moves at step `k`. Works for prefixes as well.
pub fn interp_idempotent(t: &WalledTableau) -> Result<AlgebraElement> {
    let shape = t.shape();
    let mut e = AlgebraElement::one(shape);
    for (idx, mv) in t.moves().iter().enumerate() {
        let k = idx + 1;
        let c = mv.content();
        let x = jm_element(shape, k)?;
        for other in Move::legal_moves(shape, k, &t.steps()[idx]) {
            if other == *mv {
                continue;
            }
            let a = other.content();
            let gap = (&c - &a)
                .inv()
                .map_err(|_| Error::ZeroDenominator(format!("equal contents at step {k}")))?;
            let factor = (&x - &AlgebraElement::scalar(shape, &a)).scale(&gap);
            e = &e * &factor;
        }
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_scalar;
    use crate::diagram::{Generator, Shape};

    #[test]
    fn smallest_shape() {
        let shape = Shape::new(1, 1);
        let d = AlgebraElement::generator(shape, Generator::D).unwrap();
        let inv = parse_scalar("1/d").unwrap();
        let t = WalledTableau::parse("L+1,1;L-1,1", shape).unwrap();
        assert_eq!(interp_idempotent(&t).unwrap(), d.scale(&inv));
        let t = WalledTableau::parse("L+1,1;R+1,1", shape).unwrap();
        assert_eq!(
            interp_idempotent(&t).unwrap(),
            &AlgebraElement::one(shape) - &d.scale(&inv)
        );
    }
}
