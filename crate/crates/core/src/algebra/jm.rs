use super::AlgebraElement;
use crate::arith::DeltaScalar;
use crate::diagram::{Generator, Shape, WalledDiagram};
use crate::error::{Error, Result};

/// The Jucys–Murphy element `x_k` (1-based `k`).
///
/// Left of the wall `x_k = Σ_{i<k} s_{i,k}`; right of it
/// `x_k = δ − Σ_{i≤r} d_{i,k} + Σ_{r<i<k} s_{i,k}`.
pub fn jm_element(shape: Shape, k: usize) -> Result<AlgebraElement> {
    let (r, n) = (shape.r, shape.n());
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange(format!(
            "Jucys-Murphy index {k} outside 1..={n}"
        )));
    }
    let pair = |g| WalledDiagram::generator(shape, g).map(|d| AlgebraElement::from_diagram(&d));
    let mut x = AlgebraElement::zero(shape);
    if k <= r {
        for i in 1..k {
            x = &x + &pair(Generator::SPair(i, k))?;
        }
    } else {
        x = AlgebraElement::scalar(shape, &DeltaScalar::delta());
        for i in 1..=r {
            x = &x - &pair(Generator::DPair(i, k))?;
        }
        for i in r + 1..k {
            x = &x + &pair(Generator::SPair(i, k))?;
        }
    }
    Ok(x)
}

/// All of `x_1, …, x_n`.
pub fn jm_elements(shape: Shape) -> Result<Vec<AlgebraElement>> {
    (1..=shape.n()).map(|k| jm_element(shape, k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let s11 = Shape::new(1, 1);
        assert!(jm_element(s11, 1).unwrap().is_zero());
        let d = AlgebraElement::generator(s11, Generator::D).unwrap();
        let expected = &AlgebraElement::scalar(s11, &DeltaScalar::delta()) - &d;
        assert_eq!(jm_element(s11, 2).unwrap(), expected);
        assert!(jm_element(s11, 3).is_err());
        assert!(jm_element(s11, 0).is_err());
    }

    #[test]
    fn third_element_in_two_two() {
        let shape = Shape::new(2, 2);
        let d13 = AlgebraElement::generator(shape, Generator::DPair(1, 3)).unwrap();
        let d23 = AlgebraElement::generator(shape, Generator::DPair(2, 3)).unwrap();
        let expected = &(&AlgebraElement::scalar(shape, &DeltaScalar::delta()) - &d13) - &d23;
        assert_eq!(jm_element(shape, 3).unwrap(), expected);
    }
}
