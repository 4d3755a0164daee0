use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::Combination;
use crate::arith::{DeltaScalar, IntPoly, Rational};
use crate::diagram::{DiagramBasis, Generator, Shape, WalledDiagram};
use crate::error::{Error, Result};

/// An element of `B_{r,s}(δ)`.
///
/// Stored as `numer / den` with integer-polynomial numerators over a shared
/// denominator. The form is canonical: `den` has positive leading
/// coefficient, `den` and the numerators have no common polynomial factor,
/// and their integer contents are jointly coprime. Hence equality of
/// elements is structural equality.
#[derive(Clone)]
pub struct AlgebraElement {
    shape: Shape,
    den: IntPoly,
    numer: Combination,
    basis: Arc<DiagramBasis>,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.shape == other.shape && self.den == other.den && self.numer == other.numer
    }
}

impl Eq for AlgebraElement {}

impl std::hash::Hash for AlgebraElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.shape.hash(state);
        self.den.hash(state);
        self.numer.hash(state);
    }
}

impl AlgebraElement {
    pub fn zero(shape: Shape) -> Self {
        AlgebraElement {
            shape,
            den: IntPoly::one(),
            numer: Combination::new(),
            basis: DiagramBasis::get(shape),
        }
    }

    pub fn one(shape: Shape) -> Self {
        Self::scalar(shape, &DeltaScalar::one())
    }

    pub fn scalar(shape: Shape, c: &DeltaScalar) -> Self {
        Self::from_diagram(&WalledDiagram::identity(shape)).scale(c)
    }

    pub fn from_diagram(d: &WalledDiagram) -> Self {
        let shape = d.shape();
        AlgebraElement {
            shape,
            den: IntPoly::one(),
            numer: Combination::single(d.rank(), IntPoly::one()),
            basis: DiagramBasis::get(shape),
        }
    }

    pub fn generator(shape: Shape, g: Generator) -> Result<Self> {
        Ok(Self::from_diagram(&WalledDiagram::generator(shape, g)?))
    }

    /// Sum of `coeff · diagram`; repeated diagrams are added together.
    pub fn from_terms<'a>(
        shape: Shape,
        terms: impl IntoIterator<Item = (&'a WalledDiagram, &'a DeltaScalar)>,
    ) -> Result<Self> {
        let mut acc = Self::zero(shape);
        for (d, c) in terms {
            if d.shape() != shape {
                return Err(Error::ShapeMismatch {
                    left: shape,
                    right: d.shape(),
                });
            }
            acc = &acc + &Self::from_diagram(d).scale(c);
        }
        Ok(acc)
    }

    /// Builds `numer / den` and brings it to canonical form.
    pub(crate) fn from_parts(shape: Shape, numer: Combination, den: IntPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator for algebra element");
        let mut e = AlgebraElement {
            shape,
            den,
            numer,
            basis: DiagramBasis::get(shape),
        };
        e.normalize();
        e
    }

    fn normalize(&mut self) {
        if self.numer.is_zero() {
            self.den = IntPoly::one();
            return;
        }
        if !self.den.is_constant() {
            let mut g = self.den.primitive();
            for v in self.numer.values() {
                if g.is_constant() {
                    break;
                }
                if v.exact_div(&g).is_none() {
                    g = IntPoly::gcd(&g, v);
                }
            }
            if !g.is_constant() {
                self.den = self.den.exact_div(&g).expect("gcd divides denominator");
                for v in self.numer.values_mut() {
                    *v = v.exact_div(&g).expect("gcd divides numerator");
                }
            }
        }
        let mut c = num_integer::Integer::gcd(&self.den.content(), &self.numer.content());
        if self.den.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        if !c.is_one() {
            self.den = self.den.div_int(&c);
            for v in self.numer.values_mut() {
                *v = v.div_int(&c);
            }
        }
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub(crate) fn basis(&self) -> &Arc<DiagramBasis> {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    /// Number of diagrams with nonzero coefficient.
    pub fn len(&self) -> usize {
        self.numer.len()
    }

    pub fn is_empty(&self) -> bool {
        self.numer.is_empty()
    }

    pub fn numer(&self) -> &Combination {
        &self.numer
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    /// Terms in lexicographic order of the diagram images.
    pub fn terms(&self) -> Vec<(WalledDiagram, DeltaScalar)> {
        let den = self.den.to_delta_poly();
        self.numer
            .iter()
            .map(|(k, v)| {
                let c = DeltaScalar::new(v.to_delta_poly(), den.clone()).expect("nonzero den");
                (self.basis.diagram(k), c)
            })
            .collect()
    }

    pub fn coeff(&self, d: &WalledDiagram) -> DeltaScalar {
        if d.shape() != self.shape {
            return DeltaScalar::zero();
        }
        match self.numer.get(d.rank()) {
            Some(v) => {
                DeltaScalar::new(v.to_delta_poly(), self.den.to_delta_poly()).expect("nonzero den")
            }
            None => DeltaScalar::zero(),
        }
    }

    /// The coefficient of the identity diagram.
    pub fn identity_coeff(&self) -> DeltaScalar {
        self.coeff(&WalledDiagram::identity(self.shape))
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch {
                left: self.shape,
                right: other.shape,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        Ok(self.combine(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        Ok(self.combine(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.shape));
        }
        let numer = self.numer.mul(&other.numer, &self.basis);
        Ok(Self::from_parts(self.shape, numer, &self.den * &other.den))
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        use crate::arith::Coefficient;
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -other } else { other.clone() };
        }
        let (num, den) = if self.den == other.den {
            let mut n = self.numer.clone();
            if negate {
                n.sub_assign_ref(&other.numer);
            } else {
                n.add_assign_ref(&other.numer);
            }
            (n, self.den.clone())
        } else {
            let g = IntPoly::gcd(&self.den, &other.den);
            let a_cof = self.den.exact_div(&g).expect("gcd divides");
            let b_cof = other.den.exact_div(&g).expect("gcd divides");
            let mut n = self.numer.scaled(&b_cof);
            let rhs = other.numer.scaled(&a_cof);
            if negate {
                n.sub_assign_ref(&rhs);
            } else {
                n.add_assign_ref(&rhs);
            }
            (n, &self.den * &b_cof)
        };
        Self::from_parts(self.shape, num, den)
    }

    pub fn scale(&self, c: &DeltaScalar) -> Self {
        use crate::arith::Coefficient;
        if c.is_zero() || self.is_zero() {
            return Self::zero(self.shape);
        }
        let (p, ps) = IntPoly::from_delta_poly(c.numer());
        let (q, qs) = IntPoly::from_delta_poly(c.denom());
        // c = (p/ps) / (q/qs) = (p·qs) / (q·ps)
        let numer = self.numer.scaled(&p.scale(&qs));
        Self::from_parts(self.shape, numer, &self.den * &q.scale(&ps))
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&DeltaScalar::from_int(c))
    }

    /// Right multiplication by a single diagram.
    pub fn mul_diagram(&self, d: &WalledDiagram) -> Self {
        assert_eq!(d.shape(), self.shape, "shape mismatch");
        let numer = self.numer.mul_diagram_right(&self.basis, d.rank());
        Self::from_parts(self.shape, numer, self.den.clone())
    }

    /// Left multiplication by a single diagram.
    pub fn diagram_mul(&self, d: &WalledDiagram) -> Self {
        assert_eq!(d.shape(), self.shape, "shape mismatch");
        let numer = self.numer.mul_diagram_left(&self.basis, d.rank());
        Self::from_parts(self.shape, numer, self.den.clone())
    }

    /// The anti-automorphism `ι`: flip every diagram, keep coefficients.
    pub fn iota(&self) -> Self {
        AlgebraElement {
            shape: self.shape,
            den: self.den.clone(),
            numer: self.numer.flipped(&self.basis),
            basis: Arc::clone(&self.basis),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.shape);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Whether every diagram involved lies in `A_k` (acts trivially on
    /// sites `k+1..n`).
    pub fn supported_on_first(&self, k: usize) -> bool {
        self.numer
            .iter()
            .all(|(rank, _)| self.basis.diagram(rank).is_supported_on_first(k))
    }

    /// Specializes `δ` to a rational value; `None` if the denominator
    /// vanishes there.
    pub fn eval_delta(&self, delta: &Rational) -> Option<Vec<(WalledDiagram, Rational)>> {
        let d = self.den.eval(delta);
        if d.is_zero() {
            return None;
        }
        Some(
            self.numer
                .iter()
                .map(|(k, v)| (self.basis.diagram(k), v.eval(delta) / &d))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        )
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElement{}[", self.shape)?;
        for (i, (d, c)) in self.terms().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({c})*{:?}", d.img_one_based())?;
        }
        f.write_str("]")
    }
}

impl Add<&AlgebraElement> for &AlgebraElement {
    type Output = AlgebraElement;
    /// Panics on mismatched shapes; see [`AlgebraElement::checked_add`].
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.checked_add(rhs).expect("shape mismatch in addition")
    }
}

impl Sub<&AlgebraElement> for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.checked_sub(rhs)
            .expect("shape mismatch in subtraction")
    }
}

impl Mul<&AlgebraElement> for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.checked_mul(rhs)
            .expect("shape mismatch in multiplication")
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            shape: self.shape,
            den: self.den.clone(),
            numer: self.numer.map_coeffs(|v| -v),
            basis: Arc::clone(&self.basis),
        }
    }
}

impl Neg for AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        -&self
    }
}

crate::arith::forward_owned_binop!(AlgebraElement, Add, add);
crate::arith::forward_owned_binop!(AlgebraElement, Sub, sub);
crate::arith::forward_owned_binop!(AlgebraElement, Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(shape: Shape, g: Generator) -> AlgebraElement {
        AlgebraElement::generator(shape, g).unwrap()
    }

    fn sc(text: &str) -> DeltaScalar {
        text.parse().unwrap()
    }

    #[test]
    fn linear_structure() {
        let shape = Shape::new(2, 2);
        let a = &gen(shape, Generator::S(1)).scale(&sc("1/d")) + &gen(shape, Generator::D);
        assert_eq!(&a + &AlgebraElement::zero(shape), a);
        assert!((&a - &a).is_zero());
        assert!((&a - &a).terms().is_empty());
        let d = gen(shape, Generator::D);
        assert_eq!(d.scale(&DeltaScalar::delta()).scale(&sc("1/d")), d);
    }

    #[test]
    fn small_products() {
        let s11 = Shape::new(1, 1);
        let d = gen(s11, Generator::D);
        assert_eq!(&d * &d, d.scale(&DeltaScalar::delta()));
        let p = d.scale(&sc("1/d"));
        assert_eq!(&p * &p, p);

        let shape = Shape::new(2, 2);
        let one = AlgebraElement::one(shape);
        let s1 = gen(shape, Generator::S(1));
        assert!((&(&one - &s1) * &(&one + &s1)).is_zero());
    }

    #[test]
    fn canonical_form_is_unique() {
        let shape = Shape::new(1, 1);
        let d = gen(shape, Generator::D);
        let a = d.scale(&sc("(d+1)/(d^2-1)"));
        let b = d.scale(&sc("2/(2*d-2)"));
        assert_eq!(a, b);
        assert_eq!(
            a.coeff(&WalledDiagram::generator(shape, Generator::D).unwrap()),
            sc("1/(d-1)")
        );
    }

    #[test]
    fn shape_mismatch_is_reported() {
        let a = AlgebraElement::one(Shape::new(1, 1));
        let b = AlgebraElement::one(Shape::new(2, 1));
        assert!(matches!(
            a.checked_add(&b),
            Err(Error::ShapeMismatch { .. })
        ));
        assert!(matches!(
            a.checked_mul(&b),
            Err(Error::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn iota_reverses_products() {
        let shape = Shape::new(2, 2);
        let s1 = gen(shape, Generator::S(1));
        let d = gen(shape, Generator::D);
        assert_eq!((&s1 * &d).iota(), &d * &s1);
        assert_eq!(
            AlgebraElement::one(shape).iota(),
            AlgebraElement::one(shape)
        );
    }
}
