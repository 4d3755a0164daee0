use std::sync::Arc;

use crate::algebra::{AlgebraElement, Combination};
use crate::arith::{Coefficient, DeltaScalar, IntPoly, UniPoly};
use crate::diagram::{DiagramBasis, Shape, WalledDiagram};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaxterKind {
    /// `1 − s_{i,j}/u`
    S,
    /// `1 − d_{i,j}/u`
    D,
    /// `1 + s_{i,j}/(u − h)`
    Sprime,
    /// `1 + d_{i,j}/(u + h − δ)`
    Dprime,
}

impl BaxterKind {
    fn same_side(self) -> bool {
        matches!(self, BaxterKind::S | BaxterKind::Sprime)
    }

    fn needs_h(self) -> bool {
        matches!(self, BaxterKind::Sprime | BaxterKind::Dprime)
    }
}

/// Affine form `c0 + c1·u` with coefficients in `Z[δ]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Affine {
    pub c0: IntPoly,
    pub c1: IntPoly,
}

impl Affine {
    pub fn new(c0: IntPoly, c1: IntPoly) -> Self {
        Affine { c0, c1 }
    }

    pub fn constant(c0: IntPoly) -> Self {
        Affine::new(c0, IntPoly::zero())
    }

    /// `a + u`
    pub fn plus_u(a: &IntPoly) -> Self {
        Affine::new(a.clone(), IntPoly::one())
    }

    /// `a − u`
    pub fn minus_u(a: &IntPoly) -> Self {
        Affine::new(a.clone(), -IntPoly::one())
    }

    /// `u − a`
    pub fn u_minus(a: &IntPoly) -> Self {
        Affine::new(-a, IntPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero()
    }

    pub fn eval(&self, c: &IntPoly) -> IntPoly {
        &self.c0 + &(&self.c1 * c)
    }

    /// True when the form is a nonzero multiple of `u − c`.
    pub fn vanishes_at(&self, c: &IntPoly) -> bool {
        !self.c1.is_zero() && self.eval(c).is_zero()
    }

    pub fn scale(&self, k: &IntPoly) -> Self {
        Affine::new(&self.c0 * k, &self.c1 * k)
    }

    pub fn add_constant(&self, k: &IntPoly) -> Self {
        Affine::new(&self.c0 + k, self.c1.clone())
    }

    pub fn to_poly(&self) -> UniPoly<IntPoly> {
        UniPoly::new(vec![self.c0.clone(), self.c1.clone()], IntPoly::zero())
    }
}

/// Splits `x ∈ Q(δ)` as `num/den` with `num, den ∈ Z[δ]`.
pub(crate) fn int_fraction(x: &DeltaScalar) -> (IntPoly, IntPoly) {
    let (n, a) = IntPoly::from_delta_poly(x.numer());
    let (d, b) = IntPoly::from_delta_poly(x.denom());
    (n.scale(&b), d.scale(&a))
}

/// Converts a content (always in `Z[δ]`) to an [`IntPoly`].
pub(crate) fn int_point(c: &DeltaScalar) -> Result<IntPoly> {
    let (n, d) = int_fraction(c);
    if d.is_constant() {
        if let Some(q) = n.exact_div(&d) {
            return Ok(q);
        }
    }
    Err(Error::Unsupported(format!(
        "evaluation point {c} is not an integral polynomial in d"
    )))
}

/// One baxterized factor `(α(u)·1 + β·g)/α(u)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaxterFactor {
    pub kind: BaxterKind,
    pub i: usize,
    pub j: usize,
    /// Rank of the diagram `s_{i,j}` or `d_{i,j}`.
    pub g: u32,
    pub alpha: Affine,
    pub beta: IntPoly,
}

fn check_pair(shape: Shape, kind: BaxterKind, i: usize, j: usize) -> Result<WalledDiagram> {
    if i == 0 || j == 0 || i > shape.n() || j > shape.n() || i == j {
        return Err(Error::IndexOutOfRange(format!(
            "pair ({i},{j}) in shape {shape}"
        )));
    }
    let same = shape.side(i) == shape.side(j);
    if same != kind.same_side() {
        return Err(Error::ParityViolation { i, j });
    }
    WalledDiagram::pair(shape, i, j)
}

/// For a factor `(α·1 + β·g)/α` with argument `x`: `α = scale·x + shift`.
pub(crate) fn kind_transform(
    kind: BaxterKind,
    h: Option<&DeltaScalar>,
) -> Result<(IntPoly, IntPoly, IntPoly)> {
    match kind {
        BaxterKind::S | BaxterKind::D => Ok((IntPoly::one(), IntPoly::zero(), -IntPoly::one())),
        BaxterKind::Sprime | BaxterKind::Dprime => {
            let h = h.ok_or_else(|| Error::Unsupported("modified factor needs h".into()))?;
            let (hn, hd) = int_fraction(h);
            let shift = if kind == BaxterKind::Sprime {
                -&hn
            } else {
                &hn - &hd.shift(1)
            };
            Ok((hd.clone(), shift, hd))
        }
    }
}

pub(crate) fn check_kind_pair(shape: Shape, kind: BaxterKind, i: usize, j: usize) -> Result<u32> {
    Ok(check_pair(shape, kind, i, j)?.rank())
}

/// The factor of `kind` on the pair `(i,j)` with affine argument `arg`.
/// `h` is required for the primed kinds.
pub fn baxter_factor(
    shape: Shape,
    kind: BaxterKind,
    i: usize,
    j: usize,
    arg: &Affine,
    h: Option<&DeltaScalar>,
) -> Result<BaxterFactor> {
    let g = check_pair(shape, kind, i, j)?.rank();
    let (scale, shift, beta) = kind_transform(kind, h)?;
    let alpha = arg.scale(&scale).add_constant(&shift);
    if alpha.is_zero() {
        return Err(Error::ZeroDenominator(format!(
            "factor on ({i},{j}) has an identically vanishing denominator"
        )));
    }
    Ok(BaxterFactor {
        kind,
        i,
        j,
        g,
        alpha,
        beta,
    })
}

/// The factor of `kind` on `(i,j)` at a concrete argument `x`.
pub fn baxter_value(
    shape: Shape,
    kind: BaxterKind,
    i: usize,
    j: usize,
    x: &DeltaScalar,
    h: Option<&DeltaScalar>,
) -> Result<AlgebraElement> {
    let g = AlgebraElement::from_diagram(&check_pair(shape, kind, i, j)?);
    let one = AlgebraElement::one(shape);
    if kind.needs_h() && h.is_none() {
        return Err(Error::Unsupported("modified factor needs h".into()));
    }
    let (denom, sign) = match kind {
        BaxterKind::S | BaxterKind::D => (x.clone(), -1),
        BaxterKind::Sprime => (x - h.unwrap(), 1),
        BaxterKind::Dprime => (&(x + h.unwrap()) - &DeltaScalar::delta(), 1),
    };
    let inv = denom
        .inv()
        .map_err(|_| Error::ZeroDenominator(format!("factor on ({i},{j}) at {x}")))?;
    Ok(&one + &g.scale(&inv).scale_int(sign))
}

/// An ordered product of baxterized factors in one variable `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorProduct {
    pub shape: Shape,
    pub factors: Vec<BaxterFactor>,
}

impl FactorProduct {
    pub fn new(shape: Shape) -> Self {
        FactorProduct {
            shape,
            factors: Vec::new(),
        }
    }

    pub fn push(
        &mut self,
        kind: BaxterKind,
        i: usize,
        j: usize,
        arg: &Affine,
        h: Option<&DeltaScalar>,
    ) -> Result<()> {
        self.factors
            .push(baxter_factor(self.shape, kind, i, j, arg, h)?);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Expands the product into a single [`AlgebraRat`].
    pub fn to_rat(&self) -> AlgebraRat {
        let mut acc = AlgebraRat::one(self.shape);
        for f in &self.factors {
            acc.num = right_factor(&acc.num, f, &acc.basis);
            acc.den = acc.den.mul(&f.alpha.to_poly());
        }
        acc
    }
}

/// `q · (α(u)·1 + β·g)` for a numerator polynomial `q`.
pub(crate) fn right_factor(
    q: &UniPoly<Combination>,
    f: &BaxterFactor,
    basis: &DiagramBasis,
) -> UniPoly<Combination> {
    let moved = q.map(Combination::new(), |k| {
        k.mul_diagram_right(basis, f.g).scaled(&f.beta)
    });
    q.mul_linear(&f.alpha.c0, &f.alpha.c1).add(&moved)
}

/// Algebra-valued rational function `num(u)/den(u)` of one variable, with a
/// scalar denominator.
#[derive(Clone)]
pub struct AlgebraRat {
    pub num: UniPoly<Combination>,
    pub den: UniPoly<IntPoly>,
    basis: Arc<DiagramBasis>,
}

impl std::fmt::Debug for AlgebraRat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AlgebraRat")
            .field("shape", &self.shape())
            .field("num", &self.num)
            .field("den", &self.den)
            .finish()
    }
}

fn poly_prod(
    a: &UniPoly<Combination>,
    b: &UniPoly<Combination>,
    basis: &DiagramBasis,
) -> UniPoly<Combination> {
    if a.is_zero() || b.is_zero() {
        return UniPoly::zero(Combination::new());
    }
    let mut out = vec![Combination::new(); a.coeffs().len() + b.coeffs().len() - 1];
    for (i, x) in a.coeffs().iter().enumerate() {
        for (j, y) in b.coeffs().iter().enumerate() {
            out[i + j].add_assign_ref(&x.mul(y, basis));
        }
    }
    UniPoly::new(out, Combination::new())
}

fn scalar_prod(a: &UniPoly<Combination>, p: &UniPoly<IntPoly>) -> UniPoly<Combination> {
    let mut out = UniPoly::zero(Combination::new());
    for (k, c) in p.coeffs().iter().enumerate() {
        let mut shifted = vec![Combination::new(); k];
        shifted.extend(a.coeffs().iter().map(|x| x.scaled(c)));
        out = out.add(&UniPoly::new(shifted, Combination::new()));
    }
    out
}

impl AlgebraRat {
    pub fn one(shape: Shape) -> Self {
        Self::from_element(&AlgebraElement::one(shape))
    }

    pub fn from_element(e: &AlgebraElement) -> Self {
        AlgebraRat {
            num: UniPoly::constant(e.numer().clone(), Combination::new()),
            den: UniPoly::constant(e.den().clone(), IntPoly::zero()),
            basis: e.basis().clone(),
        }
    }

    /// `a(u)·e` for a scalar polynomial `a` and an element `e`.
    pub fn poly_times(p: &UniPoly<IntPoly>, e: &AlgebraElement) -> Self {
        let mut out = Self::from_element(e);
        out.num = scalar_prod(&out.num, p);
        out
    }

    /// `u·1 − x` for an algebra element `x`.
    pub fn u_minus(x: &AlgebraElement) -> Self {
        let shape = x.shape();
        let den = x.den().clone();
        let scaled_one = AlgebraElement::one(shape).numer().scaled(&den);
        AlgebraRat {
            num: UniPoly::new(
                vec![x.numer().scaled(&-IntPoly::one()), scaled_one],
                Combination::new(),
            ),
            den: UniPoly::constant(den, IntPoly::zero()),
            basis: x.basis().clone(),
        }
    }

    pub fn shape(&self) -> Shape {
        self.basis.shape()
    }

    pub fn mul(&self, other: &AlgebraRat) -> Result<AlgebraRat> {
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch {
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(AlgebraRat {
            num: poly_prod(&self.num, &other.num, &self.basis),
            den: self.den.mul(&other.den),
            basis: self.basis.clone(),
        })
    }

    /// Multiplies by the scalar rational function `p/q`.
    pub fn scale_rat(&self, p: &UniPoly<IntPoly>, q: &UniPoly<IntPoly>) -> AlgebraRat {
        AlgebraRat {
            num: scalar_prod(&self.num, p),
            den: self.den.mul(q),
            basis: self.basis.clone(),
        }
    }

    /// Equality as rational functions, by cross multiplication.
    pub fn same_function(&self, other: &AlgebraRat) -> bool {
        self.shape() == other.shape()
            && scalar_prod(&self.num, &other.den) == scalar_prod(&other.num, &self.den)
    }

    /// Value at a point where the denominator does not vanish.
    pub fn eval(&self, c: &IntPoly) -> Result<AlgebraElement> {
        let d = self.den.eval(c);
        if d.is_zero() {
            return Err(Error::PoleAtEvaluation {
                step: 0,
                point: c.to_string(),
            });
        }
        Ok(AlgebraElement::from_parts(
            self.shape(),
            self.num.eval(c),
            d,
        ))
    }
}
