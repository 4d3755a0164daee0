//! Consecutive evaluation of a full multivariate product, with every
//! variable live until its turn. Slow, but it follows the defining formulas
//! literally and serves as a cross-check of the stepwise engine.

use std::collections::{BTreeMap, HashMap};

use super::baxter::{check_kind_pair, kind_transform, BaxterKind};
use crate::algebra::{AlgebraElement, Combination};
use crate::arith::{Coefficient, DeltaScalar, IntPoly, UniPoly};
use crate::diagram::Shape;
use crate::error::{Error, Result};

/// Affine form `c0 + Σ c[v]·u_v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiAffine {
    pub c0: IntPoly,
    pub c: Vec<IntPoly>,
}

impl MultiAffine {
    pub fn constant(nvars: usize, c0: IntPoly) -> Self {
        MultiAffine {
            c0,
            c: vec![IntPoly::zero(); nvars],
        }
    }

    /// `c0 + Σ sign·u_v` over the listed variables.
    pub fn from_terms(nvars: usize, c0: IntPoly, terms: &[(usize, i64)]) -> Self {
        let mut out = Self::constant(nvars, c0);
        for &(v, k) in terms {
            out.c[v] = &out.c[v] + &IntPoly::from_ints(&[k]);
        }
        out
    }

    fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c.iter().all(IntPoly::is_zero)
    }

    fn scale(&self, k: &IntPoly) -> Self {
        MultiAffine {
            c0: &self.c0 * k,
            c: self.c.iter().map(|x| x * k).collect(),
        }
    }

    /// A nonzero multiple of `u_v − p` with no other variable.
    fn vanishes_at(&self, v: usize, p: &IntPoly) -> bool {
        !self.c[v].is_zero()
            && self
                .c
                .iter()
                .enumerate()
                .all(|(w, x)| w == v || x.is_zero())
            && (&self.c0 + &(&self.c[v] * p)).is_zero()
    }

    fn substitute(&mut self, v: usize, p: &IntPoly) {
        let add = &self.c[v] * p;
        self.c0 = &self.c0 + &add;
        self.c[v] = IntPoly::zero();
    }
}

#[derive(Clone, Debug)]
struct MultiFactor {
    g: u32,
    alpha: MultiAffine,
    beta: IntPoly,
}

type Poly = BTreeMap<Vec<u16>, Combination>;

/// `scalars(u) · prefix · Π factors(u)` in several variables.
#[derive(Clone, Debug)]
pub struct LiteralProduct {
    shape: Shape,
    nvars: usize,
    prefix: AlgebraElement,
    factors: Vec<MultiFactor>,
    num: Vec<MultiAffine>,
    den: Vec<MultiAffine>,
}

impl LiteralProduct {
    pub fn new(prefix: AlgebraElement, nvars: usize) -> Self {
        LiteralProduct {
            shape: prefix.shape(),
            nvars,
            prefix,
            factors: Vec::new(),
            num: Vec::new(),
            den: Vec::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn push_factor(
        &mut self,
        kind: BaxterKind,
        i: usize,
        j: usize,
        arg: &MultiAffine,
        h: Option<&DeltaScalar>,
    ) -> Result<()> {
        let g = check_kind_pair(self.shape, kind, i, j)?;
        let (scale, shift, beta) = kind_transform(kind, h)?;
        let mut alpha = arg.scale(&scale);
        alpha.c0 = &alpha.c0 + &shift;
        if alpha.is_zero() {
            return Err(Error::ZeroDenominator(format!(
                "factor on ({i},{j}) has an identically vanishing denominator"
            )));
        }
        self.factors.push(MultiFactor { g, alpha, beta });
        Ok(())
    }

    pub fn times(&mut self, a: MultiAffine) {
        self.num.push(a);
    }

    pub fn over(&mut self, a: MultiAffine) {
        self.den.push(a);
    }

    /// Multiplies by `x²/(x²−1)` for the form `x`.
    pub fn times_square_ratio(&mut self, x: &MultiAffine) {
        let one = IntPoly::one();
        let mut plus = x.clone();
        plus.c0 = &plus.c0 + &one;
        let mut minus = x.clone();
        minus.c0 = &minus.c0 - &one;
        self.num.push(x.clone());
        self.num.push(x.clone());
        self.den.push(plus);
        self.den.push(minus);
    }

    fn expand(&self) -> Poly {
        let basis = self.prefix.basis().clone();
        let mut p: Poly = BTreeMap::new();
        if !self.prefix.is_zero() {
            p.insert(vec![0; self.nvars], self.prefix.numer().clone());
        }
        for f in &self.factors {
            let mut next: Poly = BTreeMap::new();
            let mut add = |key: Vec<u16>, c: Combination| {
                if c.is_zero() {
                    return;
                }
                next.entry(key).or_default().add_assign_ref(&c);
            };
            for (mono, coef) in &p {
                if !f.alpha.c0.is_zero() {
                    add(mono.clone(), coef.scaled(&f.alpha.c0));
                }
                for (v, cv) in f.alpha.c.iter().enumerate() {
                    if cv.is_zero() {
                        continue;
                    }
                    let mut m = mono.clone();
                    m[v] += 1;
                    add(m, coef.scaled(cv));
                }
                add(
                    mono.clone(),
                    coef.mul_diagram_right(&basis, f.g).scaled(&f.beta),
                );
            }
            next.retain(|_, c| !c.is_zero());
            p = next;
        }
        p
    }

    /// Sets `u_0 = points[0]`, then `u_1 = points[1]`, and so on, cancelling
    /// the poles met at each stage exactly.
    pub fn evaluate(
        &self,
        points: &[IntPoly],
        assert_cancellation: bool,
    ) -> Result<AlgebraElement> {
        if points.len() != self.nvars {
            return Err(Error::IndexOutOfRange(format!(
                "{} evaluation points for {} variables",
                points.len(),
                self.nvars
            )));
        }
        let mut p = self.expand();
        let mut num = self.num.clone();
        let mut den: Vec<MultiAffine> = self.den.clone();
        den.extend(self.factors.iter().map(|f| f.alpha.clone()));
        let mut num_scalar = IntPoly::one();
        let mut den_scalar = self.prefix.den().clone();
        if num.iter().any(MultiAffine::is_zero) {
            return Ok(AlgebraElement::zero(self.shape));
        }

        for (v, c) in points.iter().enumerate() {
            let mut zeros = 0usize;
            let mut poles = 0usize;
            num.retain(|a| {
                if a.vanishes_at(v, c) {
                    zeros += 1;
                    num_scalar = &num_scalar * &a.c[v];
                    false
                } else {
                    true
                }
            });
            den.retain(|a| {
                if a.vanishes_at(v, c) {
                    poles += 1;
                    den_scalar = &den_scalar * &a.c[v];
                    false
                } else {
                    true
                }
            });
            if zeros > poles {
                return Ok(AlgebraElement::zero(self.shape));
            }
            let surplus = poles - zeros;

            let mut groups: HashMap<Vec<u16>, Vec<Combination>> = HashMap::new();
            for (mono, coef) in p {
                let e = mono[v] as usize;
                let mut key = mono;
                key[v] = 0;
                let slot = groups.entry(key).or_default();
                if slot.len() <= e {
                    slot.resize(e + 1, Combination::new());
                }
                slot[e] = coef;
            }
            let mut next: Poly = BTreeMap::new();
            for (key, coeffs) in groups {
                let poly = UniPoly::new(coeffs, Combination::new());
                let q = poly.divide_linear_power(c, surplus).map_err(|e| match e {
                    Error::NonzeroRemainder { completed, .. } if assert_cancellation => {
                        Error::CancellationFailure {
                            step: v + 1,
                            point: c.to_string(),
                            pole_order: surplus - completed,
                        }
                    }
                    _ => Error::PoleAtEvaluation {
                        step: v + 1,
                        point: c.to_string(),
                    },
                })?;
                let value = q.eval(c);
                if !value.is_zero() {
                    next.insert(key, value);
                }
            }
            p = next;
            for a in num.iter_mut().chain(den.iter_mut()) {
                a.substitute(v, c);
            }
            if p.is_empty() {
                return Ok(AlgebraElement::zero(self.shape));
            }
        }

        for a in &num {
            num_scalar = &num_scalar * &a.c0;
        }
        for a in &den {
            if a.c0.is_zero() {
                return Err(Error::ZeroDenominator(
                    "a denominator form vanished without a matching pole".into(),
                ));
            }
            den_scalar = &den_scalar * &a.c0;
        }
        let value = p.remove(&vec![0; self.nvars]).unwrap_or_default();
        Ok(AlgebraElement::from_parts(
            self.shape,
            value.map_coeffs(|x| x * &num_scalar),
            den_scalar,
        ))
    }
}
