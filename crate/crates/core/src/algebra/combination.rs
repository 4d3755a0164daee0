use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{Coefficient, IntPoly};
use crate::diagram::DiagramBasis;

/// Linear combination of ranked diagrams with coefficients in `Z[δ]`.
///
/// This is the denominator-free workhorse behind [`super::AlgebraElement`]:
/// additions never normalize, and products go through an `i128` kernel
/// whenever the coefficient sizes allow it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Combination {
    terms: BTreeMap<u32, IntPoly>,
}

impl Combination {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(rank: u32, coeff: IntPoly) -> Self {
        let mut c = Self::new();
        c.add_term(rank, &coeff);
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &IntPoly)> + '_ {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    pub fn get(&self, rank: u32) -> Option<&IntPoly> {
        self.terms.get(&rank)
    }

    pub fn add_term(&mut self, rank: u32, coeff: &IntPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(rank) {
            Entry::Vacant(e) => {
                e.insert(coeff.clone());
            }
            Entry::Occupied(mut e) => {
                e.get_mut().add_assign_ref(coeff);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn add_term_owned(&mut self, rank: u32, coeff: IntPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(rank) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                e.get_mut().add_assign_ref(&coeff);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scaled_int(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        Combination {
            terms: self.terms.iter().map(|(&k, v)| (k, v.scale(c))).collect(),
        }
    }

    pub(crate) fn map_coeffs(&self, f: impl Fn(&IntPoly) -> IntPoly) -> Self {
        let mut out = Self::new();
        for (&k, v) in &self.terms {
            out.add_term_owned(k, f(v));
        }
        out
    }

    /// `self · g` for a single basis diagram of rank `g`.
    pub fn mul_diagram_right(&self, basis: &DiagramBasis, g: u32) -> Self {
        let mut out = Self::new();
        for (&a, v) in &self.terms {
            let (c, loops) = basis.product(a, g);
            out.add_term_owned(c, v.shift(loops as usize));
        }
        out
    }

    /// `g · self` for a single basis diagram of rank `g`.
    pub fn mul_diagram_left(&self, basis: &DiagramBasis, g: u32) -> Self {
        let mut out = Self::new();
        for (&a, v) in &self.terms {
            let (c, loops) = basis.product(g, a);
            out.add_term_owned(c, v.shift(loops as usize));
        }
        out
    }

    /// Diagram-wise vertical flip.
    pub fn flipped(&self, basis: &DiagramBasis) -> Self {
        Combination {
            terms: self
                .terms
                .iter()
                .map(|(&k, v)| (basis.flip(k), v.clone()))
                .collect(),
        }
    }

    /// Gcd of all coefficient contents; zero for the empty combination.
    pub(crate) fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for v in self.terms.values() {
            g = num_integer::Integer::gcd(&g, &v.content());
            if num_traits::One::is_one(&g) {
                break;
            }
        }
        g
    }

    pub(crate) fn values_mut(&mut self) -> impl Iterator<Item = &mut IntPoly> {
        self.terms.values_mut()
    }

    pub(crate) fn values(&self) -> impl Iterator<Item = &IntPoly> {
        self.terms.values()
    }

    /// Full product in the algebra, with `δ^loops` weights.
    pub fn mul(&self, rhs: &Combination, basis: &DiagramBasis) -> Combination {
        if self.is_zero() || rhs.is_zero() {
            return Combination::new();
        }
        if let Some(out) = mul_i128(self, rhs, basis) {
            return out;
        }
        let mut acc: HashMap<u32, IntPoly> = HashMap::new();
        for (&a, pa) in &self.terms {
            for (&b, pb) in &rhs.terms {
                let (c, loops) = basis.product(a, b);
                acc.entry(c)
                    .or_default()
                    .add_assign_ref(&(pa * pb).shift(loops as usize));
            }
        }
        let mut out = Combination::new();
        for (k, v) in acc {
            out.add_term_owned(k, v);
        }
        out
    }
}

// Conservative check that no accumulated coefficient can overflow an i128.
fn i128_safe(a: &Combination, b: &Combination) -> bool {
    let stats = |c: &Combination| {
        let bits = c.terms.values().map(IntPoly::max_bits).max().unwrap_or(0);
        let width = c
            .terms
            .values()
            .map(|p| p.coeffs().len())
            .max()
            .unwrap_or(0);
        (bits, (c.terms.len() * width) as f64)
    };
    let (ba, na) = stats(a);
    let (bb, nb) = stats(b);
    (ba + bb) as f64 + na.log2() + nb.log2() + 2.0 < 126.0
}

const DENSE_LIMIT: usize = 1 << 22;

fn mul_i128(a: &Combination, b: &Combination, basis: &DiagramBasis) -> Option<Combination> {
    if !i128_safe(a, b) {
        return None;
    }
    let conv = |c: &Combination| -> Option<Vec<(u32, Vec<i128>)>> {
        c.terms
            .iter()
            .map(|(&k, v)| v.to_i128().map(|p| (k, p)))
            .collect()
    };
    let av = conv(a)?;
    let bv = conv(b)?;
    let da = av.iter().map(|(_, p)| p.len()).max().unwrap_or(1);
    let db = bv.iter().map(|(_, p)| p.len()).max().unwrap_or(1);
    let shape = basis.shape();
    let stride = da + db + shape.r.min(shape.s);
    let n = basis.len() as usize;

    let emit = |out: &mut Combination, rank: u32, slot: &[i128]| {
        if slot.iter().any(|&x| x != 0) {
            out.add_term_owned(rank, IntPoly::from_i128(slot));
        }
    };

    if n * stride <= DENSE_LIMIT {
        let mut acc = vec![0i128; n * stride];
        let mut touched = vec![false; n];
        for (ra, pa) in &av {
            for (rb, pb) in &bv {
                let (rc, loops) = basis.product(*ra, *rb);
                touched[rc as usize] = true;
                let base = rc as usize * stride + loops as usize;
                for (i, &x) in pa.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    let row = &mut acc[base + i..base + i + pb.len()];
                    for (slot, &y) in row.iter_mut().zip(pb) {
                        *slot += x * y;
                    }
                }
            }
        }
        let mut out = Combination::new();
        for (rank, _) in touched.iter().enumerate().filter(|(_, &t)| t) {
            emit(
                &mut out,
                rank as u32,
                &acc[rank * stride..(rank + 1) * stride],
            );
        }
        Some(out)
    } else {
        let mut acc: HashMap<u32, Vec<i128>> = HashMap::new();
        for (ra, pa) in &av {
            for (rb, pb) in &bv {
                let (rc, loops) = basis.product(*ra, *rb);
                let slot = acc.entry(rc).or_insert_with(|| vec![0; stride]);
                for (i, &x) in pa.iter().enumerate() {
                    for (j, &y) in pb.iter().enumerate() {
                        slot[loops as usize + i + j] += x * y;
                    }
                }
            }
        }
        let mut out = Combination::new();
        for (rank, slot) in acc {
            emit(&mut out, rank, &slot);
        }
        Some(out)
    }
}

impl Coefficient for Combination {
    type Scalar = IntPoly;

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_assign_ref(&mut self, other: &Self) {
        for (&k, v) in &other.terms {
            self.add_term(k, v);
        }
    }

    fn sub_assign_ref(&mut self, other: &Self) {
        for (&k, v) in &other.terms {
            self.add_term_owned(k, -v);
        }
    }

    fn scaled(&self, c: &IntPoly) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        if c.is_one() {
            return self.clone();
        }
        Combination {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{Generator, Shape, WalledDiagram};

    #[test]
    fn big_coefficients_take_the_slow_path() {
        let shape = Shape::new(1, 1);
        let basis = DiagramBasis::get(shape);
        let d = WalledDiagram::generator(shape, Generator::D)
            .unwrap()
            .rank();
        let huge = IntPoly::constant(BigInt::from(1u8) << 100u32);
        let x = Combination::single(d, huge.clone());
        let sq = x.mul(&x, &basis);
        // d·d = δ d
        assert_eq!(sq, Combination::single(d, (&huge * &huge).shift(1)));
    }
}
