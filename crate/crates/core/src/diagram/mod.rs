//! Walled `(r,s)`-diagrams.
//!
//! A diagram is stored as a bijection `img` of `{0,…,n-1}` (`n = r+s`).
//! Source index `i < r` is the `i`-th top point and source `i ≥ r` the `i`-th
//! bottom point; target value `j < r` is the `j`-th bottom point and target
//! `j ≥ r` the `j`-th top point. Every bijection is a legal walled diagram.

mod basis;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use basis::DiagramBasis;

/// Largest `r + s` for which diagrams can be ranked into a `u32`.
pub const MAX_POINTS: usize = 12;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Shape {
    pub r: usize,
    pub s: usize,
}

impl Shape {
    pub const fn new(r: usize, s: usize) -> Self {
        Shape { r, s }
    }

    pub const fn n(&self) -> usize {
        self.r + self.s
    }

    /// `ε(j)` for a 1-based index: 0 left of the wall, 1 right of it.
    pub fn epsilon(&self, j: usize) -> Result<u8> {
        if j == 0 || j > self.n() {
            return Err(Error::IndexOutOfRange(format!(
                "epsilon index {j} outside 1..={}",
                self.n()
            )));
        }
        Ok(u8::from(j > self.r))
    }

    pub(crate) fn side(&self, j: usize) -> u8 {
        u8::from(j > self.r)
    }

    /// Fusion entry points need both sides nonempty.
    pub fn require_fusion_shape(&self) -> Result<()> {
        if self.r == 0 || self.s == 0 {
            return Err(Error::Unsupported(format!(
                "fusion requires r >= 1 and s >= 1, got {self}"
            )));
        }
        Ok(())
    }

    pub(crate) fn check_rankable(&self) -> Result<()> {
        if self.n() > MAX_POINTS {
            return Err(Error::Unsupported(format!(
                "r + s = {} exceeds the supported maximum {MAX_POINTS}",
                self.n()
            )));
        }
        Ok(())
    }

    pub fn diagram_count(&self) -> u64 {
        (1..=self.n() as u64).product()
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.r, self.s)
    }
}

impl fmt::Debug for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Shape{self}")
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WalledDiagram {
    shape: Shape,
    img: Box<[u8]>,
}

/// Named diagrams; all indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    /// `s_i`, swapping `i` and `i+1` on one side of the wall.
    S(usize),
    /// `d = d_{r,r+1}`.
    D,
    /// `s_{i,k}` with `i < k` on the same side.
    SPair(usize, usize),
    /// `d_{i,k}` with `i ≤ r < k`.
    DPair(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionResult {
    pub diagram: WalledDiagram,
    pub loops: usize,
}

impl WalledDiagram {
    pub fn identity(shape: Shape) -> Self {
        WalledDiagram {
            shape,
            img: (0..shape.n() as u8).collect(),
        }
    }

    /// Builds a diagram from a 0-based image vector; must be a bijection.
    pub fn from_img(shape: Shape, img: &[usize]) -> Result<Self> {
        let n = shape.n();
        if img.len() != n {
            return Err(Error::IndexOutOfRange(format!(
                "diagram has {} entries, shape {shape} needs {n}",
                img.len()
            )));
        }
        if n > u8::MAX as usize {
            return Err(Error::Unsupported(format!("{n} points")));
        }
        let mut seen = vec![false; n];
        for &j in img {
            if j >= n || std::mem::replace(&mut seen[j], true) {
                return Err(Error::IndexOutOfRange(format!(
                    "diagram image {img:?} is not a bijection of 0..{n}"
                )));
            }
        }
        Ok(WalledDiagram {
            shape,
            img: img.iter().map(|&j| j as u8).collect(),
        })
    }

    /// Builds a diagram from the 1-based image used in JSON.
    pub fn from_img_one_based(shape: Shape, img: &[usize]) -> Result<Self> {
        if img.contains(&0) {
            return Err(Error::IndexOutOfRange(
                "diagram images are 1-based".to_string(),
            ));
        }
        let zero: Vec<usize> = img.iter().map(|&j| j - 1).collect();
        Self::from_img(shape, &zero)
    }

    pub(crate) fn from_img_unchecked(shape: Shape, img: Box<[u8]>) -> Self {
        WalledDiagram { shape, img }
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    /// 0-based image.
    pub fn img(&self) -> &[u8] {
        &self.img
    }

    pub fn img_one_based(&self) -> Vec<usize> {
        self.img.iter().map(|&j| j as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    pub fn generator(shape: Shape, kind: Generator) -> Result<Self> {
        let (r, n) = (shape.r, shape.n());
        let bad = |what: String| Err(Error::IndexOutOfRange(what));
        let (i, k) = match kind {
            Generator::S(i) => {
                if !((1..r).contains(&i) || (r + 1..n).contains(&i)) {
                    return bad(format!("s_{i} does not exist in shape {shape}"));
                }
                (i, i + 1)
            }
            Generator::D => {
                if r == 0 || shape.s == 0 {
                    return bad(format!("d does not exist in shape {shape}"));
                }
                (r, r + 1)
            }
            Generator::SPair(i, k) => {
                let left = 1 <= i && i < k && k <= r;
                let right = r < i && i < k && k <= n;
                if !(left || right) {
                    return bad(format!("s_{{{i},{k}}} does not exist in shape {shape}"));
                }
                (i, k)
            }
            Generator::DPair(i, k) => {
                if !(1 <= i && i <= r && r < k && k <= n) {
                    return bad(format!("d_{{{i},{k}}} does not exist in shape {shape}"));
                }
                (i, k)
            }
        };
        // every named generator is the transposition (i k) in this encoding
        let mut img: Vec<u8> = (0..n as u8).collect();
        img.swap(i - 1, k - 1);
        Ok(WalledDiagram {
            shape,
            img: img.into_boxed_slice(),
        })
    }

    /// `s_{i,k}` or `d_{i,k}` for an unordered pair of distinct 1-based
    /// indices, chosen by the parity of `ε(i) + ε(k)`.
    pub fn pair(shape: Shape, i: usize, k: usize) -> Result<Self> {
        let (a, b) = if i < k { (i, k) } else { (k, i) };
        if a == b {
            return Err(Error::IndexOutOfRange(format!(
                "pair ({i},{k}) is degenerate"
            )));
        }
        if shape.side(a) == shape.side(b) {
            Self::generator(shape, Generator::SPair(a, b))
        } else {
            Self::generator(shape, Generator::DPair(a, b))
        }
    }

    /// Matching partner table over `2n` points: top `j` is point `j`, bottom
    /// `j` is point `n + j`.
    fn partners(&self) -> Vec<usize> {
        let (r, n) = (self.shape.r, self.shape.n());
        let mut p = vec![0; 2 * n];
        for (i, &j) in self.img.iter().enumerate() {
            let j = j as usize;
            let src = if i < r { i } else { n + i };
            let tgt = if j < r { n + j } else { j };
            p[src] = tgt;
            p[tgt] = src;
        }
        p
    }

    fn from_partners(shape: Shape, p: &[usize]) -> Self {
        let (r, n) = (shape.r, shape.n());
        let img: Box<[u8]> = (0..n)
            .map(|i| {
                let src = if i < r { i } else { n + i };
                let tgt = p[src];
                let j = if tgt >= n { tgt - n } else { tgt };
                debug_assert!(
                    (tgt >= n && j < r) || (tgt < n && j >= r),
                    "composition left the walled diagrams"
                );
                j as u8
            })
            .collect();
        WalledDiagram { shape, img }
    }

    /// Stacks `self` above `lower`, returning the product diagram and the
    /// number of closed loops formed in the middle row.
    pub fn compose(&self, lower: &WalledDiagram) -> Result<CompositionResult> {
        if self.shape != lower.shape {
            return Err(Error::ShapeMismatch {
                left: self.shape,
                right: lower.shape,
            });
        }
        Ok(self.compose_unchecked(lower))
    }

    pub(crate) fn compose_unchecked(&self, lower: &WalledDiagram) -> CompositionResult {
        let n = self.shape.n();
        let up = self.partners();
        let lo = lower.partners();
        let mut result = vec![usize::MAX; 2 * n];
        let mut middle_seen = vec![false; n];

        // walk from an outer point until reaching another outer point;
        // outer points are the top row of `up` (0..n) and the bottom row of
        // `lo` (reported as n..2n)
        let walk = |start_upper: bool, start: usize, middle_seen: &mut [bool]| -> usize {
            let mut in_upper = start_upper;
            let mut p = start;
            loop {
                if in_upper {
                    let q = up[p];
                    if q < n {
                        return q;
                    }
                    let m = q - n;
                    middle_seen[m] = true;
                    in_upper = false;
                    p = m;
                } else {
                    let q = lo[p];
                    if q >= n {
                        return q;
                    }
                    middle_seen[q] = true;
                    in_upper = true;
                    p = n + q;
                }
            }
        };

        for j in 0..n {
            if result[j] == usize::MAX {
                let end = walk(true, j, &mut middle_seen);
                result[j] = end;
                result[end] = j;
            }
            if result[n + j] == usize::MAX {
                let end = walk(false, n + j, &mut middle_seen);
                result[n + j] = end;
                result[end] = n + j;
            }
        }

        let mut loops = 0;
        for m in 0..n {
            if middle_seen[m] {
                continue;
            }
            loops += 1;
            // a closed cycle alternates between bottom edges of `up` and top
            // edges of `lo`
            let mut cur = m;
            loop {
                middle_seen[cur] = true;
                let other = up[n + cur] - n;
                middle_seen[other] = true;
                let next = lo[other];
                if next == m {
                    break;
                }
                cur = next;
            }
        }

        CompositionResult {
            diagram: Self::from_partners(self.shape, &result),
            loops,
        }
    }

    /// Reflection through the horizontal axis (the anti-automorphism `ι`).
    pub fn vertical_flip(&self) -> Self {
        let mut inv = vec![0u8; self.img.len()];
        for (i, &j) in self.img.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        WalledDiagram {
            shape: self.shape,
            img: inv.into_boxed_slice(),
        }
    }

    /// Lexicographic rank of the image among all `n!` diagrams.
    pub fn rank(&self) -> u32 {
        rank_perm(&self.img)
    }

    pub fn from_rank(shape: Shape, rank: u32) -> Self {
        WalledDiagram {
            shape,
            img: unrank_perm(shape.n(), rank),
        }
    }

    /// All `(r+s)!` diagrams in lexicographic order of their images.
    pub fn all(shape: Shape) -> Result<impl Iterator<Item = WalledDiagram>> {
        shape.check_rankable()?;
        let count = shape.diagram_count() as u32;
        Ok((0..count).map(move |k| Self::from_rank(shape, k)))
    }

    /// Whether the diagram acts as the identity on the sites `k+1..n`, i.e.
    /// belongs to the subalgebra `A_k`.
    pub fn is_supported_on_first(&self, k: usize) -> bool {
        self.img
            .iter()
            .enumerate()
            .skip(k)
            .all(|(i, &j)| i == j as usize)
    }
}

impl fmt::Debug for WalledDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.shape, self.img_one_based())
    }
}

pub(crate) fn rank_perm(img: &[u8]) -> u32 {
    let n = img.len();
    let mut rank: u32 = 0;
    let mut used: u32 = 0;
    for (pos, &v) in img.iter().enumerate() {
        let smaller_unused = (0..v).filter(|&w| used & (1 << w) == 0).count() as u32;
        rank = rank * (n - pos) as u32 + smaller_unused;
        used |= 1 << v;
    }
    rank
}

pub(crate) fn unrank_perm(n: usize, mut rank: u32) -> Box<[u8]> {
    let mut fact = vec![1u32; n + 1];
    for k in 1..=n {
        fact[k] = fact[k - 1] * k as u32;
    }
    let mut avail: Vec<u8> = (0..n as u8).collect();
    let mut img = Vec::with_capacity(n);
    for pos in 0..n {
        let f = fact[n - 1 - pos];
        let idx = (rank / f) as usize;
        rank %= f;
        img.push(avail.remove(idx));
    }
    img.into_boxed_slice()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dg(shape: Shape, img: &[usize]) -> WalledDiagram {
        WalledDiagram::from_img_one_based(shape, img).unwrap()
    }

    const S22: Shape = Shape::new(2, 2);

    #[test]
    fn named_generators() {
        assert_eq!(
            WalledDiagram::identity(S22).img_one_based(),
            vec![1, 2, 3, 4]
        );
        let s1 = WalledDiagram::generator(S22, Generator::S(1)).unwrap();
        assert_eq!(s1.img_one_based(), vec![2, 1, 3, 4]);
        let d = WalledDiagram::generator(S22, Generator::D).unwrap();
        assert_eq!(d.img_one_based(), vec![1, 3, 2, 4]);
        let s11 = Shape::new(1, 1);
        assert_eq!(
            WalledDiagram::generator(s11, Generator::DPair(1, 2))
                .unwrap()
                .img_one_based(),
            vec![2, 1]
        );
        assert!(WalledDiagram::generator(S22, Generator::S(2)).is_err());
        assert!(WalledDiagram::generator(S22, Generator::SPair(2, 3)).is_err());
        assert!(WalledDiagram::generator(S22, Generator::DPair(1, 2)).is_err());
    }

    #[test]
    fn loops_from_contractions() {
        let s11 = Shape::new(1, 1);
        let d = WalledDiagram::generator(s11, Generator::D).unwrap();
        let res = d.compose(&d).unwrap();
        assert_eq!(res.diagram, d);
        assert_eq!(res.loops, 1);

        let s1 = WalledDiagram::generator(S22, Generator::S(1)).unwrap();
        let res = s1.compose(&s1).unwrap();
        assert!(res.diagram.is_identity());
        assert_eq!(res.loops, 0);

        let d = WalledDiagram::generator(S22, Generator::D).unwrap();
        let s3 = WalledDiagram::generator(S22, Generator::S(3)).unwrap();
        let ds3 = d.compose(&s3).unwrap();
        let res = ds3.diagram.compose(&d).unwrap();
        assert_eq!(res.diagram, d);
        assert_eq!(ds3.loops + res.loops, 0);
    }

    #[test]
    fn identity_is_neutral() {
        let id = WalledDiagram::identity(S22);
        for x in WalledDiagram::all(S22).unwrap() {
            assert_eq!(
                id.compose(&x).unwrap(),
                CompositionResult {
                    diagram: x.clone(),
                    loops: 0
                }
            );
            assert_eq!(x.compose(&id).unwrap().diagram, x);
        }
    }

    #[test]
    fn shape_mismatch() {
        let a = WalledDiagram::identity(S22);
        let b = WalledDiagram::identity(Shape::new(1, 3));
        assert!(matches!(a.compose(&b), Err(Error::ShapeMismatch { .. })));
    }

    #[test]
    fn flips() {
        for g in [Generator::S(1), Generator::S(3), Generator::D] {
            let x = WalledDiagram::generator(S22, g).unwrap();
            assert_eq!(x.vertical_flip(), x);
        }
        let x = dg(S22, &[2, 3, 4, 1]);
        assert_eq!(x.vertical_flip().vertical_flip(), x);
    }

    #[test]
    fn epsilon_function() {
        assert_eq!(S22.epsilon(2), Ok(0));
        assert_eq!(S22.epsilon(3), Ok(1));
        assert_eq!(Shape::new(1, 1).epsilon(1), Ok(0));
        assert!(S22.epsilon(0).is_err());
        assert!(S22.epsilon(5).is_err());
    }

    #[test]
    fn rank_roundtrip() {
        let shape = Shape::new(2, 3);
        for (k, x) in WalledDiagram::all(shape).unwrap().enumerate() {
            assert_eq!(x.rank() as usize, k);
        }
        let all: Vec<_> = WalledDiagram::all(shape).unwrap().collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }
}
