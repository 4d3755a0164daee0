//! Spectral identities of the baxterized factors at random rational points.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::baxter::{baxter_value, BaxterKind};
use crate::algebra::AlgebraElement;
use crate::arith::{DeltaScalar, Rational};
use crate::diagram::Shape;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityResult {
    pub name: String,
    pub instances: usize,
    pub failures: Vec<String>,
}

impl IdentityResult {
    pub fn new(name: &str) -> Self {
        IdentityResult {
            name: name.to_string(),
            instances: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

/// Seeded source of small nonzero rationals.
pub struct RationalSampler {
    rng: ChaCha8Rng,
}

impl RationalSampler {
    pub fn new(seed: u64) -> Self {
        RationalSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn sample(&mut self) -> Rational {
        loop {
            let p: i64 = self.rng.gen_range(-40..=40);
            let q: i64 = self.rng.gen_range(1..=9);
            if p != 0 {
                return Rational::new(p.into(), q.into());
            }
        }
    }

    pub fn scalar(&mut self) -> DeltaScalar {
        DeltaScalar::from_rational(self.sample())
    }

    /// `aδ + b/2` with `b` odd: the half-integer constant keeps every
    /// modified factor of the second procedure regular at integral contents.
    pub fn generic_h(&mut self) -> DeltaScalar {
        let a = DeltaScalar::from_rational(self.sample());
        let b: i64 = 2 * self.rng.gen_range(-20..=20) + 1;
        &(&a * &DeltaScalar::delta()) + &DeltaScalar::ratio(b, 2)
    }
}

fn kind_for(shape: Shape, i: usize, j: usize) -> BaxterKind {
    if shape.side(i) == shape.side(j) {
        BaxterKind::S
    } else {
        BaxterKind::D
    }
}

/// `s_{i,j}(x)` or `d_{i,j}(x)` by parity.
pub fn w(shape: Shape, i: usize, j: usize, x: &DeltaScalar) -> Result<AlgebraElement> {
    baxter_value(shape, kind_for(shape, i, j), i, j, x, None)
}

/// `s_{i,j}(x)` on one side of the wall, `d_{i,j}(δ/2 − x)` across it.
pub fn w_uniform(shape: Shape, i: usize, j: usize, x: &DeltaScalar) -> Result<AlgebraElement> {
    match kind_for(shape, i, j) {
        BaxterKind::S => w(shape, i, j, x),
        _ => {
            let half = &DeltaScalar::delta() * &DeltaScalar::ratio(1, 2);
            w(shape, i, j, &(&half - x))
        }
    }
}

fn product(xs: &[AlgebraElement]) -> AlgebraElement {
    let mut it = xs.iter();
    let first = it.next().expect("nonempty product").clone();
    it.fold(first, |acc, x| &acc * x)
}

/// Evaluates `f` at fresh points until no factor hits a pole.
fn with_points<T>(
    sampler: &mut RationalSampler,
    mut f: impl FnMut(&DeltaScalar, &DeltaScalar) -> Result<T>,
) -> Result<(T, DeltaScalar, DeltaScalar)> {
    for _ in 0..64 {
        let (u, v) = (sampler.scalar(), sampler.scalar());
        match f(&u, &v) {
            Ok(x) => return Ok((x, u, v)),
            Err(Error::ZeroDenominator(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::ZeroDenominator("no pole-free sample found".into()))
}

fn triples(n: usize, keep: impl Fn(usize, usize, usize) -> bool) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                if i != j && j != k && i != k && keep(i, j, k) {
                    out.push((i, j, k));
                }
            }
        }
    }
    out
}

/// Checks every identity on every admissible index tuple at `points`
/// random rational points each.
pub fn identity_checks(shape: Shape, seed: u64, points: usize) -> Result<Vec<IdentityResult>> {
    let n = shape.n();
    let side = |i| shape.side(i);
    let one = AlgebraElement::one(shape);
    let delta = DeltaScalar::delta();
    let mut sampler = RationalSampler::new(seed);
    let mut results = Vec::new();

    let same_pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .filter(|&(i, j)| side(i) == side(j))
        .collect();
    let cross_pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .filter(|&(i, j)| side(i) != side(j))
        .collect();

    let mut res = IdentityResult::new("unitarity s(u)s(-u)");
    for _ in 0..points {
        for &(i, j) in &same_pairs {
            let ((lhs, rhs), u, _) = with_points(&mut sampler, |u, _| {
                let lhs = &w(shape, i, j, u)? * &w(shape, i, j, &-u)?;
                let u2 = u * u;
                let rhs = one.scale(&(&(&u2 - &DeltaScalar::one()) * &u2.inv()?));
                Ok((lhs, rhs))
            })?;
            res.record(lhs == rhs, || format!("({i},{j}) at u={u}"));
        }
    }
    results.push(res);

    let mut res = IdentityResult::new("inversion d(u)d(delta-u)");
    for _ in 0..points {
        for &(i, j) in &cross_pairs {
            let (lhs, u, _) = with_points(&mut sampler, |u, _| {
                Ok(&w(shape, i, j, u)? * &w(shape, i, j, &(&delta - u))?)
            })?;
            res.record(lhs == one, || format!("({i},{j}) at u={u}"));
        }
    }
    results.push(res);

    let mut res = IdentityResult::new("Yang-Baxter s s s");
    let idx = triples(n, |i, j, k| side(i) == side(j) && side(j) == side(k));
    for _ in 0..points {
        for &(i, j, k) in &idx {
            let ((l, r), u, v) = with_points(&mut sampler, |u, v| {
                let a = w(shape, i, j, u)?;
                let b = w(shape, i, k, &(u + v))?;
                let c = w(shape, j, k, v)?;
                Ok((
                    product(&[a.clone(), b.clone(), c.clone()]),
                    product(&[c, b, a]),
                ))
            })?;
            res.record(l == r, || format!("({i},{j},{k}) at u={u}, v={v}"));
        }
    }
    results.push(res);

    let mut res = IdentityResult::new("Yang-Baxter d d s");
    // j, k on one side, i on the other
    let idx = triples(n, |i, j, k| side(j) == side(k) && side(i) != side(j));
    for _ in 0..points {
        for &(i, j, k) in &idx {
            let ((l, r), u, v) = with_points(&mut sampler, |u, v| {
                let a = w(shape, j, i, u)?;
                let b = w(shape, k, i, &(u - v))?;
                let c = w(shape, j, k, v)?;
                Ok((
                    product(&[a.clone(), b.clone(), c.clone()]),
                    product(&[c, b, a]),
                ))
            })?;
            res.record(l == r, || format!("({i},{j},{k}) at u={u}, v={v}"));
        }
    }
    results.push(res);

    let mut res = IdentityResult::new("Yang-Baxter d s d");
    // i, k on one side, j on the other
    let idx = triples(n, |i, j, k| side(i) == side(k) && side(i) != side(j));
    for _ in 0..points {
        for &(i, j, k) in &idx {
            let ((l, r), u, v) = with_points(&mut sampler, |u, v| {
                let a = w(shape, i, j, u)?;
                let b = w(shape, i, k, &(&(&delta - u) - v))?;
                let c = w(shape, k, j, v)?;
                Ok((
                    product(&[a.clone(), b.clone(), c.clone()]),
                    product(&[c, b, a]),
                ))
            })?;
            res.record(l == r, || format!("({i},{j},{k}) at u={u}, v={v}"));
        }
    }
    results.push(res);

    let mut res = IdentityResult::new("commutation on distinct indices");
    let pairs: Vec<(usize, usize)> = same_pairs.iter().chain(&cross_pairs).copied().collect();
    for _ in 0..points {
        for &(i, j) in &pairs {
            for &(k, l) in &pairs {
                if [k, l].iter().any(|x| *x == i || *x == j) {
                    continue;
                }
                let ((lhs, rhs), u, v) = with_points(&mut sampler, |u, v| {
                    let a = w(shape, i, j, u)?;
                    let b = w(shape, k, l, v)?;
                    Ok((&a * &b, &b * &a))
                })?;
                res.record(lhs == rhs, || {
                    format!("({i},{j}),({k},{l}) at u={u}, v={v}")
                });
            }
        }
    }
    results.push(res);

    let mut res = IdentityResult::new("uniform Yang-Baxter");
    let idx = triples(n, |_, _, _| true);
    for _ in 0..points {
        for &(i, j, k) in &idx {
            let ((l, r), u, v) = with_points(&mut sampler, |u, v| {
                let a = w_uniform(shape, i, j, u)?;
                let b = w_uniform(shape, i, k, &(u + v))?;
                let c = w_uniform(shape, j, k, v)?;
                Ok((
                    product(&[a.clone(), b.clone(), c.clone()]),
                    product(&[c, b, a]),
                ))
            })?;
            res.record(l == r, || format!("({i},{j},{k}) at u={u}, v={v}"));
        }
    }
    results.push(res);

    Ok(results)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inversion_on_smallest_shape() {
        let shape = Shape::new(1, 1);
        let res = identity_checks(shape, 7, 3).unwrap();
        for r in &res {
            assert!(r.passed(), "{r:?}");
        }
        let unid = res
            .iter()
            .find(|r| r.name.starts_with("inversion"))
            .unwrap();
        assert_eq!(unid.instances, 3);
    }
}
