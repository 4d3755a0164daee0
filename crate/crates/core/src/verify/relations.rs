use serde::Serialize;

use crate::algebra::{jm_elements, AlgebraElement};
use crate::arith::DeltaScalar;
use crate::diagram::{Generator, Shape};
use crate::error::Result;

#[derive(Clone, Debug, Serialize)]
pub struct RelationResult {
    pub name: String,
    pub instances: usize,
    pub failures: Vec<String>,
}

impl RelationResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn word(gens: &[&AlgebraElement]) -> AlgebraElement {
    let mut it = gens.iter();
    let first = (*it.next().expect("nonempty word")).clone();
    it.fold(first, |acc, g| &acc * *g)
}

/// Checks the defining relations of `B_{r,s}(δ)` on the generators
/// `s_1,…,s_{r−1}, s_{r+1},…,s_{n−1}` and `d`.
pub fn check_defining_relations(shape: Shape) -> Result<Vec<RelationResult>> {
    shape.require_fusion_shape()?;
    let (r, n) = (shape.r, shape.n());
    let s_idx: Vec<usize> = (1..n).filter(|&i| i != r).collect();
    let s = |i: usize| AlgebraElement::generator(shape, Generator::S(i));
    let d = AlgebraElement::generator(shape, Generator::D)?;
    let one = AlgebraElement::one(shape);
    let mut out = Vec::new();
    let mut check = |name: &str, cases: Vec<(String, AlgebraElement, AlgebraElement)>| {
        let failures = cases
            .iter()
            .filter(|(_, l, r)| l != r)
            .map(|(what, ..)| what.clone())
            .collect();
        out.push(RelationResult {
            name: name.to_string(),
            instances: cases.len(),
            failures,
        });
    };

    let mut cases = Vec::new();
    for &i in &s_idx {
        let si = s(i)?;
        cases.push((format!("s_{i}"), &si * &si, one.clone()));
    }
    check("s_i^2 = 1", cases);

    check(
        "d^2 = delta d",
        vec![("d".into(), &d * &d, d.scale(&DeltaScalar::delta()))],
    );

    let mut cases = Vec::new();
    for &i in &s_idx {
        if s_idx.contains(&(i + 1)) {
            let (a, b) = (s(i)?, s(i + 1)?);
            cases.push((format!("s_{i}"), word(&[&a, &b, &a]), word(&[&b, &a, &b])));
        }
    }
    check("braid", cases);

    let mut cases = Vec::new();
    for &i in &s_idx {
        for &j in &s_idx {
            if j > i + 1 {
                let (a, b) = (s(i)?, s(j)?);
                cases.push((format!("s_{i} s_{j}"), &a * &b, &b * &a));
            }
        }
    }
    check("far commutation", cases);

    let mut cases = Vec::new();
    for i in [r.wrapping_sub(1), r + 1] {
        if s_idx.contains(&i) {
            let a = s(i)?;
            cases.push((format!("s_{i}"), word(&[&d, &a, &d]), d.clone()));
        }
    }
    check("d s_{r+-1} d = d", cases);

    let mut cases = Vec::new();
    for &i in &s_idx {
        if i + 1 != r && i != r + 1 {
            let a = s(i)?;
            cases.push((format!("s_{i}"), &d * &a, &a * &d));
        }
    }
    check("d s_i = s_i d", cases);

    let mut left = Vec::new();
    let mut right = Vec::new();
    if r >= 2 && shape.s >= 2 {
        let (a, b) = (s(r - 1)?, s(r + 1)?);
        left.push((
            "d s_{r+1} s_{r-1} d s_{r-1}".into(),
            word(&[&d, &b, &a, &d, &a]),
            word(&[&d, &b, &a, &d, &b]),
        ));
        right.push((
            "s_{r-1} d s_{r+1} s_{r-1} d".into(),
            word(&[&a, &d, &b, &a, &d]),
            word(&[&b, &d, &b, &a, &d]),
        ));
    }
    check("d s s d s_{r-1} = d s s d s_{r+1}", left);
    check("s_{r-1} d s s d = s_{r+1} d s s d", right);
    Ok(out)
}

/// `x_1,…,x_n` commute pairwise, and `x_k` commutes with the generators of
/// `A_{k−1}`.
pub fn check_jm_structure(shape: Shape) -> Result<Vec<RelationResult>> {
    let (r, n) = (shape.r, shape.n());
    let x = jm_elements(shape)?;
    let mut pairwise = RelationResult {
        name: "x_a x_b = x_b x_a".into(),
        instances: 0,
        failures: Vec::new(),
    };
    for a in 0..n {
        for b in a + 1..n {
            pairwise.instances += 1;
            if &x[a] * &x[b] != &x[b] * &x[a] {
                pairwise.failures.push(format!("x_{} x_{}", a + 1, b + 1));
            }
        }
    }
    let mut centralizer = RelationResult {
        name: "x_k commutes with A_{k-1}".into(),
        instances: 0,
        failures: Vec::new(),
    };
    for k in 2..=n {
        let mut gens = Vec::new();
        for i in (1..k - 1).filter(|&i| i != r) {
            gens.push((
                format!("s_{i}"),
                AlgebraElement::generator(shape, Generator::S(i))?,
            ));
        }
        if r >= 1 && r + 1 < k {
            gens.push((
                "d".to_string(),
                AlgebraElement::generator(shape, Generator::D)?,
            ));
        }
        for (name, g) in gens {
            centralizer.instances += 1;
            if &x[k - 1] * &g != &g * &x[k - 1] {
                centralizer.failures.push(format!("x_{k} and {name}"));
            }
        }
    }
    Ok(vec![pairwise, centralizer])
}
