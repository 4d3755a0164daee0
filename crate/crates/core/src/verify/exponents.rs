use serde::Serialize;

use crate::diagram::Shape;
use crate::error::{Error, Result};
use crate::fusion::{drop_positive_exponent, fusion_with_exponents, prefactor_ratio_finite};
use crate::tableaux::cells::{laplacian_cells, skew_cells};
use crate::tableaux::{enumerate_tableaux, Move, Partition, WalledTableau};

#[derive(Clone, Debug, Serialize)]
pub struct ExponentReport {
    pub shape: String,
    pub tableaux: usize,
    pub removal_steps: usize,
    /// Tableaux whose evaluation with the minimal prefactor failed or
    /// vanished.
    pub evaluation_failures: Vec<String>,
    pub ratio_failures: Vec<String>,
    /// Removal steps where `p_t ≠ 1 + Δ_{λ′∖ν}(k)`.
    pub laplacian_failures: Vec<String>,
    pub negative_controls: usize,
    /// Tableaux with at least one negative control.
    pub negative_control_tableaux: usize,
    /// Dropped `p = +1` factors that did not raise a cancellation failure
    /// at the expected step.
    pub negative_control_failures: Vec<String>,
}

impl ExponentReport {
    pub fn passed(&self) -> bool {
        self.evaluation_failures.is_empty()
            && self.ratio_failures.is_empty()
            && self.laplacian_failures.is_empty()
            && self.negative_control_failures.is_empty()
    }
}

/// `Δ_{λ′∖ν(U)}(i−j)` at every removal step `t` of `(i, j)`, where `U` is
/// the prefix before the step.
fn removal_laplacians(t: &WalledTableau) -> Vec<(usize, i64)> {
    let Some(lp) = t.lambda_prime() else {
        return Vec::new();
    };
    t.moves()
        .iter()
        .enumerate()
        .filter_map(|(idx, mv)| match *mv {
            Move::RemoveLeft(i, j) => {
                let nu = &t.steps()[idx].left;
                let skew = skew_cells(lp, nu);
                Some((idx + 1, laplacian_cells(&skew, i as i64 - j as i64)))
            }
            _ => None,
        })
        .collect()
}

/// Minimal-prefactor evaluation, prefactor ratio, Laplacian form of the
/// exponents and negative controls for every tableau of `shape`.
pub fn check_exponents(shape: Shape) -> Result<ExponentReport> {
    shape.require_fusion_shape()?;
    let tableaux = enumerate_tableaux(shape, None);
    let mut report = ExponentReport {
        shape: shape.to_string(),
        tableaux: tableaux.len(),
        removal_steps: 0,
        evaluation_failures: Vec::new(),
        ratio_failures: Vec::new(),
        laplacian_failures: Vec::new(),
        negative_controls: 0,
        negative_control_tableaux: 0,
        negative_control_failures: Vec::new(),
    };
    for t in &tableaux {
        let p = t.exponents();
        match fusion_with_exponents(t, &p) {
            Ok((e, _)) if !e.is_zero() => {}
            Ok(_) => report
                .evaluation_failures
                .push(format!("{}: vanished", t.spec())),
            Err(err) => report
                .evaluation_failures
                .push(format!("{}: {err}", t.spec())),
        }
        if !prefactor_ratio_finite(t)? {
            report.ratio_failures.push(t.spec());
        }
        for (step, lap) in removal_laplacians(t) {
            report.removal_steps += 1;
            if i64::from(p[step - 1]) != 1 + lap {
                report.laplacian_failures.push(format!(
                    "{} step {step}: p = {}, laplacian = {lap}",
                    t.spec(),
                    p[step - 1]
                ));
            }
        }
        let before = report.negative_controls;
        for step in 1..=shape.n() {
            let Some(dropped) = drop_positive_exponent(t, step) else {
                continue;
            };
            report.negative_controls += 1;
            match fusion_with_exponents(t, &dropped) {
                Err(Error::CancellationFailure { step: s, .. }) if s == step => {}
                other => report.negative_control_failures.push(format!(
                    "{} step {step}: {}",
                    t.spec(),
                    other.map_or_else(|e| e.to_string(), |_| "evaluated".into())
                )),
            }
        }
        if report.negative_controls > before {
            report.negative_control_tableaux += 1;
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, Serialize)]
pub struct LaplacianCase {
    pub lambda_prime: String,
    pub nu: String,
    /// Diagonal `i − j` of the removed cell.
    pub diagonal: i64,
    pub laplacian: i64,
}

/// The three local configurations around a removable corner of `ν`: open
/// on both sides inside `λ′` (−2), closed by a corner of `λ′` (0), and
/// running into a border line of `λ′` (−1).
pub fn laplacian_cases() -> Vec<LaplacianCase> {
    let cases: [(&[usize], &[usize], i64); 3] =
        [(&[2, 1], &[1], 0), (&[2, 2], &[1], 0), (&[1, 1], &[1], 0)];
    cases
        .iter()
        .map(|&(outer, inner, k)| {
            let outer = Partition::new(outer.to_vec()).expect("valid partition");
            let inner = Partition::new(inner.to_vec()).expect("valid partition");
            LaplacianCase {
                lambda_prime: outer.to_string(),
                nu: inner.to_string(),
                diagonal: k,
                laplacian: laplacian_cells(&skew_cells(&outer, &inner), k),
            }
        })
        .collect()
}
