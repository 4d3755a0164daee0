use serde::Serialize;

use super::baxter::Affine;
use super::engine::{evaluate_step, ScalarFactors, StepDiagnostics};
use super::first::{points, step_function, step_prefactor, sym_group_idempotent};
use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::tableaux::WalledTableau;

/// `(u − c_k)^{p_k}` for step `k`, as scalar factors.
pub fn minimal_prefactor(t: &WalledTableau, k: usize, p: i32) -> Result<ScalarFactors> {
    let c = points(t)?;
    let c = c
        .get(k.wrapping_sub(1))
        .ok_or_else(|| Error::IndexOutOfRange(format!("step {k}")))?;
    let mut z = ScalarFactors::one();
    for _ in 0..p.unsigned_abs() {
        z = if p > 0 {
            z.times(Affine::u_minus(c))
        } else {
            z.over(Affine::u_minus(c))
        };
    }
    Ok(z)
}

#[derive(Clone, Debug, Serialize)]
pub struct MinimalReport {
    pub exponents: Vec<i32>,
    pub steps: Vec<StepDiagnostics>,
    /// The full prefactor divided by the minimal one has no pole at any
    /// evaluation point.
    pub ratio_finite: bool,
    pub vanished: bool,
}

/// Evaluates `ze_T·Ψ` after the wall with the given exponents; the
/// symmetric stage uses its own prefactor.
pub fn fusion_with_exponents(
    t: &WalledTableau,
    exponents: &[i32],
) -> Result<(AlgebraElement, Vec<StepDiagnostics>)> {
    let shape = t.shape();
    shape.require_fusion_shape()?;
    if !t.is_complete() || exponents.len() != shape.n() {
        return Err(Error::IndexOutOfRange(
            "complete tableau and one exponent per step required".into(),
        ));
    }
    let c = points(t)?;
    let mut e = sym_group_idempotent(t)?;
    let mut diags = Vec::new();
    for k in shape.r + 1..=shape.n() {
        let out = evaluate_step(
            &e,
            &step_function(t, k)?,
            &minimal_prefactor(t, k, exponents[k - 1])?,
            &c[k - 1],
            k,
            true,
        )?;
        e = out.element;
        diags.push(out.diagnostics);
    }
    Ok((e, diags))
}

/// Whether the scalar evaluations of `z_T / ze_T` are finite at every step.
pub fn prefactor_ratio_finite(t: &WalledTableau) -> Result<bool> {
    let c = points(t)?;
    let p = t.exponents();
    for k in 1..=t.shape().n() {
        match step_prefactor(t, k)?.order_at(&c[k - 1]) {
            Some(order) if order < p[k - 1] as i64 => return Ok(false),
            _ => {}
        }
    }
    Ok(true)
}

pub fn fusion_with_minimal_prefactor(t: &WalledTableau) -> Result<(AlgebraElement, MinimalReport)> {
    let exponents = t.exponents();
    let (e, steps) = fusion_with_exponents(t, &exponents)?;
    let report = MinimalReport {
        vanished: e.is_zero(),
        exponents,
        steps,
        ratio_finite: prefactor_ratio_finite(t)?,
    };
    Ok((e, report))
}

/// Exponents with the `p = +1` factor at `step` (1-based) dropped, for
/// negative controls. `None` if that step has a different exponent.
pub fn drop_positive_exponent(t: &WalledTableau, step: usize) -> Option<Vec<i32>> {
    let mut p = t.exponents();
    let slot = p.get_mut(step.checked_sub(1)?)?;
    (*slot == 1).then(|| {
        *slot = 0;
    })?;
    Some(p)
}
