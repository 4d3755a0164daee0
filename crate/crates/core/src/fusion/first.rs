use super::baxter::{int_point, Affine, BaxterKind, FactorProduct};
use super::engine::{evaluate_step, ScalarFactors, StepDiagnostics};
use super::literal::{LiteralProduct, MultiAffine};
use crate::algebra::AlgebraElement;
use crate::arith::IntPoly;
use crate::error::{Error, Result};
use crate::tableaux::WalledTableau;

/// Contents of `t` as integral polynomials in `δ`, 0-based.
pub(crate) fn points(t: &WalledTableau) -> Result<Vec<IntPoly>> {
    t.contents().iter().map(int_point).collect()
}

fn require_prefix(t: &WalledTableau, k: usize, needed: usize) -> Result<()> {
    if k == 0 || k > t.shape().n() || t.len() < needed {
        return Err(Error::IndexOutOfRange(format!(
            "step {k} needs {needed} known steps, tableau has {}",
            t.len()
        )));
    }
    Ok(())
}

/// `ψ_k` with `u_i = c_i` for `i < k` and `u = u_k` live.
///
/// Before the wall this is `s_{1,k}(c_1−u)…s_{k−1,k}(c_{k−1}−u)`; after it,
/// `d_{r,k}(c_r+u)…d_{1,k}(c_1+u)·s_{r+1,k}(c_{r+1}−u)…s_{k−1,k}(c_{k−1}−u)`.
pub fn step_function(t: &WalledTableau, k: usize) -> Result<FactorProduct> {
    require_prefix(t, k, k - 1)?;
    let shape = t.shape();
    let c = points(t)?;
    let r = shape.r;
    let mut psi = FactorProduct::new(shape);
    let first_s = if k > r {
        for i in (1..=r).rev() {
            psi.push(BaxterKind::D, i, k, &Affine::plus_u(&c[i - 1]), None)?;
        }
        r + 1
    } else {
        1
    };
    for i in first_s..k {
        psi.push(BaxterKind::S, i, k, &Affine::minus_u(&c[i - 1]), None)?;
    }
    Ok(psi)
}

/// The part of the prefactor live at step `k`: `(u−c_k)/(u−δε(k))` times
/// `(u−c_j)²/((u−c_j)²−1)` over earlier `j` on the same side of the wall.
pub fn step_prefactor(t: &WalledTableau, k: usize) -> Result<ScalarFactors> {
    require_prefix(t, k, k)?;
    let r = t.shape().r;
    let c = points(t)?;
    let pole = if k > r {
        IntPoly::from_ints(&[0, 1])
    } else {
        IntPoly::zero()
    };
    let mut z = ScalarFactors::one()
        .times(Affine::u_minus(&c[k - 1]))
        .over(Affine::u_minus(&pole));
    let first = if k > r { r + 1 } else { 1 };
    for cj in &c[first - 1..k - 1] {
        z = z.times_square_ratio(cj);
    }
    Ok(z)
}

fn run_steps(
    t: &WalledTableau,
    steps: std::ops::RangeInclusive<usize>,
    start: AlgebraElement,
    prefactor: impl Fn(usize) -> Result<ScalarFactors>,
    assert_cancellation: bool,
) -> Result<(AlgebraElement, Vec<StepDiagnostics>)> {
    let c = points(t)?;
    let mut e = start;
    let mut diags = Vec::new();
    for k in steps {
        let out = evaluate_step(
            &e,
            &step_function(t, k)?,
            &prefactor(k)?,
            &c[k - 1],
            k,
            assert_cancellation,
        )?;
        e = out.element;
        diags.push(out.diagnostics);
    }
    Ok((e, diags))
}

/// Idempotent of the symmetric group for the first `r` steps of `t`, as an
/// element of the walled algebra of `t`'s shape.
pub fn sym_group_idempotent(t: &WalledTableau) -> Result<AlgebraElement> {
    let shape = t.shape();
    if t.len() < shape.r {
        return Err(Error::IndexOutOfRange(format!(
            "tableau has {} steps, the symmetric stage needs {}",
            t.len(),
            shape.r
        )));
    }
    let start = AlgebraElement::one(shape);
    Ok(run_steps(t, 2..=shape.r, start, |k| step_prefactor(t, k), true)?.0)
}

fn require_complete(t: &WalledTableau) -> Result<()> {
    t.shape().require_fusion_shape()?;
    if !t.is_complete() {
        return Err(Error::IndexOutOfRange(format!(
            "tableau has {} of {} steps",
            t.len(),
            t.shape().n()
        )));
    }
    Ok(())
}

/// First procedure, step by step, with per-step diagnostics.
pub fn first_procedure_trace(
    t: &WalledTableau,
    assert_cancellation: bool,
) -> Result<(AlgebraElement, Vec<StepDiagnostics>)> {
    require_complete(t)?;
    let shape = t.shape();
    let e_r = sym_group_idempotent(t)?;
    run_steps(
        t,
        shape.r + 1..=shape.n(),
        e_r,
        |k| step_prefactor(t, k),
        assert_cancellation,
    )
}

/// The prefactor times the full lexicographic product in all `n` variables.
pub fn literal_first_product(t: &WalledTableau) -> Result<LiteralProduct> {
    require_complete(t)?;
    let shape = t.shape();
    let (r, n) = (shape.r, shape.n());
    let c = points(t)?;
    let mut lp = LiteralProduct::new(AlgebraElement::one(shape), n);
    let zero = IntPoly::zero();
    for i in 1..=r {
        for j in r + 1..=n {
            let arg = MultiAffine::from_terms(n, zero.clone(), &[(i - 1, 1), (j - 1, 1)]);
            lp.push_factor(BaxterKind::D, i, j, &arg, None)?;
        }
    }
    for (lo, hi) in [(1, r), (r + 1, n)] {
        for i in lo..=hi {
            for j in i + 1..=hi {
                let arg = MultiAffine::from_terms(n, zero.clone(), &[(i - 1, 1), (j - 1, -1)]);
                lp.push_factor(BaxterKind::S, i, j, &arg, None)?;
            }
        }
    }
    let delta = IntPoly::from_ints(&[0, 1]);
    for i in 1..=n {
        lp.times(MultiAffine::from_terms(n, -&c[i - 1], &[(i - 1, 1)]));
        let pole = if i > r { -&delta } else { zero.clone() };
        lp.over(MultiAffine::from_terms(n, pole, &[(i - 1, 1)]));
    }
    for (lo, hi) in [(1, r), (r + 1, n)] {
        for i in lo..=hi {
            for j in lo..i {
                let x = MultiAffine::from_terms(n, zero.clone(), &[(i - 1, 1), (j - 1, -1)]);
                lp.times_square_ratio(&x);
            }
        }
    }
    Ok(lp)
}

/// First procedure by literal consecutive evaluation of the full product.
pub fn literal_first_idempotent(t: &WalledTableau) -> Result<AlgebraElement> {
    literal_first_product(t)?.evaluate(&points(t)?, true)
}
