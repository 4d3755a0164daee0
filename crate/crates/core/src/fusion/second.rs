use super::baxter::{int_fraction, Affine, BaxterKind, FactorProduct};
use super::engine::{evaluate_step, ScalarFactors, StepDiagnostics};
use super::first::{points, sym_group_idempotent};
use super::literal::{LiteralProduct, MultiAffine};
use crate::algebra::AlgebraElement;
use crate::arith::{DeltaScalar, IntPoly, Rational};
use crate::error::{Error, Result};
use crate::tableaux::WalledTableau;

/// `3δ + 1/2`: its δ-coefficient and half-integer constant keep every
/// modified denominator away from the integral contents.
pub fn default_h() -> DeltaScalar {
    &DeltaScalar::linear(0, 3) + &DeltaScalar::from_rational(Rational::new(1.into(), 2.into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// `E_{T_r}·Å′·S̊′·Å·S̊`
    Forward,
    /// `E_{T_r}·Å·S̊′·Å′·S̊`
    Mirror,
}

fn delta() -> IntPoly {
    IntPoly::from_ints(&[0, 1])
}

/// Step `k` of the forward recursion: the descending `s′` block, the
/// ascending `d′` block, the descending `d` block and the ascending `s`
/// block.
pub fn second_step_function(t: &WalledTableau, k: usize, h: &DeltaScalar) -> Result<FactorProduct> {
    let shape = t.shape();
    let r = shape.r;
    if k <= r || k > shape.n() || t.len() + 1 < k {
        return Err(Error::IndexOutOfRange(format!("second procedure step {k}")));
    }
    let c = points(t)?;
    let mut psi = FactorProduct::new(shape);
    for i in (r + 1..k).rev() {
        psi.push(
            BaxterKind::Sprime,
            i,
            k,
            &Affine::plus_u(&c[i - 1]),
            Some(h),
        )?;
    }
    for i in 1..=r {
        psi.push(
            BaxterKind::Dprime,
            i,
            k,
            &Affine::minus_u(&c[i - 1]),
            Some(h),
        )?;
    }
    for i in (1..=r).rev() {
        psi.push(BaxterKind::D, i, k, &Affine::plus_u(&c[i - 1]), None)?;
    }
    for i in r + 1..k {
        psi.push(BaxterKind::S, i, k, &Affine::minus_u(&c[i - 1]), None)?;
    }
    Ok(psi)
}

/// The `h`-dependent forms `u − h + δ` and `u + c_k − h`, scaled by the
/// denominator of `h`.
fn h_forms(c_k: &IntPoly, h: &DeltaScalar) -> (Affine, Affine) {
    let (hn, hd) = int_fraction(h);
    let top = Affine::new(&hd.shift(1) - &hn, hd.clone());
    let bottom = Affine::new(&(&hd * c_k) - &hn, hd);
    (top, bottom)
}

/// The live part of the modified prefactor at step `k > r`.
pub fn second_step_prefactor(
    t: &WalledTableau,
    k: usize,
    h: &DeltaScalar,
) -> Result<ScalarFactors> {
    let r = t.shape().r;
    let c = points(t)?;
    let c_k = c
        .get(k.wrapping_sub(1))
        .filter(|_| k > r)
        .ok_or_else(|| Error::IndexOutOfRange(format!("second procedure step {k}")))?;
    let (top, bottom) = h_forms(c_k, h);
    let mut z = ScalarFactors::one()
        .times(Affine::u_minus(c_k))
        .times(top)
        .over(Affine::u_minus(&delta()))
        .over(bottom);
    for cj in &c[r..k - 1] {
        z = z.times_square_ratio(cj);
    }
    Ok(z)
}

fn check_generic(psi: &FactorProduct, c: &IntPoly, k: usize, h: &DeltaScalar) -> Result<()> {
    let (top, bottom) = h_forms(c, h);
    let modified = psi
        .factors
        .iter()
        .filter(|f| matches!(f.kind, BaxterKind::Sprime | BaxterKind::Dprime))
        .map(|f| &f.alpha);
    for form in modified.chain([&top, &bottom]) {
        if form.vanishes_at(c) || form.c1.is_zero() && form.c0.is_zero() {
            return Err(Error::NonGenericH(format!(
                "h = {h} makes a modified factor singular at step {k}"
            )));
        }
    }
    Ok(())
}

/// Forward variant, step by step.
pub fn second_procedure_trace(
    t: &WalledTableau,
    h: &DeltaScalar,
    assert_cancellation: bool,
) -> Result<(AlgebraElement, Vec<StepDiagnostics>)> {
    let shape = t.shape();
    shape.require_fusion_shape()?;
    if !t.is_complete() {
        return Err(Error::IndexOutOfRange("incomplete tableau".into()));
    }
    let c = points(t)?;
    let mut e = sym_group_idempotent(t)?;
    let mut diags = Vec::new();
    for k in shape.r + 1..=shape.n() {
        let psi = second_step_function(t, k, h)?;
        let z = second_step_prefactor(t, k, h)?;
        check_generic(&psi, &c[k - 1], k, h)?;
        let out = evaluate_step(&e, &psi, &z, &c[k - 1], k, assert_cancellation)?;
        e = out.element;
        diags.push(out.diagnostics);
    }
    Ok((e, diags))
}

/// The full product of either variant in the variables `u_{r+1},…,u_n`.
pub fn literal_second_product(
    t: &WalledTableau,
    h: &DeltaScalar,
    variant: Variant,
) -> Result<LiteralProduct> {
    let shape = t.shape();
    shape.require_fusion_shape()?;
    if !t.is_complete() {
        return Err(Error::IndexOutOfRange("incomplete tableau".into()));
    }
    let (r, n, nv) = (shape.r, shape.n(), shape.s);
    let c = points(t)?;
    let var = |j: usize| j - r - 1;
    let mut lp = LiteralProduct::new(sym_group_idempotent(t)?, nv);

    let a_block = |lp: &mut LiteralProduct| -> Result<()> {
        for j in r + 1..=n {
            for i in (1..=r).rev() {
                let arg = MultiAffine::from_terms(nv, c[i - 1].clone(), &[(var(j), 1)]);
                lp.push_factor(BaxterKind::D, i, j, &arg, None)?;
            }
        }
        Ok(())
    };
    let a_prime_block = |lp: &mut LiteralProduct| -> Result<()> {
        for j in r + 1..=n {
            for i in 1..=r {
                let arg = MultiAffine::from_terms(nv, c[i - 1].clone(), &[(var(j), -1)]);
                lp.push_factor(BaxterKind::Dprime, i, j, &arg, Some(h))?;
            }
        }
        Ok(())
    };
    let s_block = |lp: &mut LiteralProduct, kind: BaxterKind| -> Result<()> {
        let sign = if kind == BaxterKind::S { -1 } else { 1 };
        for i in r + 1..=n {
            for j in i + 1..=n {
                let arg =
                    MultiAffine::from_terms(nv, IntPoly::zero(), &[(var(i), 1), (var(j), sign)]);
                lp.push_factor(kind, i, j, &arg, Some(h))?;
            }
        }
        Ok(())
    };
    match variant {
        Variant::Forward => {
            a_prime_block(&mut lp)?;
            s_block(&mut lp, BaxterKind::Sprime)?;
            a_block(&mut lp)?;
        }
        Variant::Mirror => {
            a_block(&mut lp)?;
            s_block(&mut lp, BaxterKind::Sprime)?;
            a_prime_block(&mut lp)?;
        }
    }
    s_block(&mut lp, BaxterKind::S)?;

    let (hn, hd) = int_fraction(h);
    for i in r + 1..=n {
        let v = var(i);
        lp.times(MultiAffine::from_terms(nv, -&c[i - 1], &[(v, 1)]));
        let mut top = MultiAffine::from_terms(nv, &hd.shift(1) - &hn, &[]);
        top.c[v] = hd.clone();
        lp.times(top);
        lp.over(MultiAffine::from_terms(nv, -delta(), &[(v, 1)]));
        let mut bottom = MultiAffine::from_terms(nv, &(&hd * &c[i - 1]) - &hn, &[]);
        bottom.c[v] = hd.clone();
        lp.over(bottom);
        for j in r + 1..i {
            let x = MultiAffine::from_terms(nv, IntPoly::zero(), &[(v, 1), (var(j), -1)]);
            lp.times_square_ratio(&x);
        }
    }
    Ok(lp)
}

pub fn literal_second_idempotent(
    t: &WalledTableau,
    h: &DeltaScalar,
    variant: Variant,
) -> Result<AlgebraElement> {
    let c = points(t)?;
    literal_second_product(t, h, variant)?.evaluate(&c[t.shape().r..], true)
}
