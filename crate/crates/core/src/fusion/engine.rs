use serde::Serialize;

use super::baxter::{right_factor, Affine, FactorProduct};
use crate::algebra::{AlgebraElement, Combination};
use crate::arith::{IntPoly, UniPoly};
use crate::error::{Error, Result};

/// Scalar rational function of `u` kept as a ratio of products of affine
/// forms, so that zeros and poles at the evaluation point can be counted
/// without factoring.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScalarFactors {
    pub num: Vec<Affine>,
    pub den: Vec<Affine>,
}

impl ScalarFactors {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn times(mut self, a: Affine) -> Self {
        self.num.push(a);
        self
    }

    pub fn over(mut self, a: Affine) -> Self {
        self.den.push(a);
        self
    }

    /// Multiplies by `(u−c)²/((u−c)²−1)`, with the denominator split into
    /// `(u−c−1)(u−c+1)`.
    pub fn times_square_ratio(self, c: &IntPoly) -> Self {
        let one = IntPoly::one();
        self.times(Affine::u_minus(c))
            .times(Affine::u_minus(c))
            .over(Affine::u_minus(&(c + &one)))
            .over(Affine::u_minus(&(c - &one)))
    }

    pub fn num_poly(&self) -> UniPoly<IntPoly> {
        product(&self.num)
    }

    pub fn den_poly(&self) -> UniPoly<IntPoly> {
        product(&self.den)
    }

    /// Order of vanishing at `c` (negative for a pole), or `None` when a
    /// numerator form is identically zero.
    pub fn order_at(&self, c: &IntPoly) -> Option<i64> {
        if self.num.iter().any(Affine::is_zero) {
            return None;
        }
        let count = |v: &[Affine]| v.iter().filter(|a| a.vanishes_at(c)).count() as i64;
        Some(count(&self.num) - count(&self.den))
    }
}

fn product(forms: &[Affine]) -> UniPoly<IntPoly> {
    forms.iter().fold(
        UniPoly::constant(IntPoly::one(), IntPoly::zero()),
        |acc, a| acc.mul(&a.to_poly()),
    )
}

/// What happened at one evaluation `u = c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepDiagnostics {
    pub step: usize,
    pub point: String,
    /// Number of denominator forms vanishing at the point.
    pub pole_order: usize,
    /// Number of numerator forms vanishing at the point.
    pub zero_order: usize,
    /// Exact divisions of the algebra numerator by `u − c`.
    pub divisions: usize,
    /// The evaluated element is zero.
    pub vanished: bool,
}

#[derive(Clone, Debug)]
pub struct StepOutcome {
    pub element: AlgebraElement,
    pub diagnostics: StepDiagnostics,
}

/// Evaluates `z(u) · E_prev · ψ(u)` at `u = c`.
///
/// The algebra part is expanded denominator-free: every factor of `ψ`
/// contributes its numerator `α(u)·1 + β·g` and its scalar denominator
/// `α(u)`. Forms of `z` and the `α`s that vanish at `c` are counted; the
/// surplus pole order must divide the algebra numerator exactly. With
/// `assert_cancellation` a failure is a [`Error::CancellationFailure`],
/// otherwise a [`Error::PoleAtEvaluation`].
pub fn evaluate_step(
    e_prev: &AlgebraElement,
    psi: &FactorProduct,
    z: &ScalarFactors,
    c: &IntPoly,
    step: usize,
    assert_cancellation: bool,
) -> Result<StepOutcome> {
    let shape = e_prev.shape();
    if psi.shape != shape {
        return Err(Error::ShapeMismatch {
            left: shape,
            right: psi.shape,
        });
    }
    let basis = e_prev.basis().clone();
    let mut diagnostics = StepDiagnostics {
        step,
        point: c.to_string(),
        pole_order: 0,
        zero_order: 0,
        divisions: 0,
        vanished: false,
    };

    let mut num_scalar = IntPoly::one();
    let mut den_scalar = e_prev.den().clone();
    for form in &z.num {
        if form.vanishes_at(c) {
            diagnostics.zero_order += 1;
            num_scalar = &num_scalar * &form.c1;
        } else {
            num_scalar = &num_scalar * &form.eval(c);
        }
    }
    for form in z.den.iter().chain(psi.factors.iter().map(|f| &f.alpha)) {
        if form.vanishes_at(c) {
            diagnostics.pole_order += 1;
            den_scalar = &den_scalar * &form.c1;
        } else {
            let v = form.eval(c);
            if v.is_zero() {
                return Err(Error::ZeroDenominator(format!(
                    "constant denominator vanishes at step {step}"
                )));
            }
            den_scalar = &den_scalar * &v;
        }
    }

    let zero_result = |mut diagnostics: StepDiagnostics| {
        diagnostics.vanished = true;
        Ok(StepOutcome {
            element: AlgebraElement::zero(shape),
            diagnostics,
        })
    };
    if num_scalar.is_zero() || diagnostics.zero_order > diagnostics.pole_order {
        return zero_result(diagnostics);
    }

    let mut q = UniPoly::constant(e_prev.numer().clone(), Combination::new());
    for f in &psi.factors {
        q = right_factor(&q, f, &basis);
    }
    let surplus = diagnostics.pole_order - diagnostics.zero_order;
    if surplus > 0 {
        q = q.divide_linear_power(c, surplus).map_err(|e| match e {
            Error::NonzeroRemainder { completed, .. } if assert_cancellation => {
                Error::CancellationFailure {
                    step,
                    point: c.to_string(),
                    pole_order: surplus - completed,
                }
            }
            _ => Error::PoleAtEvaluation {
                step,
                point: c.to_string(),
            },
        })?;
        diagnostics.divisions = surplus;
    }
    let value = q.eval(c);
    if value.is_zero() {
        return zero_result(diagnostics);
    }
    let element =
        AlgebraElement::from_parts(shape, value.map_coeffs(|p| p * &num_scalar), den_scalar);
    Ok(StepOutcome {
        element,
        diagnostics,
    })
}
