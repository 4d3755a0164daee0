//! Baxterized factors and the two fusion procedures.

mod baxter;
mod engine;
mod first;
pub mod identities;
mod literal;
mod minimal;
mod second;

pub use baxter::{
    baxter_factor, baxter_value, Affine, AlgebraRat, BaxterFactor, BaxterKind, FactorProduct,
};
pub use engine::{evaluate_step, ScalarFactors, StepDiagnostics, StepOutcome};
pub use first::{
    first_procedure_trace, literal_first_idempotent, literal_first_product, step_function,
    step_prefactor, sym_group_idempotent,
};
pub use identities::{identity_checks, IdentityResult};
pub use literal::{LiteralProduct, MultiAffine};
pub use minimal::{
    drop_positive_exponent, fusion_with_exponents, fusion_with_minimal_prefactor,
    minimal_prefactor, prefactor_ratio_finite, MinimalReport,
};
pub use second::{
    default_h, literal_second_idempotent, literal_second_product, second_procedure_trace,
    second_step_function, second_step_prefactor, Variant,
};

pub(crate) use first::points;

use crate::algebra::AlgebraElement;
use crate::arith::DeltaScalar;
use crate::error::Result;
use crate::tableaux::WalledTableau;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Method {
    First,
    Second { variant: Variant, h: DeltaScalar },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionConfig {
    pub method: Method,
    pub assert_cancellation: bool,
}

impl FusionConfig {
    pub fn first() -> Self {
        FusionConfig {
            method: Method::First,
            assert_cancellation: true,
        }
    }

    pub fn second(variant: Variant, h: DeltaScalar) -> Self {
        FusionConfig {
            method: Method::Second { variant, h },
            assert_cancellation: true,
        }
    }
}

impl Default for FusionConfig {
    fn default() -> Self {
        Self::first()
    }
}

/// `E_T` by the configured procedure.
///
/// The mirror variant has no one-variable recursion and is evaluated as a
/// full multivariate product, which is only practical for small shapes.
pub fn fusion_idempotent(t: &WalledTableau, cfg: &FusionConfig) -> Result<AlgebraElement> {
    match &cfg.method {
        Method::First => Ok(first_procedure_trace(t, cfg.assert_cancellation)?.0),
        Method::Second {
            variant: Variant::Forward,
            h,
        } => Ok(second_procedure_trace(t, h, cfg.assert_cancellation)?.0),
        Method::Second {
            variant: Variant::Mirror,
            h,
        } => {
            let c = points(t)?;
            literal_second_product(t, h, Variant::Mirror)?
                .evaluate(&c[t.shape().r..], cfg.assert_cancellation)
        }
    }
}

pub fn second_fusion_idempotent(
    t: &WalledTableau,
    variant: Variant,
    h: &DeltaScalar,
) -> Result<AlgebraElement> {
    fusion_idempotent(t, &FusionConfig::second(variant, h.clone()))
}

#[cfg(test)]
mod tests;
