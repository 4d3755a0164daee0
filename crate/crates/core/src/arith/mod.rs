//! Exact arithmetic: rationals, polynomials in `δ`, the field `Q(δ)` and
//! univariate polynomials in an evaluation variable over any coefficient
//! domain.

mod intpoly;
mod parse;
mod poly;
mod scalar;
mod upoly;

pub use num_rational::BigRational as Rational;

pub use intpoly::IntPoly;
pub use parse::parse_scalar;
pub(crate) use poly::forward_owned_binop;
pub use poly::DeltaPoly;
pub use scalar::DeltaScalar;
pub use upoly::{Coefficient, ScalarPoly, UniPoly};
