//! Exact computations in the walled Brauer algebra `B_{r,s}(δ)` over the
//! field `Q(δ)`: diagrams, Jucys–Murphy elements, walled tableaux and the
//! fusion procedures producing primitive idempotents, together with the
//! certification suites that check them.

pub mod algebra;
pub mod arith;
pub mod diagram;
pub mod error;
pub mod fusion;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
