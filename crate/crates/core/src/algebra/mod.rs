//! The algebra `B_{r,s}(δ)`: linear combinations of walled diagrams,
//! multiplication with loop weights, Jucys–Murphy elements and `ι`.

mod combination;
mod element;
pub mod io;
mod jm;
pub mod words;

pub use combination::Combination;
pub use element::AlgebraElement;
pub use io::{DiagramJson, ElementJson, TermJson};
pub use jm::{jm_element, jm_elements};
