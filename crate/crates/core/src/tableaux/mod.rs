//! Partitions, bipartitions, walled tableaux (paths in the Bratteli
//! diagram), contents, triple tableaux and diagonal statistics.

mod bipartition;
mod bratteli;
pub mod cells;
mod partition;
mod semisimple;
mod tableau;
mod triple;

pub use bipartition::{enumerate_bipartitions, Bipartition};
pub use bratteli::{BratteliEdge, BratteliGraph};
pub use cells::{diag_len, laplacian, theta};
pub use partition::{Cell, Partition};
pub use semisimple::is_semisimple;
pub use tableau::{enumerate_tableaux, parse_moves, Move, TableauJson, WalledTableau};
pub use triple::TripleTableau;
