//! Exact combinatorics of the triple crystal structure on higher-level Fock
//! spaces: Kashiwara crystals, level-rank duality, the Heisenberg crystal,
//! generalized Mullineux involutions and wall-crossing labels.

pub mod crystal;
pub mod error;
pub mod heisenberg;
pub mod levelrank;
pub mod mullineux;
pub mod partitions;
pub mod rational;
pub mod triple;
pub mod verify;
pub mod walls;

pub use error::{Error, Result};
pub use partitions::{Charge, ChargedMultipartition, DiagramBox, Multipartition, Partition};
pub use triple::{beta_decompose, beta_recompose, TripleCoordinates};
