//! Exact scalars, fraction-free linear algebra and integer lattices.

mod gaussian;
mod intmat;
mod lattice;
mod matrix;

pub use gaussian::GaussianRational;
pub use intmat::{hnf, snf, Hnf, IntMat, Snf};
pub use lattice::{lattice_index, IntegerLattice, LatticeIndex};
pub use matrix::{det, rank, Mat};

