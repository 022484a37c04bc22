//! Exact matrices and the lattice of linear subspaces.

mod mat;
mod subspace;

pub use mat::{Mat, Rref};
pub use subspace::{image, kernel, map_image, preimage, Subspace};
