//! Exact dense rational linear algebra and the subspace lattice.

pub mod echelon;
pub mod matrix;
pub mod rational;
pub mod subspace;

pub use matrix::{nullspace, rref, solve, Matrix};
pub use rational::{q, ParseRationalError, Rational};
pub use subspace::{subspace_contains, subspace_intersection, subspace_sum, Subspace};
