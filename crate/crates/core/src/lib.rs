//! Exact computations on finite-dimensional left Leibniz algebras over the
//! rationals.

pub mod algebra;
pub mod biderivations;
pub mod catalog;
pub mod cli;
pub mod derivations;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod linalg;
pub mod report;
pub mod verify;

pub use algebra::{BilinearTensor, LeibnizAlgebra, LinearMapMatrix, ModuleAction, StructureTensor};
pub use error::{Error, Result};
pub use linalg::{q, Matrix, Rational, Subspace};
