//! Exact linear algebra over ℚ: scalars, dense matrices, canonical subspaces,
//! dual numbers and an incremental sparse solver.

mod dual;
mod echelon;
mod matrix;
mod rational;
mod subspace;
pub mod vector;

pub use dual::DualScalar;
pub use echelon::{sparse_from_dense, IncrementalEchelon, SparseRow};
pub use matrix::{Matrix, Reduction};
pub use rational::{ParseRationalError, Rational};
pub use subspace::Subspace;
pub use vector::Vector;
