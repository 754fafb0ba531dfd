//! Exact rational and integer linear algebra.

mod hnf;
mod matrix;
mod rational;
mod sparse;

pub use hnf::{hnf, hnf_contains};
pub use matrix::{kernel_basis, rref, RatMatrix};
pub use rational::{ParseRationalError, Rational};
pub use sparse::{IntMatrix, SparseMatrix, SparseVec};
