//! Exact Griess-algebra computations for the fixed-point lattice VOA `V_L^+`
//! of a rootless even lattice `L`: the weight-two product table, the two
//! families of Ising vectors, their τ-involutions, and the full enumeration
//! with its consistency sweeps.

#![allow(clippy::needless_range_loop)]

pub mod classify;
pub mod cli;
pub mod cocycle;
pub mod error;
pub mod griess;
pub mod ising;
pub mod lattice;
pub mod linalg;

pub use error::{Error, Result};
