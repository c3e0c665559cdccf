//! Exact-arithmetic workbench for the linear vector optimization problem
//! `Min { Lx : x ∈ R^n_+, Ax = b }` under a polyhedral ordering cone and its
//! vector duals.
//!
//! Everything is computed over arbitrary-precision rationals: the simplex
//! engine in [`lp`] returns certificates that verify by exact substitution,
//! and the [`duality`] oracles reduce every dual-set question to one linear
//! program.

pub mod cone;
pub mod duality;
pub mod efficiency;
pub mod error;
pub mod exact;
pub mod harness;
pub mod lp;
pub mod model;
pub mod random;
mod rational;

pub use cone::{Comparison, OrderingCone};
pub use error::{Error, Result};
pub use exact::{QMatrix, QVector, Rational};
pub use model::VlpProblem;
