//! Exact linear algebra over the nonnegative rationals.
//!
//! `[Q+]` is a semiring without additive inverses, so the usual toolkit
//! (subtraction, Gaussian elimination, determinants) is unavailable at the
//! public surface. This crate provides semimodules, semi-linear maps,
//! eigen-analysis, norms and metrics, semialgebras and fuzzy-number
//! semimodules, together with audits that either confirm a law on sampled
//! inputs or return a concrete counterexample.
//!
//! ```
//! use semikit::{q, NonnegScalar};
//! assert_eq!(q("1/2") + q("1/3"), q("5/6"));
//! assert!(NonnegScalar::zero().inv().is_err());
//! ```

#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod scalar;
mod exact;
pub mod semimodule;
pub mod sample;
pub mod semilinear;
pub mod eigen;
pub mod geometry;
pub mod derived;
pub mod semialgebra;
pub mod fuzzy;

pub use error::{Error, Result};
pub use scalar::{q, NonnegScalar};
