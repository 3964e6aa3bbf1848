//! Exact finite-dimensional representation theory of the meta Hahn algebra.
//!
//! The crate builds the two-diagonal `(N+1)`-dimensional module of the algebra
//! generated by `Z`, `X`, `V`, the six eigenbases of the pencil `X - lambda Z`, of
//! `V` and of `W = X + mu Z` (and their transposes), and the overlaps between
//! them. The overlaps are Hahn polynomials and a pair of biorthogonal rational
//! functions; every identity those functions satisfy is exposed as a `check_*`
//! routine returning an [`IdentityReport`].
//!
//! All routines are generic over [`Scalar`]: [`Rational`] gives exact results,
//! [`Float`] gives fast double-precision results with scale-aware residuals.

// grid sums read closest to the formulas with explicit (m, n) indices
#![allow(clippy::needless_range_loop)]

pub mod appendix;
pub mod bases;
pub mod error;
pub mod genericity;
pub mod matrix;
pub mod overlaps;
pub mod repn;
pub mod report;
pub mod scalar;
pub mod specfun;

pub use bases::{build_basis, Basis, Eigenbases, Family};
pub use error::{Error, Result};
pub use genericity::{genericity_check, Violation};
pub use matrix::Matrix;
pub use overlaps::{OverlapKind, OverlapTable, ParamMap, Provenance};
pub use repn::{build_repn, ModuleParams, Representation};
pub use report::{IdentityReport, Witness};
pub use scalar::{Backend, Float, Rational, Scalar};
pub use specfun::{HahnParams, RatParams};
