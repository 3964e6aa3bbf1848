//! Hahn polynomials, dual Hahn polynomials and the biorthogonal rational
//! functions `U_m`, `V_m`, with the identities they satisfy.
//!
//! Recurrences and difference equations are checked with every term moved to
//! one side. A term whose coefficient is exactly zero is dropped without
//! evaluating its function value; this is how `A_N = 0`, `C_0 = 0`, `B(N) = 0`
//! and friends close the grid without referencing undefined values.

mod hahn;
mod rational;

pub use hahn::{
    check_hahn_boundary, check_hahn_difference, check_hahn_duality, check_hahn_orthogonality, check_hahn_recurrence,
    dual_hahn_r, hahn_q, HahnParams,
};
pub use rational::{
    biorth_data, check_biorthogonality, check_contiguity, check_contiguity_with, check_normalization_limit,
    check_rational_boundary, check_u_difference, check_u_recurrence, check_v_difference, check_v_recurrence, rat_u,
    rat_v, BiorthData, Cont2Form, RatParams,
};

use crate::error::Result;
use crate::scalar::Scalar;

/// `coef * value()`, or zero without calling `value` when `coef` vanishes.
pub(crate) fn term<S: Scalar>(coef: S, value: impl FnOnce() -> Result<S>) -> Result<S> {
    if coef.is_zero() {
        Ok(S::zero())
    } else {
        Ok(coef * value()?)
    }
}

/// Values `f(m, n)` on the square grid `0..=N`, indexed `[m][n]`.
pub(crate) fn grid<S: Scalar>(n: usize, f: impl Fn(usize, usize) -> Result<S>) -> Result<Vec<Vec<S>>> {
    (0..=n).map(|m| (0..=n).map(|x| f(m, x)).collect()).collect()
}

pub(crate) fn kron<S: Scalar>(i: usize, j: usize) -> S {
    if i == j {
        S::one()
    } else {
        S::zero()
    }
}
