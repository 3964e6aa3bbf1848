//! Identity-check results.

use std::fmt;

use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// First grid point at which a check failed.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub indices: Vec<i64>,
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityReport {
    pub name: String,
    /// Number of grid points (scalar identities) or entries (matrix identities) checked.
    pub grid: usize,
    pub max_residual: String,
    pub pass: bool,
    pub witness: Option<Witness>,
    /// Diagnostics that are reported but not asserted.
    pub note: Option<String>,
}

impl IdentityReport {
    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} (grid {}, max residual {})",
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.grid,
            self.max_residual
        )?;
        if let Some(w) = &self.witness {
            write!(f, " first failure at {:?}: {}", w.indices, w.residual)?;
        }
        if let Some(n) = &self.note {
            write!(f, " [{n}]")?;
        }
        Ok(())
    }
}

/// Accumulates residuals of one identity over a grid.
#[derive(Debug)]
pub struct Tally<S> {
    name: String,
    grid: usize,
    worst: Option<(f64, String)>,
    witness: Option<Witness>,
    _marker: std::marker::PhantomData<S>,
}

impl<S: Scalar> Tally<S> {
    pub fn new(name: impl Into<String>) -> Self {
        Tally { name: name.into(), grid: 0, worst: None, witness: None, _marker: Default::default() }
    }

    /// Records one residual (all terms already moved to one side).
    pub fn record(&mut self, indices: &[i64], residual: &S) {
        self.grid += 1;
        let size = residual.residual_size();
        let worse = match &self.worst {
            None => true,
            Some((w, _)) => size > *w || (size.is_nan() && !w.is_nan()),
        };
        if worse {
            self.worst = Some((size, residual.render_residual()));
        }
        if self.witness.is_none() && !residual.is_negligible() {
            self.witness = Some(Witness { indices: indices.to_vec(), residual: residual.to_string() });
        }
    }

    /// Sums `terms` and records the sum.
    pub fn record_terms(&mut self, indices: &[i64], terms: impl IntoIterator<Item = S>) {
        let sum = terms.into_iter().fold(S::zero(), |acc, t| acc + t);
        self.record(indices, &sum);
    }

    /// Records `lhs - rhs`.
    pub fn record_eq(&mut self, indices: &[i64], lhs: S, rhs: S) {
        self.record(indices, &(lhs - rhs));
    }

    /// Records every entry of a residual matrix, indexed `(tag, i, j)`.
    pub fn record_matrix(&mut self, tag: i64, residual: &Matrix<S>) {
        for (i, j, x) in residual.entries() {
            self.record(&[tag, i as i64, j as i64], x);
        }
    }

    /// Marks a structural failure that has no numeric residual.
    pub fn fail(&mut self, indices: &[i64], why: impl Into<String>) {
        self.grid += 1;
        if self.witness.is_none() {
            self.witness = Some(Witness { indices: indices.to_vec(), residual: why.into() });
        }
    }

    pub fn finish(self) -> IdentityReport {
        let max_residual = match self.worst {
            Some((_, text)) => text,
            None => S::zero().render_residual(),
        };
        IdentityReport {
            name: self.name,
            grid: self.grid,
            max_residual,
            pass: self.witness.is_none(),
            witness: self.witness,
            note: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Float, Rational};

    #[test]
    fn exact_tally_reports_first_failure() {
        let mut t = Tally::<Rational>::new("demo");
        t.record(&[0], &Rational::from_integer(0.into()));
        t.record(&[1], &Rational::new((-3).into(), 4.into()));
        t.record(&[2], &Rational::from_integer(2.into()));
        let r = t.finish();
        assert!(!r.pass);
        assert_eq!(r.grid, 3);
        assert_eq!(r.max_residual, "2");
        assert_eq!(r.witness.unwrap().indices, vec![1]);
    }

    #[test]
    fn float_tally_uses_relative_bound() {
        let mut t = Tally::<Float>::new("demo");
        t.record_terms(&[0], [Float::new(1.0e12), Float::new(1.0), Float::new(-1.0e12), Float::new(-1.0)]);
        assert!(t.finish().pass);
        let mut t = Tally::<Float>::new("demo");
        t.record_eq(&[0], Float::new(1.0), Float::new(1.0 + 1e-6));
        assert!(!t.finish().pass);
    }
}
