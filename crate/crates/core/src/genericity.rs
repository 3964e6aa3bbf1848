//! Parameter guards.
//!
//! Every closed form in the crate divides by Pochhammer symbols in the module
//! parameters. Each guard below is an integer window: a linear combination of
//! the parameters that, if it lands on an integer in the window, makes some
//! denominator (or an eigenvalue collision) vanish.

use std::fmt;

use crate::error::{Error, Result};
use crate::repn::ModuleParams;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    /// The factor that vanishes, e.g. `(alpha-beta-n)_n in d*_n`.
    pub factor: String,
    /// The offending parameter combination.
    pub value: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (= {})", self.factor, self.value)
    }
}

struct Scan(Vec<Violation>);

impl Scan {
    /// Records `factor` when `value` is an integer in `lo..=hi`.
    fn window<S: Scalar>(&mut self, factor: &str, label: &str, value: S, lo: i64, hi: i64) -> bool {
        match value.as_integer() {
            Some(k) if (lo..=hi).contains(&k) => {
                self.0.push(Violation { factor: factor.to_string(), value: format!("{label} = {k}") });
                true
            }
            _ => false,
        }
    }
}

/// Lists every vanishing factor for the module `params` with pencil parameter `mu`.
/// Empty iff all six bases, the four overlap closed forms, the biorthogonality
/// data and the contiguity shift `alpha -> alpha + 1` are well defined.
pub fn genericity_check<S: Scalar>(params: &ModuleParams<S>, mu: &S) -> Vec<Violation> {
    let n = params.n() as i64;
    let (alpha, beta) = (params.alpha().clone(), params.beta().clone());
    let two = S::from_i64(2);
    let mut scan = Scan(Vec::new());

    let two_beta = two * beta.clone();
    let degenerate = scan.window("degenerate V spectrum", "2beta+1", two_beta.clone() + S::one(), 1, 2 * n - 1);
    if !degenerate {
        scan.window("(n-2beta-1)_l in e_n / (-N-n+2beta+1)_(N-l) in e*_n", "2beta", two_beta, -2, 2 * n);
    }

    let a = alpha.clone() - beta.clone();
    if !scan.window("(alpha-beta-n)_n in d*_n", "alpha-beta", a.clone(), 1, n) {
        scan.window("(n-N-alpha+beta+1)_(N-n) in d_n", "alpha-beta", a, -n - 1, 0);
    }
    scan.window("(n+1-alpha-beta)_k in V_m(n)", "alpha+beta", alpha + beta.clone(), 1, 2 * n);
    scan.window("(-beta-mu)_n in f*_n", "beta+mu", beta.clone() + mu.clone(), 0, n - 1);
    scan.window("(mu-beta)_m in St", "mu-beta", mu.clone() - beta, 1 - n, 0);
    scan.0
}

/// Guards for the Hahn polynomials with parameters `alpha_hat`, `beta_hat`.
pub fn hahn_genericity<S: Scalar>(alpha_hat: &S, beta_hat: &S, n: usize) -> Vec<Violation> {
    let n = n as i64;
    let mut scan = Scan(Vec::new());
    scan.window("(alphaHat+1)_k", "alphaHat", alpha_hat.clone(), -n, -1);
    scan.window("(betaHat+1)_k", "betaHat", beta_hat.clone(), -n, -1);
    scan.window(
        "(m+alphaHat+betaHat+1)_(N+1)",
        "alphaHat+betaHat",
        alpha_hat.clone() + beta_hat.clone(),
        -2 * n - 2,
        0,
    );
    scan.0
}

/// Guards for the rational functions `U_m`, `V_m` with parameters `a`, `b`,
/// including the shift `a -> a + 1` used by the contiguity relations.
pub fn rational_genericity<S: Scalar>(a: &S, b: &S, n: usize) -> Vec<Violation> {
    let n = n as i64;
    let mut scan = Scan(Vec::new());
    scan.window("(a-x)_k in U_m(x)", "a", a.clone(), -n - 1, n);
    scan.window("(b+1)_m, (m+b-N)_m", "b", b.clone(), -n - 1, n + 1);
    scan.window("(b+2-a-x)_k in V_m(x)", "a-b", a.clone() - b.clone(), 2 - n, n + 1);
    scan.0
}

/// Turns a violation list into [`Error::Genericity`] when it is non-empty.
pub fn require_generic(violations: Vec<Violation>) -> Result<()> {
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Error::Genericity(violations))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p.into(), d.into())
    }

    #[test]
    fn generic_draw_is_clean() {
        let p = ModuleParams::unit_gauge(6, q(17, 5), q(3, 7));
        assert!(genericity_check(&p, &q(2, 11)).is_empty());
    }

    #[test]
    fn alpha_minus_beta_collision_names_dstar_factor() {
        let p = ModuleParams::unit_gauge(4, q(2, 1) + q(3, 7), q(3, 7));
        let v = genericity_check(&p, &q(2, 11));
        assert_eq!(v.len(), 1);
        assert!(v[0].factor.contains("d*_n"), "{}", v[0]);
    }

    #[test]
    fn degenerate_v_spectrum() {
        let p = ModuleParams::unit_gauge(3, q(17, 5), q(1, 1));
        let v = genericity_check(&p, &q(2, 11));
        assert!(v.iter().any(|x| x.factor == "degenerate V spectrum"));
    }

    #[test]
    fn standalone_guards() {
        assert!(hahn_genericity(&q(1, 3), &q(2, 5), 4).is_empty());
        assert_eq!(hahn_genericity(&q(-2, 1), &q(2, 5), 4).len(), 1);
        assert!(rational_genericity(&q(9, 2), &q(1, 3), 7).is_empty());
        assert!(!rational_genericity(&q(2, 1), &q(1, 3), 4).is_empty());
    }
}
