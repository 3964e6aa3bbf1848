use crate::error::{Error, Result};
use crate::report::{IdentityReport, Tally};
use crate::scalar::{factorial, hyp3f2, poch, quot, Scalar};

use super::{grid, kron, term};

/// Parameters `(alpha_hat, beta_hat, N)` of the Hahn polynomials
/// `Q_m(x) = 3F2(-m, m + alpha_hat + beta_hat + 1, -x; -N, alpha_hat + 1; 1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct HahnParams<S> {
    pub alpha_hat: S,
    pub beta_hat: S,
    pub n: usize,
}

fn degree_in_range(m: usize, n: usize) -> Result<()> {
    if m > n {
        Err(Error::DimensionMismatch(format!("degree {m} exceeds N = {n}")))
    } else {
        Ok(())
    }
}

pub fn hahn_q<S: Scalar>(m: usize, x: &S, p: &HahnParams<S>) -> Result<S> {
    degree_in_range(m, p.n)?;
    let top = [-S::from_usize(m), S::from_usize(m + 1) + p.alpha_hat.clone() + p.beta_hat.clone(), -x.clone()];
    let bottom = [-S::from_usize(p.n), p.alpha_hat.clone() + S::one()];
    hyp3f2(&top, &bottom, m)
}

/// Dual Hahn polynomial `R_m(lambda(x))`, `lambda(x) = x (x + alpha_hat + beta_hat + 1)`.
pub fn dual_hahn_r<S: Scalar>(m: usize, x: &S, p: &HahnParams<S>) -> Result<S> {
    degree_in_range(m, p.n)?;
    let top = [-S::from_usize(m), -x.clone(), x.clone() + p.alpha_hat.clone() + p.beta_hat.clone() + S::one()];
    let bottom = [-S::from_usize(p.n), p.alpha_hat.clone() + S::one()];
    hyp3f2(&top, &bottom, m)
}

impl<S: Scalar> HahnParams<S> {
    pub fn new(alpha_hat: S, beta_hat: S, n: usize) -> Self {
        HahnParams { alpha_hat, beta_hat, n }
    }

    fn s(&self) -> S {
        self.alpha_hat.clone() + self.beta_hat.clone()
    }

    pub fn q(&self, m: usize, x: &S) -> Result<S> {
        hahn_q(m, x, self)
    }

    /// `A_m = (m+ah+bh+1)(m+ah+1)(N-m) / ((2m+ah+bh+1)(2m+ah+bh+2))`.
    pub fn coef_a(&self, m: usize) -> Result<S> {
        let mm = S::from_usize(m);
        let two_m = S::from_usize(2 * m) + self.s();
        let num = (mm.clone() + self.s() + S::one())
            * (mm.clone() + self.alpha_hat.clone() + S::one())
            * (S::from_usize(self.n) - mm);
        quot(num, &((two_m.clone() + S::one()) * (two_m + S::from_i64(2))), "A_m")
    }

    /// `C_m = m (m+ah+bh+N+1)(m+bh) / ((2m+ah+bh)(2m+ah+bh+1))`.
    pub fn coef_c(&self, m: usize) -> Result<S> {
        if m == 0 {
            return Ok(S::zero());
        }
        let mm = S::from_usize(m);
        let two_m = S::from_usize(2 * m) + self.s();
        let num = mm.clone() * (mm.clone() + self.s() + S::from_usize(self.n + 1)) * (mm + self.beta_hat.clone());
        quot(num, &(two_m.clone() * (two_m + S::one())), "C_m")
    }

    /// `B(n) = (n + ah + 1)(n - N)`.
    pub fn coef_b(&self, n: usize) -> S {
        let nn = S::from_usize(n);
        (nn.clone() + self.alpha_hat.clone() + S::one()) * (nn - S::from_usize(self.n))
    }

    /// `D(n) = n (n - bh - N - 1)`.
    pub fn coef_d(&self, n: usize) -> S {
        let nn = S::from_usize(n);
        nn.clone() * (nn - self.beta_hat.clone() - S::from_usize(self.n + 1))
    }

    /// Orthogonality weight `(ah+1)_n (bh+1)_{N-n} / (n! (N-n)!)`.
    pub fn weight(&self, n: usize) -> Result<S> {
        let num = poch(&(self.alpha_hat.clone() + S::one()), n) * poch(&(self.beta_hat.clone() + S::one()), self.n - n);
        quot(num, &(factorial::<S>(n) * factorial(self.n - n)), "Hahn weight")
    }

    /// Squared norm
    /// `(-1)^m (m+ah+bh+1)_{N+1} (bh+1)_m m! / ((2m+ah+bh+1)(ah+1)_m (-N)_m N!)`.
    pub fn norm(&self, m: usize) -> Result<S> {
        let sign = if m.is_multiple_of(2) { S::one() } else { -S::one() };
        let num = sign
            * poch(&(S::from_usize(m + 1) + self.s()), self.n + 1)
            * poch(&(self.beta_hat.clone() + S::one()), m)
            * factorial(m);
        let den = (S::from_usize(2 * m + 1) + self.s())
            * poch(&(self.alpha_hat.clone() + S::one()), m)
            * poch(&-S::from_usize(self.n), m)
            * factorial(self.n);
        quot(num, &den, "Hahn norm")
    }

    /// `Q_m(n)` on the integer grid, indexed `[m][n]`.
    pub fn grid(&self) -> Result<Vec<Vec<S>>> {
        grid(self.n, |m, x| self.q(m, &S::from_usize(x)))
    }
}

/// `sum_n w(n) Q_m(n) Q_m'(n) = norm(m) delta` and the dual relation
/// `sum_m Q_m(n) Q_m(n') / norm(m) = delta / w(n)`.
pub fn check_hahn_orthogonality<S: Scalar>(p: &HahnParams<S>) -> Result<IdentityReport> {
    let q = p.grid()?;
    let dim = p.n + 1;
    let weights: Vec<S> = (0..dim).map(|n| p.weight(n)).collect::<Result<_>>()?;
    let norms: Vec<S> = (0..dim).map(|m| p.norm(m)).collect::<Result<_>>()?;
    let mut tally = Tally::new("Hahn orthogonality");
    for m in 0..dim {
        for m2 in 0..dim {
            let sum = (0..dim).fold(S::zero(), |acc, n| acc + weights[n].clone() * q[m][n].clone() * q[m2][n].clone());
            tally.record_eq(&[0, m as i64, m2 as i64], sum, norms[m].clone() * kron(m, m2));
        }
    }
    for n in 0..dim {
        for n2 in 0..dim {
            let mut sum = S::zero();
            for m in 0..dim {
                sum = sum + quot(q[m][n].clone() * q[m][n2].clone(), &norms[m], "Hahn norm")?;
            }
            let rhs = if n == n2 { quot(S::one(), &weights[n], "Hahn weight")? } else { S::zero() };
            tally.record_eq(&[1, n as i64, n2 as i64], sum, rhs);
        }
    }
    Ok(tally.finish())
}

/// `n Q_m(n) = -A_m Q_{m+1}(n) + (A_m + C_m) Q_m(n) - C_m Q_{m-1}(n)` on the full grid.
pub fn check_hahn_recurrence<S: Scalar>(p: &HahnParams<S>) -> Result<IdentityReport> {
    let q = p.grid()?;
    let mut tally = Tally::new("Hahn recurrence");
    for m in 0..=p.n {
        let (a, c) = (p.coef_a(m)?, p.coef_c(m)?);
        for n in 0..=p.n {
            let terms = [
                -S::from_usize(n) * q[m][n].clone(),
                -term(a.clone(), || Ok(q[m + 1][n].clone()))?,
                (a.clone() + c.clone()) * q[m][n].clone(),
                -term(c.clone(), || Ok(q[m - 1][n].clone()))?,
            ];
            tally.record_terms(&[m as i64, n as i64], terms);
        }
    }
    Ok(tally.finish())
}

/// `m (m + ah + bh + 1) Q_m(n) = B(n) Q_m(n+1) - (B(n) + D(n)) Q_m(n) + D(n) Q_m(n-1)`.
pub fn check_hahn_difference<S: Scalar>(p: &HahnParams<S>) -> Result<IdentityReport> {
    let q = p.grid()?;
    let mut tally = Tally::new("Hahn difference equation");
    for m in 0..=p.n {
        let eig = S::from_usize(m) * (S::from_usize(m + 1) + p.s());
        for n in 0..=p.n {
            let (b, d) = (p.coef_b(n), p.coef_d(n));
            let terms = [
                -eig.clone() * q[m][n].clone(),
                term(b.clone(), || Ok(q[m][n + 1].clone()))?,
                -(b.clone() + d.clone()) * q[m][n].clone(),
                term(d, || Ok(q[m][n - 1].clone()))?,
            ];
            tally.record_terms(&[m as i64, n as i64], terms);
        }
    }
    Ok(tally.finish())
}

/// `R_m(lambda(n)) = Q_n(m)` on the full grid.
pub fn check_hahn_duality<S: Scalar>(p: &HahnParams<S>) -> Result<IdentityReport> {
    let mut tally = Tally::new("Hahn duality");
    for m in 0..=p.n {
        for n in 0..=p.n {
            let r = dual_hahn_r(m, &S::from_usize(n), p)?;
            let q = hahn_q(n, &S::from_usize(m), p)?;
            tally.record_eq(&[m as i64, n as i64], r, q);
        }
    }
    Ok(tally.finish())
}

/// `C_0 = A_N = D(0) = B(N) = 0`.
pub fn check_hahn_boundary<S: Scalar>(p: &HahnParams<S>) -> Result<IdentityReport> {
    let mut tally = Tally::new("Hahn boundary coefficients");
    tally.record(&[0], &p.coef_c(0)?);
    tally.record(&[1], &p.coef_a(p.n)?);
    tally.record(&[2], &p.coef_d(0));
    tally.record(&[3], &p.coef_b(p.n));
    Ok(tally.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Float, Rational};

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p.into(), d.into())
    }

    #[test]
    fn examples() {
        let p = HahnParams::new(q(0, 1), q(0, 1), 4);
        assert_eq!(hahn_q(1, &q(2, 1), &p).unwrap(), q(0, 1));
        let p = HahnParams::new(q(3, 7), q(-5, 4), 5);
        for m in 0..=5 {
            assert_eq!(hahn_q(m, &q(0, 1), &p).unwrap(), q(1, 1));
            assert_eq!(dual_hahn_r(m, &q(0, 1), &p).unwrap(), q(1, 1));
        }
        assert_eq!(hahn_q(0, &q(7, 3), &p).unwrap(), q(1, 1));
        assert_eq!(dual_hahn_r(0, &q(7, 3), &p).unwrap(), q(1, 1));
        let p0 = HahnParams::new(q(0, 1), q(0, 1), 4);
        assert_eq!(hahn_q(1, &q(2, 1), &p0).unwrap(), q(1, 1) - q(2 * 2, 4));
    }

    #[test]
    fn zero_weight_norm_at_m0() {
        let p = HahnParams::new(q(3, 7), q(-5, 4), 4);
        let total = (0..=4).fold(q(0, 1), |acc, n| acc + p.weight(n).unwrap());
        assert_eq!(total, p.norm(0).unwrap());
    }

    #[test]
    fn identities_exact() {
        let p = HahnParams::new(q(3, 7), q(-5, 4), 6);
        for rep in [
            check_hahn_orthogonality(&p),
            check_hahn_recurrence(&p),
            check_hahn_difference(&p),
            check_hahn_duality(&p),
            check_hahn_boundary(&p),
        ] {
            let rep = rep.unwrap();
            assert!(rep.pass, "{rep}");
        }
    }

    #[test]
    fn identities_float() {
        let p = HahnParams::new(Float::new(3.0 / 7.0), Float::new(-5.0 / 4.0), 12);
        assert!(check_hahn_orthogonality(&p).unwrap().pass);
        assert!(check_hahn_recurrence(&p).unwrap().pass);
        assert!(check_hahn_difference(&p).unwrap().pass);
    }

    #[test]
    fn degree_out_of_range() {
        let p = HahnParams::new(q(1, 3), q(1, 5), 2);
        assert!(hahn_q(3, &q(1, 1), &p).is_err());
    }
}
