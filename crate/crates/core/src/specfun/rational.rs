use crate::error::{Error, Result};
use crate::report::{IdentityReport, Tally};
use crate::scalar::{factorial, hyp3f2, poch, poch_signed, quot, Float, Scalar};

use super::{grid, kron, term};

/// Parameters `(a, b, N)` of the rational functions
///
/// ```text
/// U_m(x) = (-1)^m (-N)_m / (b+1)_m  3F2(-x, -m, b+m-N; -N, a-x; 1)
/// V_m(x) = U_m(N - x; b+2-a, b, N)
/// ```
#[derive(Clone, Debug, PartialEq)]
pub struct RatParams<S> {
    pub a: S,
    pub b: S,
    pub n: usize,
}

pub fn rat_u<S: Scalar>(m: usize, x: &S, p: &RatParams<S>) -> Result<S> {
    if m > p.n {
        return Err(Error::DimensionMismatch(format!("degree {m} exceeds N = {}", p.n)));
    }
    let big = S::from_usize(p.n);
    let sign = if m.is_multiple_of(2) { S::one() } else { -S::one() };
    let pre = quot(sign * poch(&-big.clone(), m), &poch(&(p.b.clone() + S::one()), m), "(b+1)_m")?;
    let top = [-x.clone(), -S::from_usize(m), p.b.clone() + S::from_usize(m) - big.clone()];
    let bottom = [-big, p.a.clone() - x.clone()];
    Ok(pre * hyp3f2(&top, &bottom, m)?)
}

pub fn rat_v<S: Scalar>(m: usize, x: &S, p: &RatParams<S>) -> Result<S> {
    rat_u(m, &(S::from_usize(p.n) - x.clone()), &p.reflected())
}

/// Biorthogonality data: `sum_n W(n) V_m(n) U_m'(n) = h_m delta` and
/// `sum_m W*(m) V_m(n) U_m(n') = h*_n delta`.
#[derive(Clone, Debug, PartialEq)]
pub struct BiorthData<S> {
    pub h: Vec<S>,
    pub weights_w: Vec<S>,
    pub h_star: Vec<S>,
    pub weights_w_star: Vec<S>,
}

pub fn biorth_data<S: Scalar>(p: &RatParams<S>) -> Result<BiorthData<S>> {
    let dim = p.n + 1;
    Ok(BiorthData {
        h: (0..dim).map(|m| p.h(m)).collect::<Result<_>>()?,
        weights_w: (0..dim).map(|n| p.weight(n)).collect::<Result<_>>()?,
        h_star: (0..dim).map(|n| p.h_star(n)).collect::<Result<_>>()?,
        weights_w_star: (0..dim).map(|m| p.weight_star(m)).collect::<Result<_>>()?,
    })
}

impl<S: Scalar> RatParams<S> {
    pub fn new(a: S, b: S, n: usize) -> Self {
        RatParams { a, b, n }
    }

    /// `(a, b) -> (b + 2 - a, b)`; `V` is `U` at the reflected parameters and argument.
    pub fn reflected(&self) -> Self {
        RatParams { a: self.b.clone() + S::from_i64(2) - self.a.clone(), b: self.b.clone(), n: self.n }
    }

    /// `(a, b) -> (a + 1, b)`.
    pub fn shifted(&self) -> Self {
        RatParams { a: self.a.clone() + S::one(), ..self.clone() }
    }

    pub fn u(&self, m: usize, x: &S) -> Result<S> {
        rat_u(m, x, self)
    }

    pub fn v(&self, m: usize, x: &S) -> Result<S> {
        rat_v(m, x, self)
    }

    fn big(&self) -> S {
        S::from_usize(self.n)
    }

    /// `m + b - N`.
    fn mbn(&self, m: usize) -> S {
        S::from_usize(m) + self.b.clone() - self.big()
    }

    /// `2m + b - N`.
    fn two_mbn(&self, m: usize) -> S {
        S::from_usize(2 * m) + self.b.clone() - self.big()
    }

    /// `calA_m = (m + b + 1)(m + b - N) / (2m + b - N + 1)`.
    pub fn cal_a(&self, m: usize) -> Result<S> {
        let num = (S::from_usize(m + 1) + self.b.clone()) * self.mbn(m);
        quot(num, &(self.two_mbn(m) + S::one()), "2m+b-N+1")
    }

    /// `calC_m = m (m - N - 1) / (2m + b - N - 1)`.
    pub fn cal_c(&self, m: usize) -> Result<S> {
        if m == 0 {
            return Ok(S::zero());
        }
        let num = S::from_usize(m) * (S::from_usize(m) - S::from_usize(self.n + 1));
        quot(num, &(self.two_mbn(m) - S::one()), "2m+b-N-1")
    }

    /// `calB_n = (n - a)(n - a + 1)(n - N)`.
    pub fn cal_b(&self, n: usize) -> S {
        let na = S::from_usize(n) - self.a.clone();
        na.clone() * (na + S::one()) * (S::from_usize(n) - self.big())
    }

    /// `calD_n = (n - a)(n - a + b - N) n`.
    pub fn cal_d(&self, n: usize) -> S {
        let na = S::from_usize(n) - self.a.clone();
        na.clone() * (na + self.b.clone() - self.big()) * S::from_usize(n)
    }

    /// `calD_{n,m} = (n - m - a)(n + m - a + b - N) n`.
    pub fn cal_d_nm(&self, n: usize, m: usize) -> S {
        let (nn, mm) = (S::from_usize(n), S::from_usize(m));
        (nn.clone() - mm.clone() - self.a.clone())
            * (nn.clone() + mm - self.a.clone() + self.b.clone() - self.big())
            * nn
    }

    /// `tildeB_{n,m} = (N - n - m + a - b - 2)(m - n + a - 2)(N - n)`.
    pub fn tilde_b(&self, n: usize, m: usize) -> S {
        let (nn, mm) = (S::from_usize(n), S::from_usize(m));
        let two = S::from_i64(2);
        (self.big() - nn.clone() - mm.clone() + self.a.clone() - self.b.clone() - two.clone())
            * (mm - nn.clone() + self.a.clone() - two)
            * (self.big() - nn)
    }

    /// `tildeD_n = -(N - n + a - b - 2)(N - n + a - b - 1) n`.
    pub fn tilde_d(&self, n: usize) -> S {
        let base = self.big() - S::from_usize(n) + self.a.clone() - self.b.clone();
        -((base.clone() - S::from_i64(2)) * (base - S::one()) * S::from_usize(n))
    }

    /// `W(n) = (a-b-1)_{N-n} (1-a)_n / (-b)_N * N! / (n! (N-n)!)`.
    pub fn weight(&self, n: usize) -> Result<S> {
        let num = poch(&(self.a.clone() - self.b.clone() - S::one()), self.n - n)
            * poch(&(S::one() - self.a.clone()), n)
            * factorial(self.n);
        let den = poch(&-self.b.clone(), self.n) * factorial(n) * factorial(self.n - n);
        quot(num, &den, "(-b)_N")
    }

    /// `h_m = (1, -N, m-N+b)_m (2m-N+b+1)_{N-2m} / ((b+1)_m (b-N+1)_N)`.
    pub fn h(&self, m: usize) -> Result<S> {
        let num = factorial::<S>(m)
            * poch(&-self.big(), m)
            * poch(&self.mbn(m), m)
            * poch_signed(&(self.two_mbn(m) + S::one()), self.n as i64 - 2 * m as i64)?;
        let den = poch(&(self.b.clone() + S::one()), m) * poch(&(self.b.clone() - self.big() + S::one()), self.n);
        quot(num, &den, "h_m")
    }

    /// `h*_n = (1, 2-a+b-N)_n / (-N, 1-a)_n`.
    pub fn h_star(&self, n: usize) -> Result<S> {
        let c = S::from_i64(2) - self.a.clone() + self.b.clone() - self.big();
        let num = factorial::<S>(n) * poch(&c, n);
        let den = poch(&-self.big(), n) * poch(&(S::one() - self.a.clone()), n);
        quot(num, &den, "h*_n")
    }

    /// `W*(m) = (2-a+b-N)_N (b+1)_m / ((1, -N, m+b-N)_m (2m+b-N+1)_{N-2m})`.
    pub fn weight_star(&self, m: usize) -> Result<S> {
        let c = S::from_i64(2) - self.a.clone() + self.b.clone() - self.big();
        let num = poch(&c, self.n) * poch(&(self.b.clone() + S::one()), m);
        let den = factorial::<S>(m)
            * poch(&-self.big(), m)
            * poch(&self.mbn(m), m)
            * poch_signed(&(self.two_mbn(m) + S::one()), self.n as i64 - 2 * m as i64)?;
        quot(num, &den, "W*(m)")
    }

    /// `U_m(n)` on the integer grid, indexed `[m][n]`.
    pub fn u_grid(&self) -> Result<Vec<Vec<S>>> {
        grid(self.n, |m, x| self.u(m, &S::from_usize(x)))
    }

    /// `V_m(n)` on the integer grid, indexed `[m][n]`.
    pub fn v_grid(&self) -> Result<Vec<Vec<S>>> {
        grid(self.n, |m, x| self.v(m, &S::from_usize(x)))
    }

    /// Coefficients of `(U_{m+1}, U_m, U_{m-1})` in the three-term recurrence
    /// `(n-m-a) calA (U_{m+1} - U_m) + (n+m-a+b-N) calC (U_{m-1} - U_m) - a (2m+b-N) U_m = 0`.
    fn u_recurrence_coefs(&self, m: usize, n: usize) -> Result<[S; 3]> {
        let (ca, cc) = (self.cal_a(m)?, self.cal_c(m)?);
        let (nn, mm) = (S::from_usize(n), S::from_usize(m));
        let up = (nn.clone() - mm.clone() - self.a.clone()) * ca;
        let down = (nn + mm - self.a.clone() + self.b.clone() - self.big()) * cc;
        let mid = -(up.clone() + down.clone()) - self.a.clone() * self.two_mbn(m);
        Ok([up, mid, down])
    }

    /// Coefficients of `(U_{m+1}, U_m, U_{m-1})` in the pencil form
    /// `(2m+b-N)(calA U_{m+1} - (calA - calC - 2a) U_m - calC U_{m-1})
    ///   = (2n-2a+b-N)(calA U_{m+1} - (calA + calC) U_m + calC U_{m-1})`.
    fn u_pencil_coefs(&self, m: usize, n: usize) -> Result<[S; 3]> {
        let (ca, cc) = (self.cal_a(m)?, self.cal_c(m)?);
        let left = self.two_mbn(m);
        let right = S::from_usize(2 * n) - S::from_i64(2) * self.a.clone() + self.b.clone() - self.big();
        let two_a = S::from_i64(2) * self.a.clone();
        Ok([
            left.clone() * ca.clone() - right.clone() * ca.clone(),
            -(left.clone() * (ca.clone() - cc.clone() - two_a)) + right.clone() * (ca + cc.clone()),
            -(left * cc.clone()) - right * cc,
        ])
    }

    /// Coefficients of `(V_{m+1}, V_m, V_{m-1})` in
    /// `(N-n-m-b+a-2) calA (V_{m+1} - V_m) + (m-n+a-2) calC (V_{m-1} - V_m)
    ///   - (b-a+2)(2m+b-N) V_m = 0`.
    fn v_recurrence_coefs(&self, m: usize, n: usize) -> Result<[S; 3]> {
        let (ca, cc) = (self.cal_a(m)?, self.cal_c(m)?);
        let (nn, mm) = (S::from_usize(n), S::from_usize(m));
        let two = S::from_i64(2);
        let up = (self.big() - nn.clone() - mm.clone() - self.b.clone() + self.a.clone() - two.clone()) * ca;
        let down = (mm - nn + self.a.clone() - two.clone()) * cc;
        let mid = -(up.clone() + down.clone()) - (self.b.clone() - self.a.clone() + two) * self.two_mbn(m);
        Ok([up, mid, down])
    }
}

fn apply<S: Scalar>(coefs: [S; 3], f: &[Vec<S>], m: usize, n: usize) -> Result<S> {
    let [up, mid, down] = coefs;
    Ok(term(up, || Ok(f[m + 1][n].clone()))? + mid * f[m][n].clone() + term(down, || Ok(f[m - 1][n].clone()))?)
}

/// Three-term recurrence of `U_m` in both forms for `m <= N-1`, plus the
/// coefficient identity `pencil = -2 * three-term` that links them.
pub fn check_u_recurrence<S: Scalar>(p: &RatParams<S>) -> Result<IdentityReport> {
    let u = p.u_grid()?;
    let mut tally = Tally::new("U recurrence");
    for m in 0..p.n {
        for n in 0..=p.n {
            let idx = |tag| [tag, m as i64, n as i64];
            let alt = p.u_recurrence_coefs(m, n)?;
            let pen = p.u_pencil_coefs(m, n)?;
            for k in 0..3 {
                let link = pen[k].clone() + S::from_i64(2) * alt[k].clone();
                tally.record(&[2, m as i64, n as i64, k as i64], &link);
            }
            tally.record(&idx(0), &apply(alt, &u, m, n)?);
            tally.record(&idx(1), &apply(pen, &u, m, n)?);
        }
    }
    Ok(tally.finish())
}

/// Difference equation of `U_m` on the full grid:
/// `calB_n U(n+1) - (calB_n + calD_n) U(n) + calD_n U(n-1) = m(m+b-N)((a-n) U(n) + n U(n-1))`,
/// its two-term form with `calD_{n,m}` and `calD_{n,m} - calD_n = -n m (m+b-N)`.
pub fn check_u_difference<S: Scalar>(p: &RatParams<S>) -> Result<IdentityReport> {
    let u = p.u_grid()?;
    let mut tally = Tally::new("U difference equation");
    for m in 0..=p.n {
        let eig = S::from_usize(m) * p.mbn(m);
        for n in 0..=p.n {
            let (cb, cd, cdnm) = (p.cal_b(n), p.cal_d(n), p.cal_d_nm(n, m));
            let here = u[m][n].clone();
            let next = || Ok(u[m][n + 1].clone());
            let prev = || Ok(u[m][n - 1].clone());
            let nn = S::from_usize(n);
            let three = [
                term(cb.clone(), next)?,
                -(cb.clone() + cd.clone()) * here.clone(),
                term(cd.clone(), prev)?,
                -(eig.clone() * (p.a.clone() - nn.clone()) * here.clone()),
                -term(eig.clone() * nn.clone(), prev)?,
            ];
            tally.record_terms(&[0, m as i64, n as i64], three);
            let two = [
                term(cb.clone(), next)? - cb.clone() * here.clone(),
                term(cdnm.clone(), prev)? - cdnm.clone() * here.clone(),
                -(p.a.clone() * eig.clone() * here),
            ];
            tally.record_terms(&[1, m as i64, n as i64], two);
            tally.record(&[2, m as i64, n as i64], &(cdnm - cd + nn * eig.clone()));
        }
    }
    Ok(tally.finish())
}

/// Three-term recurrence of `V_m` for `m <= N-1`, and the check that its
/// coefficients are those of the `U` recurrence under `a -> b-a+2`, `n -> N-n`.
pub fn check_v_recurrence<S: Scalar>(p: &RatParams<S>) -> Result<IdentityReport> {
    let v = p.v_grid()?;
    let refl = p.reflected();
    let mut tally = Tally::new("V recurrence");
    for m in 0..p.n {
        for n in 0..=p.n {
            let coefs = p.v_recurrence_coefs(m, n)?;
            let mapped = refl.u_recurrence_coefs(m, p.n - n)?;
            for (k, (c, d)) in coefs.iter().zip(mapped).enumerate() {
                tally.record_eq(&[1, m as i64, n as i64, k as i64], c.clone(), d);
            }
            tally.record(&[0, m as i64, n as i64], &apply(coefs, &v, m, n)?);
        }
    }
    Ok(tally.finish())
}

/// Difference equation of `V_m` on the full grid in both forms:
/// `tildeB_{n,m} (V(n+1) - V(n)) + tildeD_n (V(n-1) - V(n)) = m(m+b-N)(b-a+2) V(n)` and the
/// pencil form built on `tildeB_{n,0}`, with `tildeB_{n,m} = tildeB_{n,0} + m(m+b-N)(n-N)`.
pub fn check_v_difference<S: Scalar>(p: &RatParams<S>) -> Result<IdentityReport> {
    let v = p.v_grid()?;
    let mut tally = Tally::new("V difference equation");
    let two = S::from_i64(2);
    for m in 0..=p.n {
        let eig = S::from_usize(m) * p.mbn(m);
        for n in 0..=p.n {
            let (tb, tb0, td) = (p.tilde_b(n, m), p.tilde_b(n, 0), p.tilde_d(n));
            let here = v[m][n].clone();
            let next = || Ok(v[m][n + 1].clone());
            let prev = || Ok(v[m][n - 1].clone());
            let nn = S::from_usize(n);
            let nmn = p.big() - nn.clone();
            let first = [
                term(tb.clone(), next)? - tb.clone() * here.clone(),
                term(td.clone(), prev)? - td.clone() * here.clone(),
                -(eig.clone() * (p.b.clone() - p.a.clone() + two.clone()) * here.clone()),
            ];
            tally.record_terms(&[0, m as i64, n as i64], first);
            let pencil = [
                term(tb0.clone(), next)? - tb0.clone() * here.clone(),
                term(td.clone(), prev)? - td * here.clone(),
                -term(eig.clone() * nmn.clone(), next)?,
                eig.clone() * (nmn.clone() + p.a.clone() - p.b.clone() - two.clone()) * here,
            ];
            tally.record_terms(&[1, m as i64, n as i64], pencil);
            tally.record(&[2, m as i64, n as i64], &(tb - tb0 - eig.clone() * (nn - p.big())));
        }
    }
    Ok(tally.finish())
}

/// Which form of the second contiguity relation to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cont2Form {
    /// `a (2m+b-N) / (n-a) U_m(n; a+1) = calA U_{m+1} - (calA + calC) U_m + calC U_{m-1}`.
    Corrected,
    /// The same relation with the factor `a (2m+b-N) / (a-n)`, as it is usually printed.
    Published,
}

/// Contiguity relations in `a`:
/// `a U_m(n; a+1) = (a-n) U_m(n) + n U_m(n-1)` on the full grid and the second
/// relation for `m <= N-1`, `n != a`.
pub fn check_contiguity<S: Scalar>(p: &RatParams<S>) -> Result<IdentityReport> {
    check_contiguity_with(p, Cont2Form::Corrected)
}

pub fn check_contiguity_with<S: Scalar>(p: &RatParams<S>, form: Cont2Form) -> Result<IdentityReport> {
    let u = p.u_grid()?;
    let u1 = p.shifted().u_grid()?;
    let name = match form {
        Cont2Form::Corrected => "contiguity",
        Cont2Form::Published => "contiguity (printed second relation)",
    };
    let mut tally = Tally::new(name);
    let mut skipped = 0usize;
    for m in 0..=p.n {
        for n in 0..=p.n {
            let nn = S::from_usize(n);
            let first = [
                p.a.clone() * u1[m][n].clone(),
                -((p.a.clone() - nn.clone()) * u[m][n].clone()),
                -term(nn.clone(), || Ok(u[m][n - 1].clone()))?,
            ];
            tally.record_terms(&[0, m as i64, n as i64], first);
            if m == p.n {
                continue;
            }
            let gap = match form {
                Cont2Form::Corrected => nn - p.a.clone(),
                Cont2Form::Published => p.a.clone() - nn,
            };
            if gap.is_zero() {
                skipped += 1;
                continue;
            }
            let lhs = quot(p.a.clone() * p.two_mbn(m) * u1[m][n].clone(), &gap, "n-a")?;
            let (ca, cc) = (p.cal_a(m)?, p.cal_c(m)?);
            let rhs = ca.clone() * u[m + 1][n].clone() - (ca + cc.clone()) * u[m][n].clone()
                + term(cc, || Ok(u[m - 1][n].clone()))?;
            tally.record_eq(&[1, m as i64, n as i64], lhs, rhs);
        }
    }
    let report = tally.finish();
    Ok(if skipped > 0 { report.with_note(format!("{skipped} points with n = a skipped")) } else { report })
}

/// Both biorthogonality relations, with `h_0 = h*_0 = 1` checked as well.
pub fn check_biorthogonality<S: Scalar>(p: &RatParams<S>) -> Result<IdentityReport> {
    let (u, v) = (p.u_grid()?, p.v_grid()?);
    let data = biorth_data(p)?;
    let dim = p.n + 1;
    let mut tally = Tally::new("U/V biorthogonality");
    for m in 0..dim {
        for m2 in 0..dim {
            let sum =
                (0..dim).fold(S::zero(), |acc, n| acc + data.weights_w[n].clone() * v[m][n].clone() * u[m2][n].clone());
            tally.record_eq(&[0, m as i64, m2 as i64], sum, data.h[m].clone() * kron(m, m2));
        }
    }
    for n in 0..dim {
        for n2 in 0..dim {
            let sum = (0..dim)
                .fold(S::zero(), |acc, m| acc + data.weights_w_star[m].clone() * v[m][n].clone() * u[m][n2].clone());
            tally.record_eq(&[1, n as i64, n2 as i64], sum, data.h_star[n].clone() * kron(n, n2));
        }
    }
    tally.record_eq(&[2, 0], data.h[0].clone(), S::one());
    tally.record_eq(&[2, 1], data.h_star[0].clone(), S::one());
    Ok(tally.finish())
}

/// `calC_0 = calD_0 = calB_N = 0`.
pub fn check_rational_boundary<S: Scalar>(p: &RatParams<S>) -> Result<IdentityReport> {
    let mut tally = Tally::new("U boundary coefficients");
    tally.record(&[0], &p.cal_c(0)?);
    tally.record(&[1], &p.cal_d(0));
    tally.record(&[2], &p.cal_b(p.n));
    Ok(tally.finish())
}

/// Large-argument limit `U_m(x) -> 1`, checked as `|U_m(x) - 1| <= 1e-5` at `x = 1e8`.
pub fn check_normalization_limit(p: &RatParams<Float>) -> Result<IdentityReport> {
    const X: f64 = 1.0e8;
    const TOL: f64 = 1.0e-5;
    let mut worst = 0.0f64;
    let mut witness = None;
    for m in 0..=p.n {
        let dev = (rat_u(m, &Float::new(X), p)?.value() - 1.0).abs();
        if dev > worst || dev.is_nan() {
            worst = dev;
        }
        if witness.is_none() && (dev.is_nan() || dev > TOL) {
            witness = Some(crate::report::Witness { indices: vec![m as i64], residual: format!("{dev:.3e}") });
        }
    }
    Ok(IdentityReport {
        name: "U normalization limit".to_string(),
        grid: p.n + 1,
        max_residual: format!("{worst:.3e}"),
        pass: witness.is_none(),
        witness,
        note: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p.into(), d.into())
    }

    fn generic(n: usize) -> RatParams<Rational> {
        RatParams::new(q(9, 2) + q(1, 7), q(1, 3), n)
    }

    #[test]
    fn examples() {
        let p = RatParams::new(q(4, 1), q(3, 1), 2);
        assert_eq!(rat_u(1, &q(1, 1), &p).unwrap(), q(1, 3));
        let p = RatParams::new(q(9, 2), q(1, 3), 7);
        assert_eq!(rat_u(0, &q(5, 1), &p).unwrap(), q(1, 1));
        assert_eq!(rat_v(0, &q(3, 1), &p).unwrap(), q(1, 1));
        for m in 0..=7usize {
            let sign = if m.is_multiple_of(2) { q(1, 1) } else { q(-1, 1) };
            let pre = sign * poch(&q(-7, 1), m) / poch(&(q(1, 3) + q(1, 1)), m);
            assert_eq!(rat_u(m, &q(0, 1), &p).unwrap(), pre);
            assert_eq!(rat_v(m, &q(7, 1), &p).unwrap(), pre);
        }
    }

    #[test]
    fn double_reflection() {
        let p = generic(4);
        let r = p.reflected();
        for m in 0..=4 {
            for x in 0..=4 {
                let via_v = rat_v(m, &q(4 - x, 1), &r).unwrap();
                assert_eq!(via_v, rat_u(m, &q(x, 1), &p).unwrap());
            }
        }
    }

    #[test]
    fn normalizations() {
        let p = RatParams::new(q(4, 1), q(3, 1), 2);
        let d = biorth_data(&p).unwrap();
        assert_eq!(d.h[0], q(1, 1));
        assert_eq!(d.h_star[0], q(1, 1));
        let total = d.weights_w.iter().fold(q(0, 1), |acc, w| acc + w.clone());
        assert_eq!(total, q(1, 1));
    }

    #[test]
    fn identities_exact() {
        let p = generic(6);
        for rep in [
            check_u_recurrence(&p),
            check_u_difference(&p),
            check_v_recurrence(&p),
            check_v_difference(&p),
            check_contiguity(&p),
            check_biorthogonality(&p),
            check_rational_boundary(&p),
        ] {
            let rep = rep.unwrap();
            assert!(rep.pass, "{rep}");
        }
        let zero = RatParams::new(q(9, 2), q(1, 3), 0);
        assert!(check_biorthogonality(&zero).unwrap().pass);
    }

    #[test]
    fn printed_second_contiguity_fails() {
        let rep = check_contiguity_with(&generic(4), Cont2Form::Published).unwrap();
        assert!(!rep.pass);
        assert_eq!(rep.witness.unwrap().indices[0], 1);
    }

    #[test]
    fn normalization_limit() {
        let p = RatParams::new(Float::new(4.0), Float::new(3.0), 2);
        assert!(check_normalization_limit(&p).unwrap().pass);
        let p = RatParams::new(Float::new(9.0 / 2.0), Float::new(1.0 / 3.0), 7);
        assert!(check_normalization_limit(&p).unwrap().pass);
    }
}
