//! Overlaps between the eigenbases and their closed forms.
//!
//! ```text
//! S(m, n)  = <e_m | f*_n>      St(m, n) = <e*_m | f_n>
//! U(m, n)  = <e_m | d*_n>      Ut(m, n) = <e*_m | Z d_n>
//! ```
//!
//! `S`, `St` are Hahn polynomials in the parameters `alpha_hat = -1-beta-mu`,
//! `beta_hat = mu-beta-1`; `U`, `Ut` are the rational functions `U_m`, `V_m` with
//! `a = alpha-beta`, `b = N-2beta-1`.

use std::fmt;

use crate::bases::{build_all, operator_in_basis, Eigenbases};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::repn::{pencil, ModuleParams, Representation};
use crate::report::{IdentityReport, Tally};
use crate::scalar::{factorial, poch, poch_signed, quot, Scalar};
use crate::specfun::{HahnParams, RatParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OverlapKind {
    S,
    STilde,
    U,
    UTilde,
}

impl OverlapKind {
    pub const ALL: [OverlapKind; 4] = [OverlapKind::S, OverlapKind::STilde, OverlapKind::U, OverlapKind::UTilde];
}

impl fmt::Display for OverlapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OverlapKind::S => "S",
            OverlapKind::STilde => "St",
            OverlapKind::U => "U",
            OverlapKind::UTilde => "Ut",
        })
    }
}

/// How a table was filled; two tables are only ever compared across provenances.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    DotProduct,
    ClosedForm,
}

#[derive(Clone, Debug)]
pub struct OverlapTable<S> {
    pub kind: OverlapKind,
    /// Entry `(m, n)`.
    pub values: Matrix<S>,
    pub params: ModuleParams<S>,
    pub mu: S,
    pub provenance: Provenance,
}

/// Special-function parameters induced by a module and a pencil parameter.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamMap<S> {
    pub alpha_hat: S,
    pub beta_hat: S,
    pub a: S,
    pub b: S,
    pub n: usize,
}

impl<S: Scalar> ParamMap<S> {
    pub fn new(params: &ModuleParams<S>, mu: &S) -> Self {
        let beta = params.beta().clone();
        ParamMap {
            alpha_hat: -S::one() - beta.clone() - mu.clone(),
            beta_hat: mu.clone() - beta.clone() - S::one(),
            a: params.alpha().clone() - beta.clone(),
            b: S::from_usize(params.n()) - S::from_i64(2) * beta - S::one(),
            n: params.n(),
        }
    }

    pub fn hahn(&self) -> HahnParams<S> {
        HahnParams::new(self.alpha_hat.clone(), self.beta_hat.clone(), self.n)
    }

    pub fn rational(&self) -> RatParams<S> {
        RatParams::new(self.a.clone(), self.b.clone(), self.n)
    }
}

/// Fills a table by pairing basis columns.
pub fn overlap_table<S: Scalar>(repn: &Representation<S>, bases: &Eigenbases<S>, kind: OverlapKind) -> OverlapTable<S> {
    let (left, right) = match kind {
        OverlapKind::S => (&bases.e.columns, &bases.f_star.columns),
        OverlapKind::STilde => (&bases.e_star.columns, &bases.f.columns),
        OverlapKind::U => (&bases.e.columns, &bases.d_star.columns),
        OverlapKind::UTilde => (&bases.e_star.columns, &bases.zd),
    };
    OverlapTable {
        kind,
        values: &left.transpose() * right,
        params: repn.params.clone(),
        mu: bases.mu.clone(),
        provenance: Provenance::DotProduct,
    }
}

fn sign<S: Scalar>(k: usize) -> S {
    if k.is_multiple_of(2) {
        S::one()
    } else {
        -S::one()
    }
}

fn closed_form_entry<S: Scalar>(
    params: &ModuleParams<S>,
    map: &ParamMap<S>,
    kind: OverlapKind,
    m: usize,
    n: usize,
) -> Result<S> {
    let big = params.n();
    let nn = S::from_usize(n);
    let one = S::one();
    match kind {
        OverlapKind::S | OverlapKind::STilde => {
            let hp = map.hahn();
            let (ah, bh) = (map.alpha_hat.clone(), map.beta_hat.clone());
            let q = hp.q(m, &nn)?;
            if kind == OverlapKind::S {
                // R(m,n) N! (-1)^n / (n! (N-m)!) (ah+1)_n / (m+ah+bh+1)_m Q_m(n)
                let num = params.gauge_ratio(m, n)? * factorial(big) * sign(n) * poch(&(ah.clone() + one.clone()), n);
                let den = factorial::<S>(n) * factorial(big - m) * poch(&(S::from_usize(m + 1) + ah + bh), m);
                Ok(quot(num, &den, "S prefactor")? * q)
            } else {
                // R(n,m) N! (-1)^n (ah+1)_m (bh+1)_{N-n} / (m! (N-n)! (bh+1)_m (2m+ah+bh+2)_{N-m}) Q_m(n)
                let num = params.gauge_ratio(n, m)?
                    * factorial(big)
                    * sign(n)
                    * poch(&(ah.clone() + one.clone()), m)
                    * poch(&(bh.clone() + one.clone()), big - n);
                let den = factorial::<S>(m)
                    * factorial(big - n)
                    * poch(&(bh.clone() + one), m)
                    * poch(&(S::from_usize(2 * m + 2) + ah + bh), big - m);
                Ok(quot(num, &den, "St prefactor")? * q)
            }
        }
        OverlapKind::U => {
            // R(m,n) (1-a)_n (1+b)_m / (n! (m+b-N)_m) U_m(n)
            let rp = map.rational();
            let num =
                params.gauge_ratio(m, n)? * poch(&(one.clone() - map.a.clone()), n) * poch(&(one + map.b.clone()), m);
            let den = factorial::<S>(n) * poch(&(S::from_usize(m) + map.b.clone() - S::from_usize(big)), m);
            Ok(quot(num, &den, "U prefactor")? * rp.u(m, &nn)?)
        }
        OverlapKind::UTilde => {
            // -R(n,m) (m+1)_{N-m} (a-b-1)_{N-n} / ((N-n)! (-N)_m (-b)_{N-2m}) V_m(n)
            let rp = map.rational();
            let num = -(params.gauge_ratio(n, m)?
                * poch(&S::from_usize(m + 1), big - m)
                * poch(&(map.a.clone() - map.b.clone() - one), big - n));
            let den = factorial::<S>(big - n)
                * poch(&-S::from_usize(big), m)
                * poch_signed(&-map.b.clone(), big as i64 - 2 * m as i64)?;
            Ok(quot(num, &den, "Ut prefactor")? * rp.v(m, &nn)?)
        }
    }
}

/// Fills a table from the special-function closed forms.
pub fn closed_form_table<S: Scalar>(params: &ModuleParams<S>, mu: &S, kind: OverlapKind) -> Result<OverlapTable<S>> {
    let map = ParamMap::new(params, mu);
    let values = Matrix::try_from_fn(params.n() + 1, |m, n| closed_form_entry(params, &map, kind, m, n))?;
    Ok(OverlapTable { kind, values, params: params.clone(), mu: mu.clone(), provenance: Provenance::ClosedForm })
}

/// Entrywise comparison of two tables of the same kind and different provenance.
pub fn match_closed_forms<S: Scalar>(computed: &OverlapTable<S>, closed: &OverlapTable<S>) -> Result<IdentityReport> {
    if computed.provenance == closed.provenance {
        return Err(Error::ConsistencyFailure("refusing to compare two tables of the same provenance".into()));
    }
    if computed.kind != closed.kind || computed.values.dim() != closed.values.dim() {
        return Err(Error::DimensionMismatch(format!("{} vs {}", computed.kind, closed.kind)));
    }
    let mut tally = Tally::new(format!("{} closed form", computed.kind));
    for (m, n, x) in computed.values.entries() {
        tally.record_eq(&[m as i64, n as i64], x.clone(), closed.values[(m, n)].clone());
    }
    Ok(tally.finish())
}

/// `sum_n St(m,n) S(m',n) = delta` and `sum_m St(m,n) S(m,n') = delta`.
pub fn check_s_orthogonality<S: Scalar>(s: &OverlapTable<S>, st: &OverlapTable<S>) -> IdentityReport {
    paired_sums("S orthogonality", &s.values, &st.values, &S::one())
}

/// `w sum_n Ut(m,n) U(m',n) = delta` and `w sum_m Ut(m,n) U(m,n') = delta`; the
/// identity holds for `w = -1`.
pub fn check_u_biorthogonality<S: Scalar>(u: &OverlapTable<S>, ut: &OverlapTable<S>, weight: &S) -> IdentityReport {
    paired_sums("U biorthogonality", &u.values, &ut.values, weight)
}

fn paired_sums<S: Scalar>(name: &str, plain: &Matrix<S>, tilde: &Matrix<S>, weight: &S) -> IdentityReport {
    let dim = plain.dim();
    let mut tally = Tally::new(name);
    let delta = |i: usize, j: usize| if i == j { S::one() } else { S::zero() };
    for m in 0..dim {
        for m2 in 0..dim {
            let sum = (0..dim).fold(S::zero(), |acc, n| acc + tilde[(m, n)].clone() * plain[(m2, n)].clone());
            tally.record_eq(&[0, m as i64, m2 as i64], weight.clone() * sum, delta(m, m2));
        }
    }
    for n in 0..dim {
        for n2 in 0..dim {
            let sum = (0..dim).fold(S::zero(), |acc, m| acc + tilde[(m, n)].clone() * plain[(m, n2)].clone());
            tally.record_eq(&[1, n as i64, n2 as i64], weight.clone() * sum, delta(n, n2));
        }
    }
    tally.finish()
}

/// `rho_n S(m,n) = sum_j W^{(e)}_{j,m} S(j,n)` on the full grid.
pub fn check_recur_s<S: Scalar>(
    repn: &Representation<S>,
    bases: &Eigenbases<S>,
    s: &OverlapTable<S>,
) -> Result<IdentityReport> {
    let we = operator_in_basis(&pencil(repn, &bases.mu), &bases.e)?;
    let dim = repn.dim();
    let mut tally = Tally::new("S recurrence from W in the e basis");
    for m in 0..dim {
        for n in 0..dim {
            let rho = bases.f_star.eigenvalues[n].clone();
            let mut terms = vec![-(rho * s.values[(m, n)].clone())];
            for j in 0..dim {
                if !we[(j, m)].is_zero() {
                    terms.push(we[(j, m)].clone() * s.values[(j, n)].clone());
                }
            }
            tally.record_terms(&[m as i64, n as i64], terms);
        }
    }
    Ok(tally.finish())
}

/// All four tables rescale as `R(m,n)` (S, U) or `R(n,m)` (St, Ut) against the unit gauge.
pub fn check_gauge_covariance<S: Scalar>(params: &ModuleParams<S>, mu: &S) -> Result<IdentityReport> {
    let (repn, bases) = build_all(params.clone(), mu)?;
    let (repn1, bases1) = build_all(params.with_unit_gauge(), mu)?;
    let mut tally = Tally::new("gauge covariance");
    for (k, kind) in OverlapKind::ALL.into_iter().enumerate() {
        let gauged = overlap_table(&repn, &bases, kind).values;
        let unit = overlap_table(&repn1, &bases1, kind).values;
        for (m, n, x) in gauged.entries() {
            let ratio = match kind {
                OverlapKind::S | OverlapKind::U => params.gauge_ratio(m, n)?,
                OverlapKind::STilde | OverlapKind::UTilde => params.gauge_ratio(n, m)?,
            };
            tally.record_eq(&[k as i64, m as i64, n as i64], x.clone(), ratio * unit[(m, n)].clone());
        }
    }
    Ok(tally.finish())
}

/// Overlap-level contiguity in `alpha`, against a table built at `alpha + 1`:
/// `U'(m,n) = U(m,n) - a_{n-1} U(m,n-1)` and `U'(m,n) = -sum_j Z^{(e)}_{j,m} U(j,n)`.
pub fn check_overlap_contiguity<S: Scalar>(repn: &Representation<S>, bases: &Eigenbases<S>) -> Result<IdentityReport> {
    let p = &repn.params;
    let (repn1, bases1) = build_all(p.with_alpha(p.alpha().clone() + S::one()), &bases.mu)?;
    let u = overlap_table(repn, bases, OverlapKind::U).values;
    let u1 = overlap_table(&repn1, &bases1, OverlapKind::U).values;
    let ze = operator_in_basis(&repn.z, &bases.e)?;
    let dim = repn.dim();
    let mut tally = Tally::new("U contiguity at the overlap level");
    for m in 0..dim {
        for n in 0..dim {
            let mut first = vec![u1[(m, n)].clone(), -u[(m, n)].clone()];
            if n > 0 {
                first.push(p.gauge()[n - 1].clone() * u[(m, n - 1)].clone());
            }
            tally.record_terms(&[0, m as i64, n as i64], first);
            let second = (0..dim).filter(|&j| !ze[(j, m)].is_zero()).map(|j| ze[(j, m)].clone() * u[(j, n)].clone());
            tally.record_terms(&[1, m as i64, n as i64], std::iter::once(u1[(m, n)].clone()).chain(second));
        }
    }
    Ok(tally.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p.into(), d.into())
    }

    fn sample(n: usize) -> (Representation<Rational>, Eigenbases<Rational>) {
        let gauge = (0..=n).map(|k| if k < n { q(7 - 2 * k as i64, 3 + k as i64) } else { q(0, 1) }).collect();
        let p = ModuleParams::new(n, q(17, 5), q(3, 7), gauge).unwrap();
        build_all(p, &q(2, 11)).unwrap()
    }

    #[test]
    fn corner_entries() {
        let (r, b) = sample(3);
        let t = |k| overlap_table(&r, &b, k).values;
        assert_eq!(t(OverlapKind::S)[(0, 0)], q(1, 1));
        assert_eq!(t(OverlapKind::U)[(0, 0)], q(1, 1));
        assert_eq!(t(OverlapKind::STilde)[(3, 3)], q(1, 1));
        assert_eq!(t(OverlapKind::UTilde)[(3, 3)], q(-1, 1));
        let (r0, b0) = sample(0);
        assert_eq!(overlap_table(&r0, &b0, OverlapKind::U).values, Matrix::identity(1));
    }

    #[test]
    fn closed_forms_match() {
        let (r, b) = sample(5);
        for kind in OverlapKind::ALL {
            let dot = overlap_table(&r, &b, kind);
            let closed = closed_form_table(&r.params, &b.mu, kind).unwrap();
            let rep = match_closed_forms(&dot, &closed).unwrap();
            assert!(rep.pass, "{rep}");
            assert!(match_closed_forms(&closed, &closed).is_err());
        }
    }

    #[test]
    fn u_first_row() {
        let (r, b) = sample(4);
        let map = ParamMap::new(&r.params, &b.mu);
        let u = overlap_table(&r, &b, OverlapKind::U).values;
        for n in 0..=4 {
            let expect =
                r.params.gauge_ratio(0, n).unwrap() * poch(&(q(1, 1) - map.a.clone()), n) / factorial::<Rational>(n);
            assert_eq!(u[(0, n)], expect);
        }
    }

    #[test]
    fn orthogonality_and_controls() {
        let (r, b) = sample(4);
        let s = overlap_table(&r, &b, OverlapKind::S);
        let st = overlap_table(&r, &b, OverlapKind::STilde);
        assert!(check_s_orthogonality(&s, &st).pass);
        let mut bad = s.clone();
        bad.values[(1, 2)] = bad.values[(1, 2)].clone() + q(1, 1);
        let rep = check_s_orthogonality(&bad, &st);
        assert!(!rep.pass);
        let u = overlap_table(&r, &b, OverlapKind::U);
        let ut = overlap_table(&r, &b, OverlapKind::UTilde);
        assert!(check_u_biorthogonality(&u, &ut, &q(-1, 1)).pass);
        assert!(!check_u_biorthogonality(&u, &ut, &q(1, 1)).pass);
    }

    #[test]
    fn u_biorthogonality_two_by_two() {
        let (r, b) = sample(1);
        let u = overlap_table(&r, &b, OverlapKind::U);
        let ut = overlap_table(&r, &b, OverlapKind::UTilde);
        assert!(check_u_biorthogonality(&u, &ut, &q(-1, 1)).pass);
    }

    #[test]
    fn recurrences_gauge_and_contiguity() {
        let (r, b) = sample(4);
        let s = overlap_table(&r, &b, OverlapKind::S);
        assert!(check_recur_s(&r, &b, &s).unwrap().pass);
        assert!(check_gauge_covariance(&r.params, &b.mu).unwrap().pass);
        let rep = check_overlap_contiguity(&r, &b).unwrap();
        assert!(rep.pass, "{rep}");
    }
}
