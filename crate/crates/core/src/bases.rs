//! The six eigenbases of the module and the operators written in them.
//!
//! ```text
//! d_n  : (X - lambda_n Z) d_n = 0          d*_n : (X^T - lambda_n Z^T) d*_n = 0
//! e_n  : V e_n = mu_n e_n                  e*_n : V^T e*_n = mu_n e*_n
//! f_n  : W f_n = rho_n f_n                 f*_n : W^T f*_n = rho_n f*_n
//! ```
//!
//! with `lambda_n = alpha - n`, `mu_n = (beta - n)(n - beta - 1)`,
//! `rho_n = n - alpha - mu` and `W = X + mu Z`. Every vector is normalized by
//! `<n|b_n> = 1` and is supported on one side of `n`, so each column matrix is
//! triangular with unit diagonal.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::repn::{build_repn, pencil, ModuleParams, Representation};
use crate::report::{IdentityReport, Tally};
use crate::scalar::{factorial, poch_ratio, quot, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    D,
    DStar,
    E,
    EStar,
    F,
    FStar,
}

impl Family {
    pub const ALL: [Family; 6] = [Family::D, Family::DStar, Family::E, Family::EStar, Family::F, Family::FStar];

    pub fn needs_pencil(self) -> bool {
        matches!(self, Family::F | Family::FStar)
    }

    /// `true` when column `n` is supported on rows `l >= n`.
    fn supported_below(self) -> bool {
        matches!(self, Family::D | Family::EStar | Family::F)
    }

    fn tag(self) -> &'static str {
        match self {
            Family::D => "d",
            Family::DStar => "d*",
            Family::E => "e",
            Family::EStar => "e*",
            Family::F => "f",
            Family::FStar => "f*",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Debug)]
pub struct Basis<S> {
    pub family: Family,
    pub mu: Option<S>,
    /// Column `n` is the `n`-th basis vector in `|l>` coordinates.
    pub columns: Matrix<S>,
    pub eigenvalues: Vec<S>,
}

impl<S: Scalar> Basis<S> {
    pub fn dim(&self) -> usize {
        self.columns.dim()
    }
}

/// Coefficient `<l|b_n>` of the closed-form basis vectors.
fn coefficient<S: Scalar>(p: &ModuleParams<S>, family: Family, mu: &S, n: usize, l: usize) -> Result<S> {
    let big = p.n();
    let (alpha, beta) = (p.alpha().clone(), p.beta().clone());
    let int = |k: i64| S::from_i64(k);
    let (ni, bi) = (n as i64, big as i64);
    let two = int(2);
    let value = match family {
        Family::D => {
            p.gauge_ratio(n, l)?
                * poch_ratio(&int(ni - bi), big - l, big - n)?
                * poch_ratio(&(int(ni - bi + 1) - alpha + beta), big - n, big - l)?
        }
        Family::DStar => {
            p.gauge_ratio(l, n)? * poch_ratio(&int(-ni), l, n)? * poch_ratio(&(int(-ni) + alpha - beta), n, l)?
        }
        Family::E => {
            let facts = quot(factorial::<S>(n), &factorial(l), "factorial")?;
            p.gauge_ratio(n, l)?
                * facts
                * poch_ratio(&int(-bi), n, l)?
                * poch_ratio(&int(-ni), l, n)?
                * poch_ratio(&(int(ni - 1) - two * beta), l, n)?
        }
        Family::EStar => {
            let facts = quot(factorial::<S>(big - n), &factorial(big - l), "factorial")?;
            p.gauge_ratio(l, n)?
                * facts
                * poch_ratio(&int(-bi), big - n, big - l)?
                * poch_ratio(&int(ni - bi), big - l, big - n)?
                * poch_ratio(&(int(1 - bi - ni) + two * beta), big - l, big - n)?
        }
        Family::F => {
            p.gauge_ratio(n, l)?
                * poch_ratio(&int(ni - bi), big - l, big - n)?
                * poch_ratio(&(int(1 - bi) + beta + mu.clone()), big - n, big - l)?
        }
        Family::FStar => p.gauge_ratio(l, n)? * poch_ratio(&int(-ni), l, n)? * poch_ratio(&(-beta - mu.clone()), n, l)?,
    };
    Ok(value)
}

fn eigenvalue<S: Scalar>(p: &ModuleParams<S>, family: Family, mu: &S, n: usize) -> S {
    let nn = S::from_usize(n);
    match family {
        Family::D | Family::DStar => p.alpha().clone() - nn,
        Family::E | Family::EStar => (p.beta().clone() - nn.clone()) * (nn - p.beta().clone() - S::one()),
        Family::F | Family::FStar => nn - p.alpha().clone() - mu.clone(),
    }
}

/// Builds one basis from its closed-form coefficients.
pub fn build_basis<S: Scalar>(repn: &Representation<S>, family: Family, mu: Option<&S>) -> Result<Basis<S>> {
    basis_from_params(&repn.params, family, mu)
}

fn basis_from_params<S: Scalar>(p: &ModuleParams<S>, family: Family, mu: Option<&S>) -> Result<Basis<S>> {
    let pencil_mu = match (family.needs_pencil(), mu) {
        (true, None) => return Err(Error::MissingPencil(family.tag())),
        (true, Some(m)) => m.clone(),
        (false, _) => S::zero(),
    };
    let dim = p.n() + 1;
    let below = family.supported_below();
    let columns = Matrix::try_from_fn(dim, |l, n| {
        if (below && l < n) || (!below && l > n) {
            Ok(S::zero())
        } else {
            coefficient(p, family, &pencil_mu, n, l)
        }
    })?;
    let eigenvalues = (0..dim).map(|n| eigenvalue(p, family, &pencil_mu, n)).collect();
    Ok(Basis { family, mu: family.needs_pencil().then_some(pencil_mu), columns, eigenvalues })
}

/// All six bases of one module at one pencil parameter, plus the columns `Z d_n`.
#[derive(Clone, Debug)]
pub struct Eigenbases<S> {
    pub mu: S,
    pub d: Basis<S>,
    pub d_star: Basis<S>,
    pub e: Basis<S>,
    pub e_star: Basis<S>,
    pub f: Basis<S>,
    pub f_star: Basis<S>,
    pub zd: Matrix<S>,
}

impl<S: Scalar> Eigenbases<S> {
    pub fn new(repn: &Representation<S>, mu: &S) -> Result<Self> {
        let d = build_basis(repn, Family::D, None)?;
        let zd = z_on_d(repn, &d)?;
        Ok(Eigenbases {
            mu: mu.clone(),
            d_star: build_basis(repn, Family::DStar, None)?,
            e: build_basis(repn, Family::E, None)?,
            e_star: build_basis(repn, Family::EStar, None)?,
            f: build_basis(repn, Family::F, Some(mu))?,
            f_star: build_basis(repn, Family::FStar, Some(mu))?,
            d,
            zd,
        })
    }

    pub fn get(&self, family: Family) -> &Basis<S> {
        match family {
            Family::D => &self.d,
            Family::DStar => &self.d_star,
            Family::E => &self.e,
            Family::EStar => &self.e_star,
            Family::F => &self.f,
            Family::FStar => &self.f_star,
        }
    }
}

/// Columns `Z d_n`, computed as the product `Z D` and checked against the
/// shift rule `Z d_n = -d_n |_{alpha -> alpha - 1}`.
pub fn z_on_d<S: Scalar>(repn: &Representation<S>, basis_d: &Basis<S>) -> Result<Matrix<S>> {
    if basis_d.family != Family::D {
        return Err(Error::ConsistencyFailure(format!("z_on_d needs family d, got {}", basis_d.family)));
    }
    let product = &repn.z * &basis_d.columns;
    let p = &repn.params;
    let shifted = p.with_alpha(p.alpha().clone() - S::one());
    let rule = -basis_from_params(&shifted, Family::D, None)?.columns;
    if let Some((i, j, _)) = (&product - &rule).entries().find(|(_, _, x)| !x.is_negligible()) {
        return Err(Error::ConsistencyFailure(format!("Z d_{j} disagrees with the alpha shift rule at row {i}")));
    }
    Ok(product)
}

/// The operator whose kernel column `n` of `basis` spans.
fn eigen_operator<S: Scalar>(repn: &Representation<S>, basis: &Basis<S>, n: usize) -> Matrix<S> {
    let lam = &basis.eigenvalues[n];
    let id = Matrix::identity(repn.dim());
    match basis.family {
        Family::D => &repn.x - &repn.z.scale(lam),
        Family::DStar => (&repn.x - &repn.z.scale(lam)).transpose(),
        Family::E => &repn.v - &id.scale(lam),
        Family::EStar => (&repn.v - &id.scale(lam)).transpose(),
        Family::F | Family::FStar => {
            let mu = basis.mu.clone().unwrap_or_else(S::zero);
            let w = &pencil(repn, &mu) - &id.scale(lam);
            if basis.family == Family::F {
                w
            } else {
                w.transpose()
            }
        }
    }
}

/// Residuals `(op - eigenvalue) b_n` for every column of `basis`.
pub fn check_eigen_residuals<S: Scalar>(repn: &Representation<S>, basis: &Basis<S>) -> IdentityReport {
    let mut tally = Tally::new(format!("eigen residuals of {}", basis.family));
    for n in 0..basis.dim() {
        let r = eigen_operator(repn, basis, n).mul_vec(&basis.columns.column(n));
        for (l, x) in r.iter().enumerate() {
            tally.record(&[n as i64, l as i64], x);
        }
    }
    tally.finish()
}

/// `G(m, n) = <left_m| middle |right_n>` with the bilinear pairing.
pub fn gram<S: Scalar>(left: &Basis<S>, right: &Basis<S>, middle: Option<&Matrix<S>>) -> Matrix<S> {
    let lt = left.columns.transpose();
    match middle {
        Some(m) => &(&lt * m) * &right.columns,
        None => &lt * &right.columns,
    }
}

/// `gram(e*, e) = I`, `gram(f*, f) = I`, `gram(d*, d, Z) = -I`.
pub fn check_gram<S: Scalar>(repn: &Representation<S>, bases: &Eigenbases<S>) -> IdentityReport {
    let id = Matrix::identity(repn.dim());
    let mut tally = Tally::new("Gram matrices");
    tally.record_matrix(0, &(&gram(&bases.e_star, &bases.e, None) - &id));
    tally.record_matrix(1, &(&gram(&bases.f_star, &bases.f, None) - &id));
    tally.record_matrix(2, &(&gram(&bases.d_star, &bases.d, Some(&repn.z)) + &id));
    tally.finish()
}

/// `sum_{n in terms} weight |left_n><right_n|`.
pub fn resolution<S: Scalar>(
    left: &Matrix<S>,
    right: &Matrix<S>,
    weight: &S,
    terms: impl IntoIterator<Item = usize>,
) -> Matrix<S> {
    let dim = left.dim();
    let mut acc = Matrix::zeros(dim);
    for n in terms {
        let (u, v) = (left.column(n), right.column(n));
        acc = &acc + &Matrix::from_fn(dim, |i, j| weight.clone() * u[i].clone() * v[j].clone());
    }
    acc
}

/// `sum |e_n><e*_n| = I`, `sum |f_n><f*_n| = I`, `-sum Z|d_n><d*_n| = I`.
pub fn check_completeness<S: Scalar>(repn: &Representation<S>, bases: &Eigenbases<S>) -> IdentityReport {
    let dim = repn.dim();
    let id = Matrix::identity(dim);
    let one = S::one();
    let mut tally = Tally::new("completeness");
    tally.record_matrix(0, &(&resolution(&bases.e.columns, &bases.e_star.columns, &one, 0..dim) - &id));
    tally.record_matrix(1, &(&resolution(&bases.f.columns, &bases.f_star.columns, &one, 0..dim) - &id));
    tally.record_matrix(2, &(&resolution(&bases.zd, &bases.d_star.columns, &-one, 0..dim) - &id));
    tally.finish()
}

/// Sparsity pattern and unit pivots of every basis; pivots of `Z d_n` are `-1`.
pub fn check_triangularity<S: Scalar>(bases: &Eigenbases<S>) -> IdentityReport {
    let mut tally = Tally::new("triangular structure");
    for (k, family) in Family::ALL.into_iter().enumerate() {
        let b = bases.get(family);
        let shaped =
            if family.supported_below() { b.columns.is_lower_triangular() } else { b.columns.is_upper_triangular() };
        if !shaped {
            tally.fail(&[k as i64], format!("{family} columns leave their support"));
        }
        for n in 0..b.dim() {
            tally.record_eq(&[k as i64, n as i64], b.columns[(n, n)].clone(), S::one());
        }
    }
    if !bases.zd.is_lower_triangular() {
        tally.fail(&[6], "Z d columns leave their support");
    }
    for n in 0..bases.zd.dim() {
        tally.record_eq(&[6, n as i64], bases.zd[(n, n)].clone(), -S::one());
    }
    tally.finish()
}

/// `B^{-1} op B`: entry `(m, n)` is the coefficient of `b_m` in `op b_n`.
pub fn operator_in_basis<S: Scalar>(op: &Matrix<S>, basis: &Basis<S>) -> Result<Matrix<S>> {
    basis.columns.solve_triangular(&(op * &basis.columns))
}

/// Builds the representation for `params` and all its bases in one step.
pub fn build_all<S: Scalar>(params: ModuleParams<S>, mu: &S) -> Result<(Representation<S>, Eigenbases<S>)> {
    let repn = build_repn(params)?.with_pencil(mu.clone());
    let bases = Eigenbases::new(&repn, mu)?;
    Ok((repn, bases))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p.into(), d.into())
    }

    fn sample(n: usize) -> (Representation<Rational>, Eigenbases<Rational>) {
        let gauge = (0..=n).map(|k| if k < n { q(2 * k as i64 + 3, 5 - k as i64 % 3) } else { q(0, 1) }).collect();
        let p = ModuleParams::new(n, q(17, 5), q(3, 7), gauge).unwrap();
        build_all(p, &q(2, 11)).unwrap()
    }

    fn unit_vector(dim: usize, k: usize) -> Vec<Rational> {
        (0..dim).map(|i| if i == k { q(1, 1) } else { q(0, 1) }).collect()
    }

    #[test]
    fn first_columns_are_standard_vectors() {
        let (_, b) = sample(4);
        assert_eq!(b.e.columns.column(0), unit_vector(5, 0));
        assert_eq!(b.d_star.columns.column(0), unit_vector(5, 0));
    }

    #[test]
    fn d_basis_n1() {
        let r = build_repn(ModuleParams::unit_gauge(1, q(17, 5), q(3, 7))).unwrap();
        let d = build_basis(&r, Family::D, None).unwrap();
        assert_eq!(d.columns.column(1), unit_vector(2, 1));
    }

    #[test]
    fn missing_pencil() {
        let (r, _) = sample(2);
        assert_eq!(build_basis(&r, Family::F, None).unwrap_err(), Error::MissingPencil("f"));
    }

    #[test]
    fn all_residuals_vanish() {
        let (r, b) = sample(5);
        for family in Family::ALL {
            let rep = check_eigen_residuals(&r, b.get(family));
            assert!(rep.pass, "{rep}");
        }
        assert!(check_gram(&r, &b).pass);
        assert!(check_completeness(&r, &b).pass);
        assert!(check_triangularity(&b).pass);
    }

    #[test]
    fn perturbed_eigenvalues_fail_everywhere() {
        let (r, b) = sample(3);
        let mut d = b.d.clone();
        for lam in &mut d.eigenvalues {
            *lam = lam.clone() + q(1, 1);
        }
        let dim = r.dim();
        for n in 0..dim {
            let res = eigen_operator(&r, &d, n).mul_vec(&d.columns.column(n));
            assert!(res.iter().any(|x| *x != q(0, 1)), "column {n}");
        }
        assert!(!check_eigen_residuals(&r, &d).pass);
    }

    #[test]
    fn f_with_zero_pencil() {
        let (r, _) = sample(3);
        let f = build_basis(&r, Family::F, Some(&q(0, 1))).unwrap();
        assert!(check_eigen_residuals(&r, &f).pass);
    }

    #[test]
    fn z_on_d_pivots() {
        let (_, b) = sample(4);
        for n in 0..5 {
            assert_eq!(b.zd[(n, n)], q(-1, 1));
        }
        let r0 = build_repn(ModuleParams::unit_gauge(0, q(1, 2), q(1, 3))).unwrap();
        let d0 = build_basis(&r0, Family::D, None).unwrap();
        assert_eq!(z_on_d(&r0, &d0).unwrap(), -d0.columns);
    }

    #[test]
    fn dropping_a_term_breaks_completeness() {
        let (r, b) = sample(3);
        let partial = resolution(&b.e.columns, &b.e_star.columns, &q(1, 1), 1..4);
        assert_ne!(partial, Matrix::identity(r.dim()));
    }

    #[test]
    fn operators_in_eigenbases() {
        let (r, b) = sample(4);
        let ve = operator_in_basis(&r.v, &b.e).unwrap();
        for (i, j, x) in ve.entries() {
            if i == j {
                assert_eq!(*x, b.e.eigenvalues[i]);
            } else {
                assert_eq!(*x, q(0, 1));
            }
        }
        let ze = operator_in_basis(&r.z, &b.e).unwrap();
        assert!(ze.is_banded(1, 1));
        for n in 0..4 {
            assert_eq!(ze[(n + 1, n)], r.params.gauge()[n]);
        }
        let wf = operator_in_basis(&pencil(&r, &b.mu), &b.f).unwrap();
        assert!(wf.is_banded(0, 0));
    }
}
