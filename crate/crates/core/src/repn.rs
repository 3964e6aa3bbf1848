//! The `(N+1)`-dimensional two-diagonal representation and its algebra checks.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::{IdentityReport, Tally};
use crate::scalar::{quot, Rational, Scalar};

/// Module data: dimension `N + 1`, the parameters `alpha`, `beta` and the gauge
/// constants `a_0, ..., a_N` with `a_N = 0` and every other `a_n` nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleParams<S> {
    n: usize,
    alpha: S,
    beta: S,
    gauge: Vec<S>,
}

impl<S: Scalar> ModuleParams<S> {
    pub fn new(n: usize, alpha: S, beta: S, gauge: Vec<S>) -> Result<Self> {
        validate_gauge(n, &gauge)?;
        Ok(ModuleParams { n, alpha, beta, gauge })
    }

    /// Default gauge `a_n = 1` for `n < N`.
    pub fn unit_gauge(n: usize, alpha: S, beta: S) -> Self {
        let gauge = (0..=n).map(|k| if k < n { S::one() } else { S::zero() }).collect();
        ModuleParams { n, alpha, beta, gauge }
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn alpha(&self) -> &S {
        &self.alpha
    }
    pub fn beta(&self) -> &S {
        &self.beta
    }
    pub fn gauge(&self) -> &[S] {
        &self.gauge
    }

    /// Same module with `alpha` replaced.
    pub fn with_alpha(&self, alpha: S) -> Self {
        ModuleParams { alpha, ..self.clone() }
    }

    /// Same parameters with the unit gauge.
    pub fn with_unit_gauge(&self) -> Self {
        Self::unit_gauge(self.n, self.alpha.clone(), self.beta.clone())
    }

    /// `a_i a_{i+1} ... a_{j-1}` for `i <= j`, and its reciprocal
    /// `1 / (a_j ... a_{i-1})` for `i > j`. Empty products are 1.
    ///
    /// Prefix ratios `(a_0...a_{p-1}) / (a_0...a_{q-1})` equal `gauge_ratio(q, p)`
    /// and suffix ratios `(a_p...a_{N-1}) / (a_q...a_{N-1})` equal `gauge_ratio(p, q)`.
    pub fn gauge_ratio(&self, i: usize, j: usize) -> Result<S> {
        if i <= j {
            Ok(self.gauge[i..j].iter().fold(S::one(), |acc, a| acc * a.clone()))
        } else {
            let den = self.gauge[j..i].iter().fold(S::one(), |acc, a| acc * a.clone());
            quot(S::one(), &den, "gauge product")
        }
    }

    /// `xi = (beta + 1)(N - beta)`.
    pub fn xi(&self) -> S {
        (self.beta.clone() + S::one()) * (S::from_usize(self.n) - self.beta.clone())
    }

    /// `eta = -N + 2 alpha`.
    pub fn eta(&self) -> S {
        S::from_i64(2) * self.alpha.clone() - S::from_usize(self.n)
    }
}

impl ModuleParams<Rational> {
    /// The same module on another backend.
    pub fn convert<T: Scalar>(&self) -> ModuleParams<T> {
        ModuleParams {
            n: self.n,
            alpha: T::from_rational(&self.alpha),
            beta: T::from_rational(&self.beta),
            gauge: self.gauge.iter().map(T::from_rational).collect(),
        }
    }
}

fn validate_gauge<S: Scalar>(n: usize, gauge: &[S]) -> Result<()> {
    if gauge.len() != n + 1 {
        return Err(Error::GaugeInvalid(format!("expected {} gauge constants, got {}", n + 1, gauge.len())));
    }
    if !gauge[n].is_zero() {
        return Err(Error::GaugeInvalid(format!("a_{n} must be 0")));
    }
    if let Some(k) = gauge[..n].iter().position(|a| a.is_zero()) {
        return Err(Error::GaugeInvalid(format!("a_{k} must be nonzero")));
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct Representation<S> {
    pub params: ModuleParams<S>,
    pub z: Matrix<S>,
    pub x: Matrix<S>,
    pub v: Matrix<S>,
    pub xi: S,
    pub eta: S,
    pub mu_pencil: Option<S>,
}

/// Builds `Z`, `X`, `V` from their actions on `|n>`:
///
/// ```text
/// Z|n> = -|n> + a_n |n+1>
/// X|n> = (n - alpha)|n> - a_n (n - beta)|n+1>
/// V|n> = (beta - n)(n - beta - 1)|n> - n (N + 1 - n) / a_{n-1} |n-1>
/// ```
pub fn build_repn<S: Scalar>(params: ModuleParams<S>) -> Result<Representation<S>> {
    let n = params.n;
    validate_gauge(n, &params.gauge)?;
    let dim = n + 1;
    let (alpha, beta) = (params.alpha.clone(), params.beta.clone());
    let mut z = Matrix::zeros(dim);
    let mut x = Matrix::zeros(dim);
    let mut v = Matrix::zeros(dim);
    for k in 0..dim {
        let kk = S::from_usize(k);
        z[(k, k)] = -S::one();
        x[(k, k)] = kk.clone() - alpha.clone();
        v[(k, k)] = (beta.clone() - kk.clone()) * (kk.clone() - beta.clone() - S::one());
        if k < n {
            let a = params.gauge[k].clone();
            z[(k + 1, k)] = a.clone();
            x[(k + 1, k)] = -(a * (kk.clone() - beta.clone()));
        }
        if k > 0 {
            let num = S::from_usize(k * (n + 1 - k));
            v[(k - 1, k)] = -quot(num, &params.gauge[k - 1], "gauge constant in V")?;
        }
    }
    let xi = params.xi();
    let eta = params.eta();
    Ok(Representation { params, z, x, v, xi, eta, mu_pencil: None })
}

impl<S: Scalar> Representation<S> {
    pub fn dim(&self) -> usize {
        self.params.n + 1
    }

    /// Records the pencil parameter used by the `f`, `f*` bases.
    pub fn with_pencil(mut self, mu: S) -> Self {
        self.mu_pencil = Some(mu);
        self
    }
}

pub fn transpose<S: Scalar>(m: &Matrix<S>) -> Matrix<S> {
    m.transpose()
}

/// `W = X + mu Z`.
pub fn pencil<S: Scalar>(repn: &Representation<S>, mu: &S) -> Matrix<S> {
    &repn.x + &repn.z.scale(mu)
}

/// `Q = {V, Z^2 + Z} + 2(X^2 + Z^2) + 2 eta X + 2 (xi + 1) Z`.
pub fn casimir<S: Scalar>(repn: &Representation<S>) -> Matrix<S> {
    let (z, x, v) = (&repn.z, &repn.x, &repn.v);
    let z2 = z * z;
    let two = S::from_i64(2);
    let mut q = v.anticommutator(&(&z2 + z));
    q = &q + &(&(x * x) + &z2).scale(&two);
    q = &q + &x.scale(&(two.clone() * repn.eta.clone()));
    q = &q + &z.scale(&(two * (repn.xi.clone() + S::one())));
    q
}

/// `Some(q)` when the matrix equals `q I`.
pub fn scalar_multiple_of_identity<S: Scalar>(m: &Matrix<S>) -> Option<S> {
    let q = m[(0, 0)].clone();
    let is_scalar = m.entries().all(|(i, j, x)| if i == j { *x == q } else { x.is_zero() });
    is_scalar.then_some(q)
}

/// Labels of the three defining relations, in the order of [`meta_residuals`].
pub const META_RELATIONS: [&str; 3] = ["[Z,X] = Z^2 + Z", "[X,V] = {V,Z} + V + xi", "[V,Z] = 2X + eta"];

/// Residual matrices of `[Z,X] = Z^2 + Z`, `[X,V] = {V,Z} + V + xi I`,
/// `[V,Z] = 2X + eta I`.
pub fn meta_residuals<S: Scalar>(repn: &Representation<S>) -> [Matrix<S>; 3] {
    let (z, x, v) = (&repn.z, &repn.x, &repn.v);
    let id = Matrix::identity(repn.dim());
    let r1 = &(&z.commutator(x) - &(z * z)) - z;
    let r2 = &(&(&x.commutator(v) - &v.anticommutator(z)) - v) - &id.scale(&repn.xi);
    let r3 = &(&v.commutator(z) - &x.scale(&S::from_i64(2))) - &id.scale(&repn.eta);
    [r1, r2, r3]
}

/// All three defining relations in one report, tagged 1 to 3.
pub fn check_meta_relations<S: Scalar>(repn: &Representation<S>) -> IdentityReport {
    let mut tally = Tally::new("meta Hahn relations");
    for (tag, r) in meta_residuals(repn).iter().enumerate() {
        tally.record_matrix(tag as i64 + 1, r);
    }
    tally.finish()
}

/// Zero commutators of the Casimir with `Z`, `X`, `V`; the scalar value of `Q`
/// (when it is one) is attached as a note.
pub fn check_casimir<S: Scalar>(repn: &Representation<S>) -> IdentityReport {
    let q = casimir(repn);
    let mut tally = Tally::new("Casimir commutes with Z, X, V");
    tally.record_matrix(1, &q.commutator(&repn.z));
    tally.record_matrix(2, &q.commutator(&repn.x));
    tally.record_matrix(3, &q.commutator(&repn.v));
    let note = match scalar_multiple_of_identity(&q) {
        Some(c) => format!("Q = ({c}) I"),
        None => "Q is not a multiple of the identity".to_string(),
    };
    tally.finish().with_note(note)
}

/// Structure constants of the Hahn algebra relations
///
/// ```text
/// [K1,[K2,K1]] = a K1^2 + b K1 + c1 K2 + d1
/// [K2,[K1,K2]] = a {K1,K2} + b K2 + c2 K1 + d2
/// ```
///
/// with `d1`, `d2` stored as matrices since `d1` involves the Casimir.
#[derive(Clone, Debug)]
pub struct HahnConstants<S> {
    pub a: S,
    pub b: S,
    pub c1: S,
    pub d1: Matrix<S>,
    pub c2: S,
    pub d2: Matrix<S>,
}

impl<S: Scalar> HahnConstants<S> {
    /// Constants that follow from the defining relations for `K1 = X + rho Z`,
    /// `K2 = V`: `b = 2 rho + 2 eta` and `d1 = -Q + (rho eta - xi) I`.
    pub fn derived(repn: &Representation<S>, rho: &S) -> Self {
        let two = S::from_i64(2);
        let id = Matrix::identity(repn.dim());
        let shift = rho.clone() * repn.eta.clone() - repn.xi.clone();
        HahnConstants {
            a: two.clone(),
            b: two.clone() * rho.clone() + two.clone() * repn.eta.clone(),
            c1: -S::one(),
            d1: &(-casimir(repn)) + &id.scale(&shift),
            c2: S::zero(),
            d2: id.scale(&(two * repn.xi.clone() * rho.clone())),
        }
    }

    /// The published map `a = 2, b = 2 rho - xi + 2 eta, c1 = -1, d1 = -Q,
    /// c2 = 0, d2 = 2 xi rho`. It disagrees with [`HahnConstants::derived`] in
    /// `b` and `d1` and does not satisfy the relations.
    pub fn published(repn: &Representation<S>, rho: &S) -> Self {
        let two = S::from_i64(2);
        let id = Matrix::identity(repn.dim());
        HahnConstants {
            a: two.clone(),
            b: two.clone() * rho.clone() - repn.xi.clone() + two.clone() * repn.eta.clone(),
            c1: -S::one(),
            d1: -casimir(repn),
            c2: S::zero(),
            d2: id.scale(&(two * repn.xi.clone() * rho.clone())),
        }
    }
}

/// Checks the Hahn algebra relations for `K1 = X + rho Z`, `K2 = V` with the
/// derived structure constants.
pub fn check_hahn_embedding<S: Scalar>(repn: &Representation<S>, rho: &S) -> IdentityReport {
    check_hahn_embedding_with(repn, rho, &HahnConstants::derived(repn, rho))
}

pub fn check_hahn_embedding_with<S: Scalar>(repn: &Representation<S>, rho: &S, c: &HahnConstants<S>) -> IdentityReport {
    let k1 = pencil(repn, rho);
    let k2 = &repn.v;
    let lhs1 = k1.commutator(&k2.commutator(&k1));
    let rhs1 = &(&(&(&k1 * &k1).scale(&c.a) + &k1.scale(&c.b)) + &k2.scale(&c.c1)) + &c.d1;
    let lhs2 = k2.commutator(&k1.commutator(k2));
    let rhs2 = &(&(&k1.anticommutator(k2).scale(&c.a) + &k2.scale(&c.b)) + &k1.scale(&c.c2)) + &c.d2;
    let mut tally = Tally::new("Hahn algebra embedding");
    tally.record_matrix(1, &(&lhs1 - &rhs1));
    tally.record_matrix(2, &(&lhs2 - &rhs2));
    tally.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p.into(), d.into())
    }

    fn n1(alpha: Rational, beta: Rational) -> Representation<Rational> {
        build_repn(ModuleParams::unit_gauge(1, alpha, beta)).unwrap()
    }

    #[test]
    fn two_by_two_matrices() {
        let (al, be) = (q(5, 3), q(2, 7));
        let r = n1(al.clone(), be.clone());
        let z = Matrix::from_fn(2, |i, j| [[q(-1, 1), q(0, 1)], [q(1, 1), q(-1, 1)]][i][j].clone());
        assert_eq!(r.z, z);
        let one = q(1, 1);
        let x =
            Matrix::from_fn(2, |i, j| [[-al.clone(), q(0, 1)], [be.clone(), one.clone() - al.clone()]][i][j].clone());
        assert_eq!(r.x, x);
        let zt = Matrix::from_fn(2, |i, j| [[q(-1, 1), q(1, 1)], [q(0, 1), q(-1, 1)]][i][j].clone());
        assert_eq!(transpose(&r.z), zt);
    }

    #[test]
    fn condpar_constants() {
        let r = n1(q(2, 1), q(3, 1));
        assert_eq!(r.eta, q(3, 1));
        assert_eq!(r.xi, q(-8, 1));
    }

    #[test]
    fn pencil_examples() {
        let (al, be) = (q(5, 3), q(2, 7));
        let r = n1(al.clone(), be.clone());
        assert_eq!(pencil(&r, &q(0, 1)), r.x);
        let w = pencil(&r, &q(1, 1));
        let expect = Matrix::from_fn(2, |i, j| {
            [[-al.clone() - q(1, 1), q(0, 1)], [be.clone() + q(1, 1), -al.clone()]][i][j].clone()
        });
        assert_eq!(w, expect);
        let mu = q(4, 9);
        let r3 = build_repn(ModuleParams::unit_gauge(3, al.clone(), be)).unwrap();
        let w = pencil(&r3, &mu);
        for n in 0..4 {
            assert_eq!(w[(n, n)], q(n as i64, 1) - al.clone() - mu.clone());
        }
    }

    #[test]
    fn gauge_validation() {
        let g = vec![q(1, 1), q(0, 1), q(0, 1)];
        assert!(matches!(ModuleParams::new(2, q(1, 2), q(1, 3), g), Err(Error::GaugeInvalid(_))));
        let g = vec![q(1, 1), q(2, 1), q(1, 1)];
        assert!(matches!(ModuleParams::new(2, q(1, 2), q(1, 3), g), Err(Error::GaugeInvalid(_))));
    }

    #[test]
    fn relations_and_perturbation() {
        let r = build_repn(ModuleParams::unit_gauge(4, q(17, 5), q(3, 7))).unwrap();
        let rep = check_meta_relations(&r);
        assert!(rep.pass, "{rep}");
        assert_eq!(rep.max_residual, "0");
        let mut bad = r.clone();
        bad.xi += q(1, 1);
        let rep = check_meta_relations(&bad);
        assert!(!rep.pass);
        assert_eq!(rep.witness.unwrap().indices[0], 2);
    }

    #[test]
    fn one_dimensional_module() {
        let r = build_repn(ModuleParams::unit_gauge(0, q(1, 2), q(1, 3))).unwrap();
        assert!(check_meta_relations(&r).pass);
        assert!(check_casimir(&r).pass);
    }

    #[test]
    fn casimir_commutes() {
        let g = vec![q(3, 2), q(-5, 7), q(2, 9), q(0, 1)];
        let r = build_repn(ModuleParams::new(3, q(-4, 11), q(13, 6), g).unwrap()).unwrap();
        let rep = check_casimir(&r);
        assert!(rep.pass, "{rep}");
    }

    #[test]
    fn hahn_embedding_derived_constants() {
        let r = build_repn(ModuleParams::unit_gauge(5, q(17, 5), q(3, 7))).unwrap();
        assert!(check_hahn_embedding(&r, &q(1, 3)).pass);
        assert!(check_hahn_embedding(&r, &q(0, 1)).pass);
        let mut c = HahnConstants::derived(&r, &q(1, 3));
        c.d2 = Matrix::zeros(r.dim());
        assert!(!check_hahn_embedding_with(&r, &q(1, 3), &c).pass);
    }

    #[test]
    fn published_hahn_constants_differ_in_b() {
        let r = build_repn(ModuleParams::unit_gauge(4, q(17, 5), q(3, 7))).unwrap();
        let rho = q(1, 3);
        let p = HahnConstants::published(&r, &rho);
        let d = HahnConstants::derived(&r, &rho);
        assert_eq!(d.b.clone() - p.b.clone(), r.xi.clone());
        assert!(!check_hahn_embedding_with(&r, &rho, &p).pass);
    }
}
