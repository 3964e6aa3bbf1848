//! Identity suites run on one parameter draw.

use mhahn_core::appendix::check_appendix_actions;
use mhahn_core::bases::{build_all, check_completeness, check_eigen_residuals, check_gram, check_triangularity};
use mhahn_core::overlaps::{
    check_gauge_covariance, check_overlap_contiguity, check_recur_s, check_s_orthogonality, check_u_biorthogonality,
    closed_form_table, match_closed_forms, overlap_table,
};
use mhahn_core::repn::{check_casimir, check_hahn_embedding, meta_residuals, META_RELATIONS};
use mhahn_core::report::Tally;
use mhahn_core::specfun::*;
use mhahn_core::{
    build_repn, Backend, Family, Float, ModuleParams, OverlapKind, ParamMap, Rational, Representation, Result, Scalar,
};

use crate::config::Suite;
use crate::draw::Sample;
use crate::report::{Entry, Merger};

fn lift(name: &str, r: Result<mhahn_core::IdentityReport>) -> Entry {
    match r {
        Ok(r) => r.into(),
        Err(e) => Entry::error(name, e),
    }
}

fn hahn_params<S: Scalar>(p: &HahnParams<Rational>) -> HahnParams<S> {
    HahnParams::new(S::from_rational(&p.alpha_hat), S::from_rational(&p.beta_hat), p.n)
}

fn rat_params<S: Scalar>(p: &RatParams<Rational>) -> RatParams<S> {
    RatParams::new(S::from_rational(&p.a), S::from_rational(&p.b), p.n)
}

/// Runs `suite` on one draw.
pub fn run_sample(sample: &Sample, suite: Suite, backend: Backend) -> Vec<Entry> {
    match backend {
        Backend::Exact => run::<Rational>(sample, suite),
        Backend::Float => {
            let mut out = run::<Float>(sample, suite);
            let rat = match sample {
                Sample::Rational(p) => Some(p.clone()),
                Sample::Module { params, mu: Some(mu), .. } if suite == Suite::All => {
                    Some(ParamMap::new(params, mu).rational())
                }
                _ => None,
            };
            if let Some(p) = rat {
                out.push(lift("U normalization limit", check_normalization_limit(&rat_params::<Float>(&p))));
            }
            out
        }
    }
}

fn run<S: Scalar>(sample: &Sample, suite: Suite) -> Vec<Entry> {
    match sample {
        Sample::Module { params, mu, rhos } => {
            let params = params.convert::<S>();
            let mu = mu.as_ref().map(S::from_rational);
            let rhos: Vec<S> = rhos.iter().map(S::from_rational).collect();
            module_suites(params, mu, &rhos, suite)
        }
        Sample::Hahn(p) => hahn(&hahn_params::<S>(p)),
        Sample::Rational(p) => rational(&rat_params::<S>(p)),
    }
}

pub fn module_suites<S: Scalar>(params: ModuleParams<S>, mu: Option<S>, rhos: &[S], suite: Suite) -> Vec<Entry> {
    let mut out = Vec::new();
    if matches!(suite, Suite::Algebra | Suite::All) {
        match build_repn(params.clone()) {
            Ok(repn) => out.extend(algebra(&repn, rhos)),
            Err(e) => out.push(Entry::error("representation", e)),
        }
    }
    let Some(mu) = mu else { return out };
    let (repn, bases) = match build_all(params.clone(), &mu) {
        Ok(built) => built,
        Err(e) => {
            out.push(Entry::error("eigenbases", e));
            return out;
        }
    };
    if matches!(suite, Suite::Bases | Suite::All) {
        for family in Family::ALL {
            out.push(check_eigen_residuals(&repn, bases.get(family)).into());
        }
        out.push(check_gram(&repn, &bases).into());
        out.push(check_completeness(&repn, &bases).into());
        out.push(check_triangularity(&bases).into());
    }
    if matches!(suite, Suite::Overlaps | Suite::All) {
        let tables: Vec<_> = OverlapKind::ALL.iter().map(|&k| overlap_table(&repn, &bases, k)).collect();
        for t in &tables {
            let name = format!("{} closed form", t.kind);
            out.push(lift(&name, closed_form_table(&params, &mu, t.kind).and_then(|c| match_closed_forms(t, &c))));
        }
        out.push(check_s_orthogonality(&tables[0], &tables[1]).into());
        out.push(check_u_biorthogonality(&tables[2], &tables[3], &-S::one()).into());
        out.push(lift("S recurrence from W in the e basis", check_recur_s(&repn, &bases, &tables[0])));
        out.push(lift("gauge covariance", check_gauge_covariance(&params, &mu)));
        out.push(lift("U contiguity at the overlap level", check_overlap_contiguity(&repn, &bases)));
    }
    if matches!(suite, Suite::Appendix | Suite::All) {
        match check_appendix_actions(&repn, &bases) {
            Ok(reports) => out.extend(reports.into_iter().map(Entry::from)),
            Err(e) => out.push(Entry::error("appendix actions", e)),
        }
    }
    if suite == Suite::All {
        let map = ParamMap::new(&params, &mu);
        out.extend(hahn(&map.hahn()));
        out.extend(rational(&map.rational()));
    }
    out
}

/// The defining relations (one entry each), the Casimir and the Hahn algebra
/// embedding merged over the pencil parameters `rhos`.
pub fn algebra<S: Scalar>(repn: &Representation<S>, rhos: &[S]) -> Vec<Entry> {
    let mut out: Vec<Entry> = meta_residuals(repn)
        .iter()
        .zip(META_RELATIONS)
        .map(|(r, name)| {
            let mut tally = Tally::new(name);
            tally.record_matrix(0, r);
            tally.finish().into()
        })
        .collect();
    out.push(check_casimir(repn).into());
    let mut embedding = Merger::default();
    for (k, rho) in rhos.iter().enumerate() {
        embedding.add(Entry::from(check_hahn_embedding(repn, rho)).within(&[k as i64], None));
    }
    out.extend(embedding.finish());
    out
}

pub fn hahn<S: Scalar>(p: &HahnParams<S>) -> Vec<Entry> {
    vec![
        lift("Hahn orthogonality", check_hahn_orthogonality(p)),
        lift("Hahn recurrence", check_hahn_recurrence(p)),
        lift("Hahn difference equation", check_hahn_difference(p)),
        lift("Hahn duality", check_hahn_duality(p)),
        lift("Hahn boundary coefficients", check_hahn_boundary(p)),
    ]
}

pub fn rational<S: Scalar>(p: &RatParams<S>) -> Vec<Entry> {
    vec![
        lift("U/V biorthogonality", check_biorthogonality(p)),
        lift("U recurrence", check_u_recurrence(p)),
        lift("U difference equation", check_u_difference(p)),
        lift("V recurrence", check_v_recurrence(p)),
        lift("V difference equation", check_v_difference(p)),
        lift("contiguity", check_contiguity(p)),
        lift("U boundary coefficients", check_rational_boundary(p)),
    ]
}
