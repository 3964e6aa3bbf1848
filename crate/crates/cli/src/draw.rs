//! Deterministic random parameter draws.
//!
//! Every `(seed, N, draw)` triple owns an independent ChaCha stream, so a job's
//! parameters do not depend on scheduling or on the other jobs in a sweep.

use mhahn_core::genericity::{hahn_genericity, rational_genericity};
use mhahn_core::{genericity_check, Backend, HahnParams, ModuleParams, RatParams, Rational, Violation};
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::{Fixed, Gauge, RunConfig, Suite};
use crate::error::CliError;

/// Rejection budget when some parameters are fixed and others drawn.
const MAX_ATTEMPTS: usize = 1000;
/// Pencil parameters per draw for the Hahn algebra embedding.
pub const RHOS_PER_DRAW: usize = 10;
/// Largest magnitude drawn for the float backend.
const FLOAT_BOUND: i64 = 10;

pub fn rng(seed: u64, n: usize, draw: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&(n as u64).to_le_bytes());
    key[16..24].copy_from_slice(&draw.to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

/// `±p/q` with `p, q` uniform in `[1, 97]`; on the float backend, redrawn until
/// `|p/q| <= 10`.
pub fn rational(rng: &mut impl Rng, backend: Backend) -> Rational {
    loop {
        let p: i64 = rng.gen_range(1..=97);
        let q: i64 = rng.gen_range(1..=97);
        let sign = if rng.gen::<bool>() { -1 } else { 1 };
        let r = Rational::new((sign * p).into(), q.into());
        if backend == Backend::Exact || r.abs() <= Rational::from_integer(FLOAT_BOUND.into()) {
            return r;
        }
    }
}

fn pick(fixed: &Option<Rational>, rng: &mut impl Rng, backend: Backend) -> Rational {
    fixed.clone().unwrap_or_else(|| rational(rng, backend))
}

fn gauge(g: &Gauge, n: usize, rng: &mut impl Rng, backend: Backend) -> Vec<Rational> {
    let mut list = match g {
        Gauge::Ones => vec![Rational::from_integer(1.into()); n],
        Gauge::Random => (0..n).map(|_| rational(rng, backend)).collect(),
        Gauge::List(list) => list.clone(),
    };
    list.push(Rational::zero());
    list
}

/// Parameters of one verification job.
#[derive(Debug, Clone)]
pub enum Sample {
    Module { params: ModuleParams<Rational>, mu: Option<Rational>, rhos: Vec<Rational> },
    Hahn(HahnParams<Rational>),
    Rational(RatParams<Rational>),
}

impl Sample {
    /// One-line description, recorded with failure witnesses.
    pub fn describe(&self) -> String {
        match self {
            Sample::Module { params, mu, .. } => {
                let gauge: Vec<String> = params.gauge().iter().map(|g| g.to_string()).collect();
                let mut s = format!("N={} alpha={} beta={}", params.n(), params.alpha(), params.beta());
                if let Some(mu) = mu {
                    s += &format!(" mu={mu}");
                }
                s + &format!(" gauge={}", gauge.join(";"))
            }
            Sample::Hahn(p) => format!("N={} alphaHat={} betaHat={}", p.n, p.alpha_hat, p.beta_hat),
            Sample::Rational(p) => format!("N={} a={} b={}", p.n, p.a, p.b),
        }
    }
}

fn fully_fixed(f: &Fixed, suite: Suite, gauge: &Gauge) -> bool {
    let module = f.alpha.is_some() && f.beta.is_some() && *gauge != Gauge::Random;
    match suite {
        // the embedding always draws fresh pencil parameters
        Suite::Algebra | Suite::All => false,
        Suite::Bases | Suite::Overlaps | Suite::Appendix => module && f.mu.is_some(),
        Suite::Hahn => f.alpha_hat.is_some() && f.beta_hat.is_some(),
        Suite::Rational => f.a.is_some() && f.b.is_some(),
    }
}

/// Number of distinct draws worth running at one `N`.
pub fn draws(cfg: &RunConfig) -> u64 {
    if fully_fixed(&cfg.fixed, cfg.suite, &cfg.gauge) {
        1
    } else {
        cfg.trials
    }
}

/// Draws until `violations` comes back empty; fixed-only configurations get a
/// single attempt so their violations surface immediately.
fn until_generic<T>(
    fixed_only: bool,
    mut attempt: impl FnMut() -> Result<(T, Vec<Violation>), CliError>,
) -> Result<T, CliError> {
    let tries = if fixed_only { 1 } else { MAX_ATTEMPTS };
    let mut last = Vec::new();
    for _ in 0..tries {
        let (value, violations) = attempt()?;
        if violations.is_empty() {
            return Ok(value);
        }
        last = violations;
    }
    Err(CliError::Genericity(last))
}

pub fn sample(cfg: &RunConfig, n: usize, draw: u64) -> Result<Sample, CliError> {
    let mut rng = rng(cfg.seed, n, draw);
    let (f, backend) = (&cfg.fixed, cfg.backend);
    let fixed_only = fully_fixed(f, cfg.suite, &cfg.gauge);
    match cfg.suite {
        Suite::Algebra => {
            let params = module(f, &cfg.gauge, n, &mut rng, backend)?;
            let rhos = (0..RHOS_PER_DRAW).map(|_| rational(&mut rng, backend)).collect();
            Ok(Sample::Module { params, mu: None, rhos })
        }
        Suite::Bases | Suite::Overlaps | Suite::Appendix | Suite::All => {
            let module_fixed = f.alpha.is_some() && f.beta.is_some() && f.mu.is_some() && cfg.gauge != Gauge::Random;
            let (params, mu) = until_generic(module_fixed, || {
                let params = module(f, &cfg.gauge, n, &mut rng, backend)?;
                let mu = pick(&f.mu, &mut rng, backend);
                let v = genericity_check(&params, &mu);
                Ok(((params, mu), v))
            })?;
            let rhos = if cfg.suite == Suite::All {
                (0..RHOS_PER_DRAW).map(|_| rational(&mut rng, backend)).collect()
            } else {
                Vec::new()
            };
            Ok(Sample::Module { params, mu: Some(mu), rhos })
        }
        Suite::Hahn => until_generic(fixed_only, || {
            let ah = pick(&f.alpha_hat, &mut rng, backend);
            let bh = pick(&f.beta_hat, &mut rng, backend);
            let v = hahn_genericity(&ah, &bh, n);
            Ok((Sample::Hahn(HahnParams::new(ah, bh, n)), v))
        }),
        Suite::Rational => until_generic(fixed_only, || {
            let a = pick(&f.a, &mut rng, backend);
            let b = pick(&f.b, &mut rng, backend);
            let v = rational_genericity(&a, &b, n);
            Ok((Sample::Rational(RatParams::new(a, b, n)), v))
        }),
    }
}

/// Module parameters for a single job: fixed values where given, drawn otherwise.
pub fn module(
    f: &Fixed,
    g: &Gauge,
    n: usize,
    rng: &mut impl Rng,
    backend: Backend,
) -> Result<ModuleParams<Rational>, CliError> {
    let alpha = pick(&f.alpha, rng, backend);
    let beta = pick(&f.beta, rng, backend);
    let gauge = gauge(g, n, rng, backend);
    Ok(ModuleParams::new(n, alpha, beta, gauge)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a: Vec<Rational> = (0..5).map(|_| rational(&mut rng(7, 3, 0), Backend::Exact)).collect();
        assert!(a.windows(2).all(|w| w[0] == w[1]));
        let mut r1 = rng(7, 3, 0);
        let mut r2 = rng(7, 3, 1);
        let x: Vec<Rational> = (0..8).map(|_| rational(&mut r1, Backend::Exact)).collect();
        let y: Vec<Rational> = (0..8).map(|_| rational(&mut r2, Backend::Exact)).collect();
        assert_ne!(x, y);
    }

    #[test]
    fn heights_and_float_bound() {
        let mut r = rng(1, 1, 1);
        for _ in 0..2000 {
            let x = rational(&mut r, Backend::Exact);
            assert!(!x.is_zero());
            assert!(x.numer().magnitude() <= &97u32.into() && x.denom() <= &97.into());
            let y = rational(&mut r, Backend::Float);
            assert!(y.abs() <= Rational::from_integer(10.into()));
        }
    }
}
