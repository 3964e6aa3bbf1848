//! The subcommands.

use mhahn_core::bases::build_all;
use mhahn_core::genericity::require_generic;
use mhahn_core::overlaps::overlap_table;
use mhahn_core::specfun::{biorth_data, dual_hahn_r, hahn_q, rat_u, rat_v, HahnParams, RatParams};
use mhahn_core::{
    build_repn, genericity_check, Backend, Family, Float, Matrix, ModuleParams, OverlapKind, Rational, Scalar,
};
use rayon::prelude::*;

use crate::config::{Command, EvalFamily, RunConfig, Suite, TableFamily};
use crate::draw::{self, draws, Sample};
use crate::error::CliError;
use crate::report::{residual_key, Entry, Merger, Report, Summary};
use crate::suites::{algebra, module_suites, run_sample};

type Table = Vec<Vec<String>>;

fn matrix_table<S: Scalar>(m: &Matrix<S>) -> Table {
    let dim = m.dim();
    (0..dim).map(|i| (0..dim).map(|j| m[(i, j)].to_string()).collect()).collect()
}

fn grid_table<S: Scalar>(g: &[Vec<S>]) -> Table {
    g.iter().map(|row| row.iter().map(|x| x.to_string()).collect()).collect()
}

fn required(value: &Option<Rational>, flag: &str) -> Result<Rational, CliError> {
    value.clone().ok_or_else(|| CliError::Config(format!("missing {flag}")))
}

/// Module parameters for the single-draw commands; a random gauge comes from
/// draw 0 of the seed's stream.
fn fixed_module(cfg: &RunConfig) -> Result<ModuleParams<Rational>, CliError> {
    let n = cfg.n_range.0;
    let mut rng = draw::rng(cfg.seed, n, 0);
    let mut f = cfg.fixed.clone();
    f.alpha = Some(required(&f.alpha, "--alpha")?);
    f.beta = Some(required(&f.beta, "--beta")?);
    draw::module(&f, &cfg.gauge, n, &mut rng, cfg.backend)
}

fn fixed_generic_module(cfg: &RunConfig) -> Result<(ModuleParams<Rational>, Rational), CliError> {
    let params = fixed_module(cfg)?;
    let mu = required(&cfg.fixed.mu, "--mu")?;
    require_generic(genericity_check(&params, &mu))?;
    Ok((params, mu))
}

fn hahn_params(cfg: &RunConfig) -> Result<HahnParams<Rational>, CliError> {
    Ok(HahnParams::new(
        required(&cfg.fixed.alpha_hat, "--alphaHat")?,
        required(&cfg.fixed.beta_hat, "--betaHat")?,
        cfg.n_range.0,
    ))
}

fn rat_params(cfg: &RunConfig) -> Result<RatParams<Rational>, CliError> {
    Ok(RatParams::new(required(&cfg.fixed.a, "--a")?, required(&cfg.fixed.b, "--b")?, cfg.n_range.0))
}

fn convert_hahn<S: Scalar>(p: &HahnParams<Rational>) -> HahnParams<S> {
    HahnParams::new(S::from_rational(&p.alpha_hat), S::from_rational(&p.beta_hat), p.n)
}

fn convert_rat<S: Scalar>(p: &RatParams<Rational>) -> RatParams<S> {
    RatParams::new(S::from_rational(&p.a), S::from_rational(&p.b), p.n)
}

macro_rules! on_backend {
    ($backend:expr, $f:ident($($arg:expr),*)) => {
        match $backend {
            Backend::Exact => $f::<Rational>($($arg),*),
            Backend::Float => $f::<Float>($($arg),*),
        }
    };
}

pub fn execute(cfg: &RunConfig) -> Result<Report, CliError> {
    let mut report = Report::new(cfg.echo.clone());
    match &cfg.command {
        Command::Repn => on_backend!(cfg.backend, repn(cfg, &mut report))?,
        Command::Bases => on_backend!(cfg.backend, bases(cfg, &mut report))?,
        Command::Overlaps => on_backend!(cfg.backend, overlaps(cfg, &mut report))?,
        Command::Eval { family } => {
            report.value = Some(on_backend!(cfg.backend, eval(cfg, *family))?);
        }
        Command::Table => {
            let family = cfg.family.ok_or_else(|| CliError::Config("table needs --family".into()))?;
            let table = on_backend!(cfg.backend, table(cfg, family))?;
            report.tables.insert(table_name(family).to_string(), table);
        }
        Command::Verify { .. } | Command::Sweep => verify(cfg, &mut report)?,
    }
    Ok(report)
}

fn repn<S: Scalar>(cfg: &RunConfig, report: &mut Report) -> Result<(), CliError> {
    let repn = build_repn(fixed_module(cfg)?.convert::<S>())?;
    report.tables.insert("Z".into(), matrix_table(&repn.z));
    report.tables.insert("X".into(), matrix_table(&repn.x));
    report.tables.insert("V".into(), matrix_table(&repn.v));
    if let Some(mu) = &cfg.fixed.mu {
        let pencil = mhahn_core::repn::pencil(&repn, &S::from_rational(mu));
        report.tables.insert("X+muZ".into(), matrix_table(&pencil));
    }
    report.reports = algebra(&repn, &[]);
    Ok(())
}

fn bases<S: Scalar>(cfg: &RunConfig, report: &mut Report) -> Result<(), CliError> {
    let (params, mu) = fixed_generic_module(cfg)?;
    let (params, mu) = (params.convert::<S>(), S::from_rational(&mu));
    let (_, bases) = build_all(params.clone(), &mu)?;
    for family in Family::ALL {
        let b = bases.get(family);
        report.tables.insert(family.to_string(), matrix_table(&b.columns));
        let eigen = vec![b.eigenvalues.iter().map(|x| x.to_string()).collect()];
        report.tables.insert(format!("{family} eigenvalues"), eigen);
    }
    report.reports = module_suites(params, Some(mu), &[], Suite::Bases);
    Ok(())
}

fn overlaps<S: Scalar>(cfg: &RunConfig, report: &mut Report) -> Result<(), CliError> {
    let (params, mu) = fixed_generic_module(cfg)?;
    let (params, mu) = (params.convert::<S>(), S::from_rational(&mu));
    let (repn, bases) = build_all(params.clone(), &mu)?;
    for kind in OverlapKind::ALL {
        report.tables.insert(kind.to_string(), matrix_table(&overlap_table(&repn, &bases, kind).values));
    }
    report.reports = module_suites(params, Some(mu), &[], Suite::Overlaps);
    Ok(())
}

fn eval<S: Scalar>(cfg: &RunConfig, family: EvalFamily) -> Result<String, CliError> {
    let m = cfg.m.ok_or_else(|| CliError::Config("eval needs --m".into()))?;
    let x = S::from_rational(&required(&cfg.x, "--x")?);
    let value = match family {
        EvalFamily::Hahn => hahn_q(m, &x, &convert_hahn::<S>(&hahn_params(cfg)?))?,
        EvalFamily::Dual => dual_hahn_r(m, &x, &convert_hahn::<S>(&hahn_params(cfg)?))?,
        EvalFamily::U => rat_u(m, &x, &convert_rat::<S>(&rat_params(cfg)?))?,
        EvalFamily::V => rat_v(m, &x, &convert_rat::<S>(&rat_params(cfg)?))?,
    };
    Ok(value.to_string())
}

pub fn table_name(family: TableFamily) -> &'static str {
    match family {
        TableFamily::S => "S",
        TableFamily::St => "St",
        TableFamily::OverlapU => "U",
        TableFamily::OverlapUt => "Ut",
        TableFamily::Q => "Q",
        TableFamily::R => "R",
        TableFamily::U => "u",
        TableFamily::V => "v",
        TableFamily::Weights => "weights",
    }
}

fn table<S: Scalar>(cfg: &RunConfig, family: TableFamily) -> Result<Table, CliError> {
    let kind = match family {
        TableFamily::S => Some(OverlapKind::S),
        TableFamily::St => Some(OverlapKind::STilde),
        TableFamily::OverlapU => Some(OverlapKind::U),
        TableFamily::OverlapUt => Some(OverlapKind::UTilde),
        _ => None,
    };
    if let Some(kind) = kind {
        let (params, mu) = fixed_generic_module(cfg)?;
        let (repn, bases) = build_all(params.convert::<S>(), &S::from_rational(&mu))?;
        return Ok(matrix_table(&overlap_table(&repn, &bases, kind).values));
    }
    let n = cfg.n_range.0;
    Ok(match family {
        TableFamily::Q => grid_table(&convert_hahn::<S>(&hahn_params(cfg)?).grid()?),
        TableFamily::R => {
            let p = convert_hahn::<S>(&hahn_params(cfg)?);
            let rows = (0..=n)
                .map(|m| (0..=n).map(|x| dual_hahn_r(m, &S::from_usize(x), &p)).collect())
                .collect::<Result<Vec<Vec<S>>, _>>()?;
            grid_table(&rows)
        }
        TableFamily::U => grid_table(&convert_rat::<S>(&rat_params(cfg)?).u_grid()?),
        TableFamily::V => grid_table(&convert_rat::<S>(&rat_params(cfg)?).v_grid()?),
        TableFamily::Weights => {
            let data = biorth_data(&convert_rat::<S>(&rat_params(cfg)?))?;
            data.weights_w.iter().map(|w| vec![w.to_string()]).collect()
        }
        _ => unreachable!("overlap families handled above"),
    })
}

fn thread_pool() -> Result<rayon::ThreadPool, CliError> {
    let machine = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    let threads = match std::env::var("MHAHN_THREADS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(k) if k > 0 => k.min(machine),
            _ => return Err(CliError::Config(format!("MHAHN_THREADS must be a positive integer, got {v:?}"))),
        },
        Err(_) => machine,
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Config(format!("thread pool: {e}")))
}

fn job(cfg: &RunConfig, n: usize, d: u64) -> Result<(Sample, Vec<Entry>), CliError> {
    let sample = draw::sample(cfg, n, d)?;
    let entries = run_sample(&sample, cfg.suite, cfg.backend);
    Ok((sample, entries))
}

/// Runs every `(N, draw)` job concurrently and merges results in job order.
fn verify(cfg: &RunConfig, report: &mut Report) -> Result<(), CliError> {
    let per_n = draws(cfg);
    let jobs: Vec<(usize, u64)> =
        (cfg.n_range.0..=cfg.n_range.1).flat_map(|n| (0..per_n).map(move |d| (n, d))).collect();
    let results = thread_pool()?.install(|| jobs.par_iter().map(|&(n, d)| job(cfg, n, d)).collect::<Vec<_>>());
    let mut merger = Merger::default();
    let mut summary = Summary { jobs: jobs.len(), passed: 0, failed: 0, worst_residual: "0".to_string() };
    for (&(n, d), result) in jobs.iter().zip(results) {
        let (sample, entries) = result?;
        let params = sample.describe();
        if entries.iter().all(|e| e.pass) {
            summary.passed += 1;
        } else {
            summary.failed += 1;
        }
        for e in entries {
            if residual_key(&e.max_residual) > residual_key(&summary.worst_residual) {
                summary.worst_residual = e.max_residual.clone();
            }
            merger.add(e.within(&[n as i64, d as i64], Some(&params)));
        }
    }
    report.reports = merger.finish();
    report.summary = Some(summary);
    Ok(())
}
