//! Command-line arguments and their validation into a [`RunConfig`].

use std::fmt;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mhahn_core::scalar::parse_rational;
use mhahn_core::{Backend, Rational};

use crate::error::CliError;

#[derive(Parser, Debug)]
#[command(name = "mhahn", version, about = "Exact verification of the meta Hahn algebra and its special functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Opts,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Emit the matrices Z, X, V (and X + mu Z with --mu).
    Repn,
    /// Emit the six eigenbases.
    Bases,
    /// Emit the overlap tables S, St, U, Ut and match them against their closed forms.
    Overlaps,
    /// Evaluate one special function at one point.
    Eval {
        #[arg(id = "function", value_name = "FUNCTION", value_enum)]
        family: EvalFamily,
    },
    /// Emit a table of values on the (N+1)^2 grid.
    Table,
    /// Run a suite of identity checks over random parameter draws.
    Verify {
        #[arg(id = "suite_name", value_name = "SUITE", value_enum)]
        suite: Option<Suite>,
    },
    /// Run a suite over a range of N.
    Sweep,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Repn => "repn",
            Command::Bases => "bases",
            Command::Overlaps => "overlaps",
            Command::Eval { .. } => "eval",
            Command::Table => "table",
            Command::Verify { .. } => "verify",
            Command::Sweep => "sweep",
        }
    }
}

#[derive(Args, Debug, Clone, Default)]
pub struct Opts {
    #[arg(long = "N", global = true)]
    pub n: Option<usize>,
    #[arg(long = "Nmin", global = true)]
    pub n_min: Option<usize>,
    #[arg(long = "Nmax", global = true)]
    pub n_max: Option<usize>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub beta: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub mu: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long = "alphaHat", global = true, allow_hyphen_values = true)]
    pub alpha_hat: Option<String>,
    #[arg(long = "betaHat", global = true, allow_hyphen_values = true)]
    pub beta_hat: Option<String>,
    /// `ones`, `random`, or the list `a0,a1,...,a(N-1)`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub gauge: Option<String>,
    #[arg(long, global = true, value_enum)]
    pub backend: Option<BackendArg>,
    #[arg(long, global = true, value_enum)]
    pub output: Option<OutputFormat>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: Option<u64>,
    #[arg(long, global = true, value_enum)]
    pub suite: Option<Suite>,
    #[arg(long, global = true, value_enum)]
    pub family: Option<TableFamily>,
    #[arg(long, global = true)]
    pub m: Option<usize>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub x: Option<String>,
    /// Report wall-clock time in `elapsed_ms`.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum BackendArg {
    Exact,
    Float,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Algebra,
    Bases,
    Overlaps,
    Hahn,
    Rational,
    Appendix,
    All,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalFamily {
    /// Hahn polynomial Q_m(x).
    Hahn,
    /// Dual Hahn polynomial R_m(lambda(x)).
    Dual,
    /// Rational function U_m(x).
    U,
    /// Rational function V_m(x).
    V,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFamily {
    #[value(name = "S")]
    S,
    #[value(name = "St")]
    St,
    #[value(name = "U")]
    OverlapU,
    #[value(name = "Ut")]
    OverlapUt,
    #[value(name = "Q")]
    Q,
    #[value(name = "R")]
    R,
    #[value(name = "u")]
    U,
    #[value(name = "v")]
    V,
    #[value(name = "weights")]
    Weights,
}

/// Gauge constants `a_0, ..., a_(N-1)`; `a_N = 0` is implied.
#[derive(Debug, Clone, PartialEq)]
pub enum Gauge {
    Ones,
    Random,
    List(Vec<Rational>),
}

/// The module-level parameters that may be fixed on the command line; absent
/// ones are drawn at random.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Fixed {
    pub alpha: Option<Rational>,
    pub beta: Option<Rational>,
    pub mu: Option<Rational>,
    pub a: Option<Rational>,
    pub b: Option<Rational>,
    pub alpha_hat: Option<Rational>,
    pub beta_hat: Option<Rational>,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    /// Command line echo, without the program name.
    pub echo: String,
    pub n_range: (usize, usize),
    pub fixed: Fixed,
    pub gauge: Gauge,
    pub backend: Backend,
    pub output: Option<OutputFormat>,
    pub seed: u64,
    pub trials: u64,
    pub suite: Suite,
    pub family: Option<TableFamily>,
    pub m: Option<usize>,
    pub x: Option<Rational>,
    pub timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Param {
    Alpha,
    Beta,
    Mu,
    A,
    B,
    AlphaHat,
    BetaHat,
    M,
    X,
    Family,
    Suite,
    Range,
    Trials,
    Gauge,
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Param::Alpha => "--alpha",
            Param::Beta => "--beta",
            Param::Mu => "--mu",
            Param::A => "--a",
            Param::B => "--b",
            Param::AlphaHat => "--alphaHat",
            Param::BetaHat => "--betaHat",
            Param::M => "--m",
            Param::X => "--x",
            Param::Family => "--family",
            Param::Suite => "--suite",
            Param::Range => "--Nmin/--Nmax",
            Param::Trials => "--trials",
            Param::Gauge => "--gauge",
        })
    }
}

const MODULE: &[Param] = &[Param::Alpha, Param::Beta, Param::Mu, Param::Gauge];
const HAHN: &[Param] = &[Param::AlphaHat, Param::BetaHat];
const RATIONAL: &[Param] = &[Param::A, Param::B];

fn rational(flag: &str, text: &Option<String>) -> Result<Option<Rational>, CliError> {
    text.as_deref().map(|t| parse_rational(t).map_err(|e| CliError::Config(format!("{flag}: {e}")))).transpose()
}

fn gauge(text: Option<&str>) -> Result<Gauge, CliError> {
    match text {
        None | Some("ones") => Ok(Gauge::Ones),
        Some("random") => Ok(Gauge::Random),
        Some(list) => list
            .split(',')
            .map(|t| parse_rational(t).map_err(|e| CliError::Config(format!("--gauge: {e}"))))
            .collect::<Result<Vec<_>, _>>()
            .map(Gauge::List),
    }
}

impl RunConfig {
    pub fn from_cli(cli: Cli, echo: String) -> Result<Self, CliError> {
        let o = cli.opts;
        let fixed = Fixed {
            alpha: rational("--alpha", &o.alpha)?,
            beta: rational("--beta", &o.beta)?,
            mu: rational("--mu", &o.mu)?,
            a: rational("--a", &o.a)?,
            b: rational("--b", &o.b)?,
            alpha_hat: rational("--alphaHat", &o.alpha_hat)?,
            beta_hat: rational("--betaHat", &o.beta_hat)?,
        };
        let present = |p: Param| match p {
            Param::Alpha => o.alpha.is_some(),
            Param::Beta => o.beta.is_some(),
            Param::Mu => o.mu.is_some(),
            Param::A => o.a.is_some(),
            Param::B => o.b.is_some(),
            Param::AlphaHat => o.alpha_hat.is_some(),
            Param::BetaHat => o.beta_hat.is_some(),
            Param::M => o.m.is_some(),
            Param::X => o.x.is_some(),
            Param::Family => o.family.is_some(),
            Param::Suite => o.suite.is_some(),
            Param::Range => o.n_min.is_some() || o.n_max.is_some(),
            Param::Trials => o.trials.is_some(),
            Param::Gauge => o.gauge.is_some(),
        };

        let suite = match (&cli.command, o.suite) {
            (Command::Verify { suite: Some(s) }, Some(t)) if *s != t => {
                return Err(CliError::Config(format!("conflicting suites {s:?} and {t:?}")))
            }
            (Command::Verify { suite: Some(s) }, _) => *s,
            (_, Some(s)) => s,
            _ => Suite::All,
        };

        // (required, optional) parameters per command
        let (required, optional): (Vec<Param>, Vec<Param>) = match &cli.command {
            Command::Repn => (vec![Param::Alpha, Param::Beta], vec![Param::Mu, Param::Gauge]),
            Command::Bases | Command::Overlaps => (vec![Param::Alpha, Param::Beta, Param::Mu], vec![Param::Gauge]),
            Command::Eval { family } => {
                let params = match family {
                    EvalFamily::Hahn | EvalFamily::Dual => HAHN,
                    EvalFamily::U | EvalFamily::V => RATIONAL,
                };
                ([params, &[Param::M, Param::X]].concat(), vec![])
            }
            Command::Table => {
                let family = o.family.ok_or_else(|| CliError::Config("table needs --family".into()))?;
                match family {
                    TableFamily::S | TableFamily::St | TableFamily::OverlapU | TableFamily::OverlapUt => {
                        (vec![Param::Alpha, Param::Beta, Param::Mu, Param::Family], vec![Param::Gauge])
                    }
                    TableFamily::Q | TableFamily::R => ([HAHN, &[Param::Family]].concat(), vec![]),
                    TableFamily::U | TableFamily::V | TableFamily::Weights => {
                        ([RATIONAL, &[Param::Family]].concat(), vec![])
                    }
                }
            }
            Command::Verify { .. } | Command::Sweep => {
                let params: &[Param] = match suite {
                    Suite::Algebra => &[Param::Alpha, Param::Beta, Param::Gauge],
                    Suite::Bases | Suite::Overlaps | Suite::Appendix | Suite::All => MODULE,
                    Suite::Hahn => HAHN,
                    Suite::Rational => RATIONAL,
                };
                let mut optional = params.to_vec();
                optional.extend([Param::Suite, Param::Trials]);
                if matches!(cli.command, Command::Sweep) {
                    optional.push(Param::Range);
                }
                (vec![], optional)
            }
        };
        let all = [
            Param::Alpha,
            Param::Beta,
            Param::Mu,
            Param::A,
            Param::B,
            Param::AlphaHat,
            Param::BetaHat,
            Param::M,
            Param::X,
            Param::Family,
            Param::Suite,
            Param::Range,
            Param::Trials,
            Param::Gauge,
        ];
        let command = cli.command.name();
        for p in all {
            if required.contains(&p) && !present(p) {
                return Err(CliError::Config(format!("{command} needs {p}")));
            }
            if present(p) && !required.contains(&p) && !optional.contains(&p) {
                return Err(CliError::Config(format!("{p} is not used by {command}")));
            }
        }

        let n_range = match &cli.command {
            Command::Sweep => {
                if o.n.is_some() {
                    return Err(CliError::Config("sweep takes --Nmin/--Nmax, not --N".into()));
                }
                let lo = o.n_min.unwrap_or(1);
                let hi = o.n_max.unwrap_or(10);
                if lo > hi {
                    return Err(CliError::Config(format!("empty range --Nmin {lo} --Nmax {hi}")));
                }
                (lo, hi)
            }
            _ => {
                let n = o.n.ok_or_else(|| CliError::Config(format!("{command} needs --N")))?;
                (n, n)
            }
        };

        let gauge = gauge(o.gauge.as_deref())?;
        if let Gauge::List(list) = &gauge {
            if n_range.0 != n_range.1 || list.len() != n_range.0 {
                return Err(CliError::Config(format!(
                    "--gauge lists a_0..a_(N-1): expected {} values, got {}",
                    n_range.0,
                    list.len()
                )));
            }
        }

        let sampled = matches!(cli.command, Command::Verify { .. } | Command::Sweep);
        let trials = o.trials.unwrap_or(if sampled { 20 } else { 1 });

        Ok(RunConfig {
            command: cli.command,
            echo,
            n_range,
            fixed,
            gauge,
            backend: match o.backend.unwrap_or(BackendArg::Exact) {
                BackendArg::Exact => Backend::Exact,
                BackendArg::Float => Backend::Float,
            },
            output: o.output,
            seed: o.seed.unwrap_or(0),
            trials,
            suite,
            family: o.family,
            m: o.m,
            x: rational("--x", &o.x)?,
            timing: o.timing,
        })
    }
}
