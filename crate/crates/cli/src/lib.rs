//! Command-line front end: parameter parsing, verification sweeps and report
//! emission in JSON and CSV.

pub mod commands;
pub mod config;
pub mod draw;
pub mod error;
pub mod report;
pub mod suites;

use std::ffi::OsString;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;

use crate::config::{Cli, Command, OutputFormat, RunConfig, TableFamily};
use crate::report::{grid_csv, named_csv, Report};

/// Everything a process run produces.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let echo = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect::<Vec<_>>().join(" ");
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { stdout: text, stderr: String::new(), code: EXIT_PASS }
                }
                _ => Outcome { stdout: String::new(), stderr: text, code: EXIT_CONFIG },
            };
        }
    };
    let start = Instant::now();
    let result = RunConfig::from_cli(cli, echo).and_then(|cfg| commands::execute(&cfg).map(|r| (cfg, r)));
    match result {
        Ok((cfg, mut report)) => {
            if cfg.timing {
                report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
            }
            let code = if report.pass() { EXIT_PASS } else { EXIT_FAIL };
            Outcome { stdout: render(&cfg, &report), stderr: String::new(), code }
        }
        Err(e) => Outcome { stdout: String::new(), stderr: format!("mhahn: {e}\n"), code: e.exit_code() },
    }
}

/// `eval` prints the bare value and `table` prints CSV unless `--output` says
/// otherwise; every other command defaults to JSON.
pub fn render(cfg: &RunConfig, report: &Report) -> String {
    let format = cfg.output.unwrap_or(match cfg.command {
        Command::Table => OutputFormat::Csv,
        _ => OutputFormat::Json,
    });
    match (format, &cfg.command) {
        (OutputFormat::Json, Command::Eval { .. }) if cfg.output.is_none() => {
            format!("{}\n", report.value.as_deref().unwrap_or_default())
        }
        (OutputFormat::Json, _) => report.to_json(),
        (OutputFormat::Csv, Command::Eval { .. }) => {
            format!("value\n{}\n", report.value.as_deref().unwrap_or_default())
        }
        (OutputFormat::Csv, Command::Table) => {
            let (name, values) = report.tables.iter().next().expect("table command fills one table");
            if cfg.family == Some(TableFamily::Weights) || name == "weights" {
                let mut out = String::from("n,weight\n");
                for (n, row) in values.iter().enumerate() {
                    out += &format!("{n},{}\n", row[0]);
                }
                out
            } else {
                grid_csv(values)
            }
        }
        (OutputFormat::Csv, Command::Repn | Command::Bases | Command::Overlaps) => named_csv(&report.tables),
        (OutputFormat::Csv, _) => report.to_csv(),
    }
}
