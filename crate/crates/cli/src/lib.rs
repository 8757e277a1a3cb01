//! Command-line front end for `galois-kit`.
//!
//! [`run_command`] parses an argument vector, runs one subcommand and
//! returns everything the binary prints together with the exit code:
//! 0 on success, 2 on parse or input errors, 3 when a degree or order cap
//! refuses the construction, 4 when an internal check fails.
//!
//! With `--json` the [`Report`] is printed on stdout. Its shape is described
//! by [`SCHEMA`]; identical inputs give byte-identical reports. Timing is
//! never part of the report and goes to stderr with `--timing`.

use std::time::{Duration, Instant};

use clap::Parser;

use galois_kit::Config;

pub mod args;
pub mod chain_file;
pub mod commands;
pub mod report;

use args::{ChainSource, Cli, Command};
use report::{CommandEcho, Engine, ErrorReport, Report, Settings, Status};

/// JSON Schema (draft 7) of the `--json` report.
pub const SCHEMA: &str = include_str!("../schema/report.schema.json");

/// Result of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
    /// `None` only when the arguments themselves could not be parsed.
    pub report: Option<Report>,
    pub elapsed: Duration,
}

fn config_from(options: &args::Options) -> Result<Config, ErrorReport> {
    let mut config = Config::default()
        .with_degree_cap(options.degree_cap)
        .with_seed(options.seed);
    if let Some(primes) = &options.primes {
        if let Some(bad) = primes.iter().find(|&&p| !galois_kit::exact_poly::is_prime(p)) {
            return Err(ErrorReport::input(format!("--primes: {bad} is not prime")));
        }
        config.witness_primes = primes.clone();
    }
    Ok(config)
}

fn load_chain(source: &ChainSource) -> Result<Vec<galois_kit::radical::RadicalSpec>, ErrorReport> {
    match (&source.chain, &source.chain_json) {
        (Some(path), _) => chain_file::read_chain(path),
        (None, Some(text)) => chain_file::parse_chain(text),
        (None, None) => Err(ErrorReport::input("no chain given")),
    }
}

fn dispatch(command: &Command, config: &Config) -> Result<commands::Output, ErrorReport> {
    let out = match command {
        Command::Factor { poly } => commands::factor(poly, config),
        Command::Split { poly } => commands::split(poly, config),
        Command::Group { poly } => commands::group(poly, config),
        Command::Minpoly { poly, elements } => commands::minpoly(poly, elements, config),
        Command::Fixed { poly, subgroup } => commands::fixed(poly, subgroup, config),
        Command::ChainGroups(src) => commands::chain_groups(&load_chain(src)?, config),
        Command::Normalize(src) => commands::normalize(&load_chain(src)?, config),
        Command::VerifyTower(src) => commands::verify_tower(&load_chain(src)?, config),
        Command::Solvable { poly } => commands::solvable(poly, config),
    };
    out.map_err(ErrorReport::from)
}

/// Runs one command. `argv[0]` is the program name.
pub fn run_command<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let start = Instant::now();
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let exit_code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() { (String::new(), rendered) } else { (rendered, String::new()) };
            return Outcome {
                exit_code,
                stdout,
                stderr,
                report: None,
                elapsed: start.elapsed(),
            };
        }
    };
    let echo = CommandEcho {
        name: cli.command.name().to_string(),
        argv: argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect(),
    };
    let defaults = Config::default();
    let mut settings = Settings {
        degree_cap: cli.options.degree_cap,
        seed: cli.options.seed,
        primes: cli.options.primes.clone().unwrap_or(defaults.witness_primes),
    };
    let outcome = config_from(&cli.options).and_then(|config| {
        settings.primes = config.witness_primes.clone();
        dispatch(&cli.command, &config)
    });
    let (report, text) = match outcome {
        Ok(out) => {
            let ok = out.checks.iter().all(|c| c.passed);
            let report = Report {
                engine: Engine::default(),
                command: echo,
                settings,
                status: if ok { Status::Ok } else { Status::ChecksFailed },
                exit_code: if ok { 0 } else { 4 },
                result: Some(out.result),
                checks: out.checks,
                error: None,
            };
            (report, out.text)
        }
        Err(err) => {
            let report = Report {
                engine: Engine::default(),
                command: echo,
                settings,
                status: Status::Error,
                exit_code: err.kind.exit_code(),
                result: None,
                checks: Vec::new(),
                error: Some(err),
            };
            (report, String::new())
        }
    };
    let elapsed = start.elapsed();
    let stdout = if cli.options.json {
        serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
    } else {
        text
    };
    let mut stderr = String::new();
    if let Some(err) = &report.error {
        if !cli.options.json {
            stderr.push_str(&format!("error: {}\n", err.message));
            if !err.expected.is_empty() {
                stderr.push_str(&format!("expected one of: {}\n", err.expected.join(", ")));
            }
        }
    } else if report.status == Status::ChecksFailed && !cli.options.json {
        stderr.push_str("error: an internal check failed\n");
    }
    if cli.options.timing {
        stderr.push_str(&format!("elapsed: {:.3} s\n", elapsed.as_secs_f64()));
    }
    Outcome {
        exit_code: report.exit_code,
        stdout,
        stderr,
        report: Some(report),
        elapsed,
    }
}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/command-line.md")]
mod command_line_chapter {}
