//! Command-line front end for `hurwitz-core`.
//!
//! [`run`] parses arguments, executes one request and renders the report in
//! JSON, CSV or plain text. Every emitted value is an exact rational string.

pub mod commands;
pub mod output;
pub mod suites;
pub mod tables;

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufReader, Write};
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hurwitz_core::recursion::{export_cache, import_cache, Engine};
use hurwitz_core::{Budget, Error, Result};

pub use output::{Format, Report};

/// Environment variable holding the default cache path.
pub const CACHE_ENV: &str = "HURWITZ_CACHE";

#[derive(Parser, Debug)]
#[command(name = "hurwitz", version, about = "Exact pruned and unpruned Hurwitz numbers")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Maximum number of candidates an exhaustive oracle may visit.
    #[arg(long, global = true, default_value_t = 100_000_000)]
    pub budget: u128,
    /// JSON-lines cache of recursion values, loaded before and written after the command.
    #[arg(long, global = true, env = CACHE_ENV)]
    pub cache: Option<String>,
    /// Recompute every cache record on load and refuse mismatches.
    #[arg(long, global = true)]
    pub verify_cache: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// A single value.
    Compute(ComputeArgs),
    /// A (quasi-)polynomial in closed form.
    Poly(PolyArgs),
    /// A pruning correspondence applied to one argument.
    Transform(TransformArgs),
    /// Psi-class and lambda-class intersection numbers.
    Intersect(IntersectArgs),
    /// Run verification suites; exits 1 if any check fails.
    Verify(VerifyArgs),
    /// Reference tables next to recomputed values.
    Table(TableArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyArg {
    Simple,
    PrunedSimple,
    Orbifold,
    PrunedOrbifold,
    Belyi,
    PrunedBelyi,
    Cycle,
    Gw,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Recursion,
    Oracle,
    Enumeration,
    Lattice,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum DirectionArg {
    PrunedToFull,
    FullToPruned,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransformFamily {
    Simple,
    Orbifold,
    Belyi,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableArg {
    Khat,
    Q,
    Gw,
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Orbifold parameter, orbifold families only.
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub g: usize,
    /// Comma-separated integers; zero entries only for `gw`.
    #[arg(long, value_parser = parse_mu)]
    pub mu: MuArg,
    /// How to compute; defaults to the recursion where one exists.
    #[arg(long, value_enum)]
    pub source: Option<Source>,
}

#[derive(Args, Debug)]
pub struct PolyArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub g: usize,
    #[arg(long)]
    pub n: usize,
}

#[derive(Args, Debug)]
pub struct TransformArgs {
    #[arg(long, value_enum)]
    pub family: TransformFamily,
    #[arg(long, value_enum)]
    pub direction: DirectionArg,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub g: usize,
    #[arg(long, value_parser = parse_mu)]
    pub mu: MuArg,
}

#[derive(Args, Debug)]
pub struct IntersectArgs {
    #[arg(long)]
    pub g: u32,
    /// Comma-separated psi exponents; omit to list every bracket for `--n` points.
    #[arg(long, value_delimiter = ',')]
    pub d: Option<Vec<u32>>,
    /// Power of lambda_1.
    #[arg(long, default_value_t = 0)]
    pub lambda: u32,
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// One of the suite names or `all`.
    #[arg(long, default_value = "all")]
    pub suite: String,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub which: TableArg,
}

/// A parsed `mu` list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuArg(pub Vec<usize>);

fn parse_mu(s: &str) -> std::result::Result<MuArg, String> {
    let parts: std::result::Result<Vec<usize>, _> = s.split(',').map(|p| p.trim().parse::<usize>()).collect();
    match parts {
        Ok(v) if !v.is_empty() => Ok(MuArg(v)),
        _ => Err(format!("malformed mu {s:?}: expected comma-separated non-negative integers")),
    }
}

/// Outcome of a run: rendered stdout text and the process exit status.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub status: i32,
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Domain(_) => "domain",
        Error::Budget { .. } => "budget",
        Error::Dependency(_) => "dependency",
        Error::UnderDetermined(_) => "under-determined",
        Error::Inconsistent(_) => "inconsistent",
        Error::Unsupported(_) => "unsupported",
        Error::Parse(_) => "parse",
    }
}

fn error_outcome(e: &Error) -> Outcome {
    let body = serde_json::json!({ "error": { "kind": error_kind(e), "message": e.to_string() } });
    Outcome { stdout: String::new(), stderr: format!("{body}\n"), status: if e.is_budget() { 2 } else { 1 } }
}

/// Parses `args` (program name first) and executes the request.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if status == 0 {
                Outcome { stdout: text, stderr: String::new(), status }
            } else {
                Outcome { stdout: String::new(), stderr: text, status }
            };
        }
    };
    let mut stderr = String::new();
    let result = execute(&cli, &mut stderr);
    match result {
        Ok(report) => {
            let status = if report.failed { 1 } else { 0 };
            Outcome { stdout: report.render(cli.global.format), stderr, status }
        }
        Err(e) => {
            let mut out = error_outcome(&e);
            out.stderr = stderr + &out.stderr;
            out
        }
    }
}

fn execute(cli: &Cli, log: &mut String) -> Result<Report> {
    let budget = Budget::new(cli.global.budget);
    let engine = Engine::global();
    if let Some(path) = &cli.global.cache {
        if Path::new(path).exists() {
            let file = File::open(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
            let loaded = import_cache(engine, BufReader::new(file), cli.global.verify_cache)?;
            if cli.global.verify_cache {
                log.push_str(&format!("cache: {loaded} records verified, 0 mismatches\n"));
            } else {
                log.push_str(&format!("cache: {loaded} records loaded\n"));
            }
        } else if cli.global.verify_cache {
            return Err(Error::Parse(format!("{path}: cache file does not exist")));
        }
    } else if cli.global.verify_cache {
        return Err(Error::domain(format!("--verify-cache needs --cache or {CACHE_ENV}")));
    }
    let report = commands::dispatch(&cli.command, &budget)?;
    if let Some(path) = &cli.global.cache {
        let mut file = File::create(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
        let written = export_cache(engine, &mut file)?;
        file.flush().map_err(|e| Error::Parse(format!("{path}: {e}")))?;
        log.push_str(&format!("cache: {written} records written\n"));
    }
    Ok(report)
}

/// Runs a request given without the program name and returns stdout, or the error.
pub fn run_to_string(args: &[&str]) -> Result<String> {
    let cli = Cli::try_parse_from(std::iter::once("hurwitz").chain(args.iter().copied()))
        .map_err(|e| Error::Parse(e.to_string()))?;
    let report = commands::dispatch(&cli.command, &Budget::new(cli.global.budget))?;
    Ok(report.render(cli.global.format))
}
