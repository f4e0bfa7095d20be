//! Command-line front end for the A₃ lattice zeta engine.

pub mod acceptance;
pub mod golden;
pub mod pretty;
pub mod report;

mod commands;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use a3z_algebra::AlgebraError;
use a3z_lattice::{LatticeLabel, TwistLabel};
use a3z_relations::{RelationError, RelationParams, TheoremId};
use a3z_series::{Precision, SeriesError};
use clap::{Args, Parser, Subcommand, ValueEnum};

pub use report::{export_json, ReportDocument};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("cannot write {}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
}

impl From<SeriesError> for CliError {
    fn from(e: SeriesError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<RelationError> for CliError {
    fn from(e: RelationError) -> Self {
        CliError::Domain(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(name = "a3z", version, about = "Zeta-functions of the A3 weight lattices: series, relations, closed forms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Requested significand bits (served at up to 106)
    #[arg(long = "prec-bits", default_value_t = 128)]
    pub prec_bits: u32,
    /// Truncation cutoff for lattice sums
    #[arg(long, default_value_t = 400)]
    pub cutoff: usize,
    /// Tolerance for numeric comparisons
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
    /// Write a JSON report to this path
    #[arg(long)]
    pub json: Option<PathBuf>,
}

impl Common {
    pub fn precision(&self) -> Result<Precision, CliError> {
        Precision::new(self.prec_bits, self.cutoff).map_err(|e| CliError::Usage(format!("--prec-bits/--cutoff: {e}")))
    }

    pub fn tolerance(&self) -> Result<f64, CliError> {
        if self.tol.is_finite() && self.tol > 0.0 {
            Ok(self.tol)
        } else {
            Err(CliError::Usage(format!("--tol must be a positive number, got {}", self.tol)))
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    #[arg(long, default_value_t = 2)]
    pub p: u32,
    #[arg(long, default_value_t = 2)]
    pub q: u32,
    #[arg(long, default_value_t = 2)]
    pub a: u32,
    #[arg(long, default_value_t = 2)]
    pub b: u32,
    #[arg(long, default_value_t = 2)]
    pub c: u32,
}

impl ParamArgs {
    pub fn params(&self) -> Result<RelationParams, CliError> {
        RelationParams::new(self.p, self.q, self.a, self.b, self.c)
            .map_err(|_| CliError::Usage(format!("--p/--q/--a/--b/--c must be >= 1, got ({},{},{},{},{})", self.p, self.q, self.a, self.b, self.c)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DeriveFamily {
    /// (2k, 2k+1, …, 2k+1) from the relation at (2k+1, 2k, 2k+1, 2k+1, 2k+1; s = 2k+1)
    Pnew,
    /// (2k, …, 2k) from the relation with every parameter equal to 2k
    Uniform,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tuple(pub [f64; 6]);

fn parse_tuple(s: &str) -> Result<Tuple, String> {
    let v: Vec<f64> = s
        .split(',')
        .map(|x| x.trim().parse::<f64>().map_err(|_| format!("not a number: {x:?}")))
        .collect::<Result<_, _>>()?;
    let t: [f64; 6] = v.try_into().map_err(|v: Vec<f64>| format!("expected 6 exponents, got {}", v.len()))?;
    if t.iter().any(|x| !x.is_finite()) {
        return Err("exponents must be finite".into());
    }
    Ok(Tuple(t))
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one lattice zeta series numerically
    Eval {
        #[arg(long, value_parser = parse_tuple)]
        tuple: Tuple,
        #[arg(long, default_value = "P")]
        lattice: LatticeLabel,
        #[arg(long, default_value = "zero")]
        twist: TwistLabel,
        /// Skip the comparison with recorded closed forms
        #[arg(long)]
        no_golden: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Print a functional relation: twelve left-hand rows and the symbolic right-hand side
    Relation {
        #[arg(long)]
        theorem: TheoremId,
        #[command(flatten)]
        params: ParamArgs,
        /// Also evaluate the right-hand side at this s
        #[arg(long)]
        s: Option<f64>,
        #[command(flatten)]
        common: Common,
    },
    /// Check a relation numerically
    Verify {
        #[arg(long)]
        theorem: TheoremId,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 2.0)]
        s: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Derive a closed-form evaluation from a relation
    Derive {
        #[arg(long, value_enum, default_value = "pnew")]
        family: DeriveFamily,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value = "A3")]
        target: TheoremId,
        #[command(flatten)]
        common: Common,
    },
    /// Run the reference suites
    Suite {
        /// Run every acceptance criterion instead of the recorded-value suite
        #[arg(long)]
        paper_examples: bool,
        /// Restrict to these criteria (1-12)
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
        #[command(flatten)]
        common: Common,
    },
}

impl Command {
    pub fn common(&self) -> &Common {
        match self {
            Command::Eval { common, .. }
            | Command::Relation { common, .. }
            | Command::Verify { common, .. }
            | Command::Derive { common, .. }
            | Command::Suite { common, .. } => common,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Command::Eval { .. } => "eval",
            Command::Relation { .. } => "relation",
            Command::Verify { .. } => "verify",
            Command::Derive { .. } => "derive",
            Command::Suite { .. } => "suite",
        }
    }
}

/// Result of one command: printed text, the report, and whether every check held.
pub struct Outcome {
    pub text: String,
    pub result: serde_json::Value,
    pub inputs: serde_json::Value,
    pub error_bound: Option<f64>,
    pub ok: bool,
}

pub fn execute(cmd: &Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Eval { tuple, lattice, twist, no_golden, common } => {
            commands::eval(&tuple.0, *twist, *lattice, !no_golden, &common.precision()?, common.tolerance()?)
        }
        Command::Relation { theorem, params, s, common } => commands::relation(*theorem, &params.params()?, *s, &common.precision()?),
        Command::Verify { theorem, params, s, common } => {
            commands::verify(*theorem, &params.params()?, *s, &common.precision()?, common.tolerance()?)
        }
        Command::Derive { family, k, target, common } => {
            commands::derive(*family, *k, *target, &common.precision()?, common.tolerance()?)
        }
        Command::Suite { paper_examples, only, common } => commands::suite(*paper_examples, only, &common.precision()?),
    }
}

/// Parse argv, run the command, print to `out`/`err`; returns the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let start = Instant::now();
    let outcome = match execute(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            return 2;
        }
    };
    let _ = write!(out, "{}", outcome.text);
    if let Some(path) = &cli.command.common().json {
        let doc = ReportDocument {
            command: cli.command.name().into(),
            inputs: outcome.inputs.clone(),
            result: outcome.result.clone(),
            error_bound: outcome.error_bound,
            duration_ms: start.elapsed().as_millis(),
        };
        if let Err(e) = export_json(&doc, path) {
            let _ = writeln!(err, "{e}");
            return 2;
        }
    }
    if outcome.ok {
        0
    } else {
        1
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout(), &mut std::io::stderr())
}
