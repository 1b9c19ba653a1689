//! The `jost` command-line driver: input files, jobs and exit codes.
//!
//! Inputs are TOML documents with one object per file (Jacobi parameters,
//! spectral data or Verblunsky coefficients). Each job writes a TOML report
//! to `--output` (stdout if absent) and, where there is a table to show, a
//! CSV file next to it with the same stem.
//!
//! Exit codes: 0 on success, 1 on I/O or parse errors, 2 when the data fail
//! validation (normalization, noncanonical weights, failed checks).

mod input;
mod jobs;

use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use thiserror::Error;

use crate::numerics::ToleranceConfig;

pub use input::{parse_input, parse_input_with, parse_str, Input};
pub use jobs::Report;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CliError {
    #[error("I/O error: {0}")]
    Io(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("{0} input is not accepted by `{1}`")]
    WrongInput(&'static str, &'static str),
    #[error(transparent)]
    Validation(#[from] crate::Error),
    #[error("check failed [{tag}]: {message}")]
    CheckFailed { tag: &'static str, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) | CliError::Schema(_) | CliError::WrongInput(..) => 1,
            CliError::Validation(_) | CliError::CheckFailed { .. } => 2,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            CliError::Io(_) => "io",
            CliError::Schema(_) => "schema",
            CliError::WrongInput(..) => "wrong-input",
            CliError::Validation(e) => e.tag(),
            CliError::CheckFailed { tag, .. } => tag,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Jacobi parameters → Jost function, bound states, spectral density.
    Forward,
    /// Spectral data → Jacobi parameters by coefficient stripping.
    Invert,
    /// Canonical weights of the bound states in a spectral file.
    Weights,
    /// Decay-rate estimate of Jacobi parameters (stripping spectral data first).
    Decay,
    /// Szegő/Schur consistency checks on Verblunsky coefficients.
    OpucCheck,
    /// Forward map followed by stripping, with the parameter error.
    Roundtrip,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Forward => "forward",
            Command::Invert => "invert",
            Command::Weights => "weights",
            Command::Decay => "decay",
            Command::OpucCheck => "opuc-check",
            Command::Roundtrip => "roundtrip",
        }
    }
}

/// One job: a command, its input and output, and numerical settings.
#[derive(Debug, Clone, PartialEq)]
pub struct JobSpec {
    pub command: Command,
    pub input_path: PathBuf,
    /// TOML report path; the CSV table goes next to it. `None` prints the
    /// report to stdout and skips the table.
    pub output_path: Option<PathBuf>,
    pub tolerances: ToleranceConfig,
    pub strip_steps: usize,
    pub r0: f64,
    /// Working radius for stripping; picked from `u` when absent.
    pub radius: Option<f64>,
}

impl JobSpec {
    pub fn new(command: Command, input_path: impl Into<PathBuf>) -> Self {
        Self {
            command,
            input_path: input_path.into(),
            output_path: None,
            tolerances: ToleranceConfig::default(),
            strip_steps: 40,
            r0: 0.25,
            radius: None,
        }
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.input_path.as_os_str().is_empty() {
            return Err(CliError::Schema("input path is empty".into()));
        }
        if matches!(&self.output_path, Some(p) if p.as_os_str().is_empty()) {
            return Err(CliError::Schema("output path is empty".into()));
        }
        self.tolerances.validate().map_err(|e| CliError::Schema(e.to_string()))
    }
}

#[derive(Debug, Parser)]
#[command(name = "jost", version, about = "Jost functions and coefficient stripping for Jacobi matrices")]
pub struct Args {
    #[arg(value_enum)]
    pub command: Command,
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, default_value_t = 512)]
    pub theta_points: usize,
    #[arg(long, default_value_t = 40)]
    pub strip_steps: usize,
    #[arg(long, default_value_t = 0.25)]
    pub r0: f64,
    /// Outer radius of the working annulus.
    #[arg(long)]
    pub radius: Option<f64>,
    #[arg(long, default_value_t = 1e-12)]
    pub tol_root: f64,
    #[arg(long, default_value_t = 1e-8)]
    pub tol_residue: f64,
    #[arg(long, default_value_t = 1e-7)]
    pub tol_roundtrip: f64,
}

impl From<Args> for JobSpec {
    fn from(a: Args) -> Self {
        Self {
            command: a.command,
            input_path: a.input,
            output_path: a.output,
            tolerances: ToleranceConfig {
                root_tol: a.tol_root,
                residue_tol: a.tol_residue,
                roundtrip_tol: a.tol_roundtrip,
                quad_points: a.theta_points,
            },
            strip_steps: a.strip_steps,
            r0: a.r0,
            radius: a.radius,
        }
    }
}

/// Runs a job and returns its exit code. Errors go to stderr as
/// `error[tag]: message`; validation failures also write a report with
/// `status = "error"` when an output path is set.
pub fn run(job: &JobSpec) -> i32 {
    match execute(job) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error[{}]: {e}", e.tag());
            if e.exit_code() == 2 {
                let report = Report::error(job.command.name(), e.tag(), &e.to_string());
                if let Err(io) = report.write(job.output_path.as_deref()) {
                    eprintln!("error[io]: {io}");
                    return 1;
                }
            }
            e.exit_code()
        }
    }
}

fn execute(job: &JobSpec) -> Result<(), CliError> {
    job.validate()?;
    let input = parse_input_with(&job.input_path, job.tolerances.root_tol)?;
    let report = jobs::dispatch(job, input)?;
    report.write(job.output_path.as_deref())?;
    report.into_result()
}

/// Parses `std::env::args` and runs the job. Flag errors exit with 1,
/// `--help`/`--version` with 0.
pub fn main_exit_code() -> i32 {
    match Args::try_parse() {
        Ok(args) => run(&args.into()),
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            code
        }
    }
}
