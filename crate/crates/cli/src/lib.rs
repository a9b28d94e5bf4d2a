//! Command-line front end: reads inputs, runs seeded audits from
//! `semikit`, and emits JSON reports.
//!
//! Exit status is `0` on success, `1` when an audit is falsified and `2` on
//! input errors.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod input;
pub mod report;

pub use report::{Check, Provenance, Report, Status};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Semikit(#[from] semikit::Error),
}

#[derive(Debug, Parser)]
#[command(name = "semikit", version, about = "Exact audits for nonnegative linear algebra")]
pub struct Cli {
    /// Seed for every randomized audit.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Tolerance for floating-point procedures, as a decimal.
    #[arg(long, global = true, default_value = "1e-9")]
    pub tol: String,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Dimension cap for exact procedures.
    #[arg(
        long,
        global = true,
        env = "SEMIKIT_MAX_DIM",
        default_value_t = semikit::semimodule::DEFAULT_DIMENSION_CAP as u64,
        value_parser = clap::value_parser!(u64).range(1..=semikit::semimodule::HARD_DIMENSION_CAP as u64)
    )]
    pub max_dim: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    L2,
    L1,
    Linf,
}

impl From<Kind> for semikit::geometry::NormKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::L2 => semikit::geometry::NormKind::Euclidean,
            Kind::L1 => semikit::geometry::NormKind::L1,
            Kind::Linf => semikit::geometry::NormKind::LInf,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenpairs of a square matrix.
    Eigen(EigenArgs),
    /// Distance between two vectors, sequences or functions.
    Metric {
        #[arg(long, value_enum)]
        kind: Kind,
        x: PathBuf,
        y: PathBuf,
    },
    /// Operator norm of a matrix.
    Opnorm {
        #[arg(long, value_enum)]
        kind: Kind,
        matrix: PathBuf,
    },
    /// Closure audit for a derived family.
    Audit(AuditArgs),
    /// Semi-algebra checks.
    Algebra {
        #[command(subcommand)]
        command: AlgebraCommand,
    },
    /// Multi-criteria decision making over sorted fuzzy vectors.
    Mcdm {
        #[command(subcommand)]
        command: McdmCommand,
    },
    /// Semi-vector space law audit for a carrier.
    Axioms(AxiomArgs),
    /// Every randomized audit at fixed sizes, for reproducibility checks.
    Suite,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("method").required(true).args(["exact_2x2", "perron"])))]
pub struct EigenArgs {
    #[arg(long)]
    pub matrix: PathBuf,
    /// Closed-form solver for diagonal or `[[a, b], [0, a]]` inputs.
    #[arg(long)]
    pub exact_2x2: bool,
    /// Power iteration for primitive matrices.
    #[arg(long)]
    pub perron: bool,
    #[arg(long, default_value_t = 100_000)]
    pub max_iter: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Semimetric,
    Seminorm,
    Semiinner,
    Sublinear,
    Preserver,
    Category,
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Family objects; random objects are drawn when absent.
    pub spec: Option<PathBuf>,
    /// Candidate function for `--family preserver`.
    #[arg(long = "fn")]
    pub function: Option<PathBuf>,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = 3)]
    pub dim: usize,
}

#[derive(Debug, Subcommand)]
pub enum AlgebraCommand {
    /// Verify a homomorphism recipe.
    CheckHom {
        spec: PathBuf,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Also require `h(I) = I`.
        #[arg(long)]
        unital: bool,
    },
    /// Left-regular embedding into matrices of order `n²`.
    Embed {
        /// An element to embed; optional.
        spec: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        order: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Decide whether a bracket structure is alternating.
    LieAudit {
        /// Structure constants; a random structure is drawn when absent.
        spec: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum McdmCommand {
    Rank {
        #[arg(long)]
        alts: PathBuf,
        #[arg(long)]
        weights: PathBuf,
        /// 1-based permutation, e.g. `2,1,3`; identity when absent.
        #[arg(long)]
        perm: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Space {
    Rn,
    Matrix,
    Poly,
    Ln,
}

#[derive(Debug, Args)]
pub struct AxiomArgs {
    #[arg(long, value_enum)]
    pub space: Space,
    #[arg(long, default_value_t = 3)]
    pub dim: usize,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
}

/// Parses `args` (program name first), runs the command, writes the report
/// and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli).and_then(|r| emit(&cli, &r).map(|()| r)) {
        Ok(report) => report.status.exit_code(),
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    commands::dispatch(cli)
}

fn emit(cli: &Cli, report: &Report) -> Result<(), CliError> {
    let text = match cli.format {
        Format::Json => report.to_json(),
        Format::Table => report.to_table(),
    };
    match &cli.out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
