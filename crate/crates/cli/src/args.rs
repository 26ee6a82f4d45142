use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "hyperwave", version, about = "Pseudospherical functions on the one-sheet hyperboloid")]
pub struct Cli {
    /// Cap on the number of 2F1 series terms.
    #[arg(long, global = true, env = "HYPERWAVE_MAX_TERMS")]
    pub max_terms: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one function on a point list or grid.
    Eval(EvalArgs),
    /// Evaluate a range of functions of one family and write them to a file.
    Table(TableArgs),
    /// Run the relation catalog.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Series {
    Dplus,
    Dminus,
    Principal,
    Supplementary,
    Newclass,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ParityArg {
    Even,
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    All,
    Discrete,
    Continuous,
    Newclass,
    Numerics,
}

/// Flags selecting one function. k and m accept rationals such as `1/2`.
#[derive(Debug, Clone, Args)]
pub struct SeriesArgs {
    #[arg(long, value_enum)]
    pub series: Series,
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<String>,
    #[arg(long, allow_hyphen_values = true, conflicts_with = "m_half")]
    pub m: Option<String>,
    /// Weight given as 2m, so `--m-half 1` is m = 1/2.
    #[arg(long, allow_hyphen_values = true)]
    pub m_half: Option<i64>,
    #[arg(long)]
    pub lambda: Option<f64>,
    #[arg(long)]
    pub gamma: Option<f64>,
    /// Principal-series ladder sequence, 1 or 2.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub seq: Option<u8>,
    /// Even or odd family (principal without --seq, or supplementary).
    #[arg(long, value_enum)]
    pub parity: Option<ParityArg>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<f64>,
    #[arg(long, value_enum)]
    pub sign: Option<SignArg>,
}

#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    /// Comma-separated τ values.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "tau_range")]
    pub tau: Vec<f64>,
    /// START:END:COUNT, endpoints included.
    #[arg(long, allow_hyphen_values = true)]
    pub tau_range: Option<String>,
    /// Comma-separated φ values; defaults to 0.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "phi_range")]
    pub phi: Vec<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub phi_range: Option<String>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub spec: SeriesArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Write to a file instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    /// Add the program version to the output metadata.
    #[arg(long)]
    pub with_version: bool,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub spec: SeriesArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    /// START:END over m in unit steps, replacing --m.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "k_range")]
    pub m_range: Option<String>,
    /// START:END over k in unit steps, replacing --k.
    #[arg(long, allow_hyphen_values = true)]
    pub k_range: Option<String>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Output file, or a directory with --split.
    #[arg(long, short)]
    pub output: PathBuf,
    /// One file per function instead of one long-format file.
    #[arg(long)]
    pub split: bool,
    #[arg(long)]
    pub with_version: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: SuiteArg,
    #[arg(long, value_enum, default_value = "text")]
    pub format: ReportFormat,
    /// Also write the JSON report to this file.
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Seed for the random sample points.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub tol_eigen: Option<f64>,
    #[arg(long)]
    pub tol_k3: Option<f64>,
    #[arg(long)]
    pub tol_ladder: Option<f64>,
    #[arg(long)]
    pub tol_annihilate: Option<f64>,
    #[arg(long)]
    pub tol_recurrence: Option<f64>,
    #[arg(long)]
    pub tol_route: Option<f64>,
    #[arg(long)]
    pub tol_route_fd: Option<f64>,
    #[arg(long)]
    pub tol_closed_form: Option<f64>,
    #[arg(long)]
    pub tol_identity: Option<f64>,
    #[arg(long)]
    pub tol_ode: Option<f64>,
    #[arg(long)]
    pub tol_joining: Option<f64>,
    #[arg(long)]
    pub tol_divergence: Option<f64>,
    #[arg(long)]
    pub tol_orthonormality: Option<f64>,
    #[arg(long)]
    pub tol_norm: Option<f64>,
    #[arg(long)]
    pub tol_asymptotic_principal: Option<f64>,
    #[arg(long)]
    pub tol_asymptotic_supplementary: Option<f64>,
    #[arg(long)]
    pub tol_hyp2f1: Option<f64>,
}
