use std::path::PathBuf;

use asmval_core::analytic::DEFAULT_FOURIER_TERMS;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "asmval",
    version,
    about = "p-adic valuations of the alternating sign matrix numbers T(N)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Valuations from the digit-sum and Legendre oracles, side by side
    Exact(RunArgs),
    /// Fourier coefficients of the fluctuation functions
    Coeffs(RunArgs),
    /// Exact valuations against the truncated analytic expansion
    Compare(RunArgs),
    /// Data for v_p(T(N))/N against the main term plus fluctuation
    Figure(RunArgs),
    /// Run the invariant suites and report pass/fail
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    #[arg(long, default_value_t = 2)]
    pub prime: u64,

    #[arg(long, default_value_t = 1)]
    pub n_min: u64,

    #[arg(long, default_value_t = 100)]
    pub n_max: u64,

    #[arg(long, default_value_t = DEFAULT_FOURIER_TERMS)]
    pub fourier_terms: usize,

    /// Output format; `verify` defaults to json, everything else to csv
    #[arg(long, value_enum)]
    pub format: Option<Format>,

    /// Output file; stdout when absent
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub run: RunArgs,

    /// Scale c_k by (1 + 1e-6) before the suites run
    #[arg(long, hide = true)]
    pub perturb_coefficient: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}
