use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sae_radial::SaeParam64;

#[derive(Debug, Parser)]
#[command(name = "sae-radial", version, about = "Inverse-square potential with a self-adjoint extension parameter")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// P parameter, regime and the window for additional solutions.
    Classify {
        #[command(flatten)]
        potential: PotentialArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// The single bound level for tau < 0.
    BoundState {
        #[command(flatten)]
        potential: PotentialArgs,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_tau)]
        tau: SaeParam64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Bound-state radial wave function R(r) on a grid.
    Wavefunction {
        #[command(flatten)]
        potential: PotentialArgs,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_tau)]
        tau: SaeParam64,
        #[command(flatten)]
        grid: RadiusGrid,
        /// Prefactor A of the wave function.
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true, conflicts_with = "normalize")]
        amplitude: f64,
        /// Scale to unit norm, ∫|R|² r² dr = 1.
        #[arg(long)]
        normalize: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Phase shift and its standard / extension split at one momentum.
    PhaseShift {
        #[command(flatten)]
        potential: PotentialArgs,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_tau)]
        tau: SaeParam64,
        #[arg(long)]
        k: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Partial-wave S-matrix element at one momentum.
    SMatrix {
        #[command(flatten)]
        potential: PotentialArgs,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_tau)]
        tau: SaeParam64,
        #[arg(long)]
        k: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Energy of the S-matrix pole on the positive imaginary k axis.
    Pole {
        #[command(flatten)]
        potential: PotentialArgs,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_tau)]
        tau: SaeParam64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Phase-shift sweep over k (fixed tau) or over tau (fixed k).
    Scan {
        #[command(flatten)]
        potential: PotentialArgs,
        /// Fixed tau for a k sweep.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_tau)]
        tau: Option<SaeParam64>,
        /// Fixed k for a tau sweep.
        #[arg(long)]
        k: Option<f64>,
        #[arg(long, requires = "k_stop")]
        k_start: Option<f64>,
        #[arg(long, requires = "k_start")]
        k_stop: Option<f64>,
        #[arg(long, allow_hyphen_values = true, requires = "tau_stop", conflicts_with = "k_start")]
        tau_start: Option<f64>,
        #[arg(long, allow_hyphen_values = true, requires = "tau_start")]
        tau_stop: Option<f64>,
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, value_enum, default_value_t = Spacing::Linear)]
        spacing: Spacing,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run the numerical cross-checks and print a pass/fail table.
    Verify {
        #[arg(long, default_value = "all", value_parser = clap::builder::PossibleValuesParser::new(sae_radial::oracle::suite::Suite::NAMES))]
        suite: String,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct PotentialArgs {
    #[arg(long, default_value_t = 1.0)]
    pub mass: f64,
    /// Strength V0 of -V0/r² (positive is attractive).
    #[arg(long, allow_hyphen_values = true, required_unless_present = "two_m_v0", conflicts_with = "two_m_v0")]
    pub v0: Option<f64>,
    /// Dimensionless strength 2 m V0.
    #[arg(long, allow_hyphen_values = true)]
    pub two_m_v0: Option<f64>,
    /// Orbital angular momentum.
    #[arg(long, default_value_t = 0)]
    pub l: u32,
}

#[derive(Debug, Args)]
pub struct RadiusGrid {
    #[arg(long, default_value_t = 0.01)]
    pub r_start: f64,
    #[arg(long, default_value_t = 10.0)]
    pub r_stop: f64,
    #[arg(long, default_value_t = 200)]
    pub count: usize,
    #[arg(long, value_enum, default_value_t = Spacing::Log)]
    pub spacing: Spacing,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output format; defaults to csv for grids, table for verify, json otherwise.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Spacing {
    #[value(name = "lin", alias = "linear")]
    Linear,
    Log,
}

fn parse_tau(s: &str) -> Result<SaeParam64, String> {
    s.parse::<SaeParam64>().map_err(|e| e.to_string())
}
