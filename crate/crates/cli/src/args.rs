use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use sasaki_core::scalar::parse_rational;
use sasaki_core::Rational;

#[derive(Debug, Parser)]
#[command(
    name = "sasaki",
    version,
    about = "Extremal profiles and join-manifold invariants"
)]
pub struct Cli {
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProfileKind {
    /// Extremal profile `F = (1 - z^2) h(z) / (4 p q (3 - r^2))`.
    Extremal,
    /// Canonical orbifold profile `Theta_c`.
    Canonical,
}

/// Fiber parameter: an exact rational, or the CSC root of the labels.
#[derive(Debug, Clone, PartialEq)]
pub enum FiberArg {
    Exact(Rational),
    Csc,
}

fn parse_fiber(s: &str) -> Result<FiberArg, String> {
    if s == "csc" {
        return Ok(FiberArg::Csc);
    }
    parse_rational(s)
        .map(FiberArg::Exact)
        .ok_or_else(|| format!("expected an integer, \"num/den\" or \"csc\", got {s:?}"))
}

#[derive(Debug, Clone, clap::Args)]
pub struct ProfileArgs {
    /// Cone-angle label at z = -1.
    #[arg(long)]
    pub p: u64,
    /// Cone-angle label at z = 1, coprime to p.
    #[arg(long)]
    pub q: u64,
    /// Exact fiber parameter in (0, 1) as "num/den", or "csc".
    #[arg(long, value_parser = parse_fiber)]
    pub r: FiberArg,
    #[arg(long, value_enum, default_value_t = ProfileKind::Extremal)]
    pub profile: ProfileKind,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Certify positivity, boundary and extremality conditions of a profile.
    VerifyExtremal(ProfileArgs),
    /// Sasaki bouquet of the join with parameters (k1, k2).
    Bouquet {
        #[arg(long)]
        k1: u64,
        #[arg(long)]
        k2: u64,
    },
    /// Constant-scalar-curvature fiber parameters over all coprime labels.
    CscSearch {
        #[arg(long)]
        pmax: u64,
        #[arg(long)]
        qmax: u64,
    },
    /// Profile values and numeric scalar curvature on a uniform grid of [-7/8, 7/8].
    ProfileSample {
        #[command(flatten)]
        profile: ProfileArgs,
        #[arg(long)]
        points: usize,
    },
    /// Chern class, fundamental group, Kähler cone and deformation data.
    Topology {
        #[arg(long)]
        k1: u64,
        #[arg(long)]
        k2: u64,
        /// Degree of the split complex structure (even, nonnegative).
        #[arg(long)]
        n: Option<i64>,
        /// nonsplit, s0-product, s0-family or split-deg-N.
        #[arg(long)]
        structure: Option<String>,
    },
}
