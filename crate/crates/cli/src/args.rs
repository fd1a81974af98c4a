use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

/// Environment variable overriding the enumeration cap.
pub const CAP_ENV: &str = "ISOSPEC_MAX_ENUMERATION";

#[derive(Debug, Clone, Parser, Serialize)]
#[command(name = "isospec", version, about = "Isospectral-family certificates and counting bounds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Common {
    /// Write the report here (atomically) instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Largest exhaustive enumeration (group orders, closures, map lists).
    #[arg(long, env = CAP_ENV, global = true)]
    pub max_enumeration: Option<u64>,

    /// Largest ambient order for the full subgroup enumeration.
    #[arg(long, global = true)]
    pub max_subgroup_oracle: Option<u64>,

    /// Largest Schreier graph handed to the characteristic polynomial.
    #[arg(long, global = true)]
    pub max_charpoly_vertices: Option<usize>,

    /// Largest pairs × group order for the pairwise conjugator searches.
    #[arg(long, global = true)]
    pub max_pair_work: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(tag = "name", rename_all = "lowercase")]
pub enum Command {
    /// Certify the almost-conjugate nonconjugate family of H(F_q) or a product.
    Verify(VerifyArgs),
    /// Conductors l with an inert candidate prime, with field invariants.
    Fields(FieldsArgs),
    /// Conductors -> degrees -> bounds -> growth exponent.
    Pipeline(PipelineArgs),
    /// Bound reports over a degree range.
    Bounds(BoundsArgs),
    /// Heisenberg embedding certificate in SL3 (A2) or Sp4 (B2).
    Embed(EmbedArgs),
    /// Order of a split Chevalley group, optionally the index bound.
    Order(OrderArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SpectraMode {
    /// Compute when the Schreier graphs have at most 256 vertices.
    Auto,
    On,
    Off,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct VerifyArgs {
    /// Field order, or a comma list for a direct product (e.g. 4,9).
    #[arg(long, value_delimiter = ',', required = true)]
    pub q: Vec<u64>,

    /// Enumerate every subgroup of the family's order and recompute verdicts.
    #[arg(long)]
    pub exhaustive_oracle: bool,

    #[arg(long, value_enum, default_value_t = SpectraMode::Auto)]
    pub spectra: SpectraMode,

    /// Append the product of the centers (same order, not almost conjugate).
    #[arg(long)]
    pub negative_control: bool,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct FieldsArgs {
    #[arg(long, value_delimiter = ',', default_value = "5,7,11")]
    pub candidates: Vec<u64>,

    #[arg(long, default_value_t = 1000)]
    pub limit: u64,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct BoundArgs {
    /// Group type such as A2, B3, G2.
    #[arg(long = "type", default_value = "A2")]
    pub lie_type: String,

    /// Inert prime p' (5, 7 or 11).
    #[arg(long, default_value_t = 5)]
    pub pprime: u64,

    #[arg(long, default_value_t = 13)]
    pub p0: u64,

    #[arg(long, default_value_t = 1.0)]
    pub c0: f64,

    #[arg(long, default_value_t = 1.0)]
    pub c0_prime: f64,

    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub s: i64,

    /// Exponent constant C of the conjugacy-class cap.
    #[arg(long, default_value_t = 1.0)]
    pub cap_exponent: f64,

    #[arg(long, default_value_t = 0.05)]
    pub eps: f64,

    #[arg(long)]
    pub torsion_free: bool,

    #[arg(long, default_value_t = 2.0)]
    pub c_tf: f64,

    /// Use d^2 log c3 as the subgroup count.
    #[arg(long)]
    pub paper_literal_count: bool,

    /// Degree range lo:hi (inclusive).
    #[arg(long, default_value = "150:400")]
    pub drange: String,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct PipelineArgs {
    #[command(flatten)]
    pub bound: BoundArgs,

    /// Use the conductor's field degree without the quadratic doubling.
    #[arg(long)]
    pub no_doubling: bool,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub bound: BoundArgs,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct EmbedArgs {
    /// A2 (SL3) or B2 (Sp4).
    #[arg(long = "type", default_value = "A2")]
    pub lie_type: String,

    #[arg(long)]
    pub q: u64,

    /// Omit the (x,y,z) -> matrix table from the certificate.
    #[arg(long)]
    pub no_map_table: bool,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct OrderArgs {
    #[arg(long = "type")]
    pub lie_type: String,

    #[arg(long)]
    pub q: u64,

    /// With a prime q: also the index bound for these inertia degrees.
    #[arg(long, value_delimiter = ',')]
    pub inertia_degrees: Option<Vec<u32>>,
}
