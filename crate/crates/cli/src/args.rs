use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "padrep",
    version,
    about = "Padovan numbers that are concatenations of two repdigits"
)]
pub struct Cli {
    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// TOML file with default values for the flags; flags win.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exhaustive search for small indices.
    Search(SearchArgs),
    /// Run the full argument and emit a certificate.
    Prove(ProveArgs),
    /// Continued fraction of a constant.
    Cf(CfArgs),
    /// Evaluate the linear-form bounds directly.
    #[command(subcommand)]
    Bound(BoundCommand),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum)]
    pub format: Option<Format>,

    /// Write the result to this file instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Largest index searched.
    #[arg(long)]
    pub n_max: Option<u64>,

    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ProveArgs {
    /// `certified` carries computed constants; `paper` carries the
    /// published ones after checking them.
    #[arg(long)]
    pub mode: Option<String>,

    /// Working precision in decimal digits.
    #[arg(long)]
    pub precision: Option<u32>,

    /// Largest index searched exhaustively.
    #[arg(long)]
    pub n_max: Option<u64>,

    /// Convergent choice in the reduction: `tightest` or `first-positive`.
    #[arg(long)]
    pub selection: Option<String>,

    /// Format on standard output; `--output` always writes JSON plus a
    /// `.txt` summary.
    #[arg(long, value_enum)]
    pub format: Option<Format>,

    /// Path of the JSON certificate.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CfArgs {
    /// `tau` (log 10 / log alpha) or `rational:P/Q`.
    pub constant: String,

    /// 1-based ordinal of a convergent to print; repeatable.
    #[arg(long)]
    pub index: Vec<usize>,

    /// Number of partial quotients to list.
    #[arg(long)]
    pub terms: Option<usize>,

    /// Starting precision in decimal digits.
    #[arg(long)]
    pub precision: Option<u32>,

    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Subcommand)]
pub enum BoundCommand {
    /// `V` with `log |Lambda| > -V` for a Matveev-type lower bound.
    Matveev(MatveevArgs),
    /// `2^r·H·(log H)^r`, bounding `L` when `H > L/(log L)^r`.
    GuzmanLuca(GuzmanLucaArgs),
}

#[derive(Debug, Args)]
pub struct MatveevArgs {
    /// Number of logarithms.
    #[arg(long)]
    pub t: u32,

    /// Degree of the number field.
    #[arg(long)]
    pub degree: u32,

    /// Exponent bound: a number, or `n` to keep it symbolic.
    #[arg(long)]
    pub b: String,

    /// The values `A_1, ..., A_t`, comma separated.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub a: Vec<String>,

    #[arg(long)]
    pub precision: Option<u32>,

    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct GuzmanLucaArgs {
    #[arg(long)]
    pub r: u32,

    /// `H`, as a decimal such as `1.70e44`.
    #[arg(long)]
    pub h: String,

    #[arg(long)]
    pub precision: Option<u32>,

    #[arg(long, value_enum)]
    pub format: Option<Format>,
}
