use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "ppmat", version, about = "Plane partitions, descent matrices and their generating functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for `verify` (default: all cores).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Lift the parameter caps (boxes ≤ 5×5×5, N ≤ 12, words ≤ 10 letters).
    #[arg(long, global = true)]
    pub unsafe_no_caps: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply Φ, Φ⁻¹ or the word-to-strict-tableau map.
    Map(MapArgs),
    /// Statistics of a plane partition.
    Stats(StatsArgs),
    /// Count, list or take generating functions over a finite family.
    Enumerate(EnumerateArgs),
    /// Plane partitions by descent content D_α(k,n,m).
    Dalpha(DalphaArgs),
    /// Increasing-subsequence profile and strict tableau of a word.
    Greene(GreeneArgs),
    /// Run identity checks.
    Verify(VerifyArgs),
}

/// One input source: inline JSON, a file, or stdin when neither is given.
#[derive(Debug, Args)]
pub struct InputArgs {
    /// Inline JSON input.
    #[arg(long, conflicts_with = "file")]
    pub input: Option<String>,
    /// Read JSON input from a file.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    /// Plane partition to descent matrix.
    Phi,
    /// Descent matrix to plane partition.
    Inv,
    /// Word to strict tableau.
    Word,
}

#[derive(Debug, Args)]
pub struct MapArgs {
    pub direction: Direction,
    #[command(flatten)]
    pub source: InputArgs,
    /// Rows of the matrix (phi; default: rows of the plane partition).
    #[arg(long)]
    pub n: Option<usize>,
    /// Columns of the matrix, or the alphabet size for `word`.
    #[arg(long)]
    pub m: Option<u32>,
    /// The word, as digits (`132434`) or comma separated.
    #[arg(long)]
    pub w: Option<String>,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    #[command(flatten)]
    pub source: InputArgs,
    /// Length of the column-count vector (default: largest entry).
    #[arg(long)]
    pub m: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// PP(k,n,m).
    Box,
    /// PP′(k,n,m): base exactly the k × n rectangle.
    Exact,
    /// Plane partitions of a given shape, entries ≤ m.
    Shape,
    /// Column-strict fillings of a shape, entries ≤ m.
    #[value(name = "column-strict", alias = "cs")]
    ColumnStrict,
    /// Strict tableaux ST(λ,n).
    St,
    /// Words of length n over [m].
    Words,
    /// Partitions with parts ≤ k and at most n parts.
    Partitions,
    /// n × m matrices with entry sum ≤ N.
    Matrices,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    pub family: Family,
    /// Positional sizes: `k n m` (box, exact), `n m` (words), `k n`
    /// (partitions), `n m N` (matrices).
    pub sizes: Vec<u64>,
    #[arg(long)]
    pub k: Option<u64>,
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long = "N")]
    pub big_n: Option<u64>,
    #[arg(long)]
    pub shape: Option<String>,
    /// Statistics for the generating function: volume, trace, des, uh, corner
    /// (comma separated, one per variable).
    #[arg(long)]
    pub stat: Option<String>,
    /// Variable names of the generating function, e.g. `q` or `t,q`.
    #[arg(long)]
    pub gf: Option<String>,
    /// Print every element instead of the count.
    #[arg(long, conflicts_with_all = ["stat", "gf"])]
    pub list: bool,
}

#[derive(Debug, Args)]
pub struct DalphaArgs {
    /// Row length bound; omit for k = ∞.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: u32,
    /// A single composition α of length m, e.g. `2,0,1`.
    #[arg(long, conflicts_with = "big_n")]
    pub alpha: Option<String>,
    /// Tabulate every α with |α| ≤ N.
    #[arg(long = "N")]
    pub big_n: Option<u32>,
}

#[derive(Debug, Args)]
pub struct GreeneArgs {
    #[arg(long)]
    pub w: String,
    /// Alphabet size (default: largest letter).
    #[arg(long)]
    pub m: Option<u32>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Check name, or `all` for a whole grid.
    #[arg(required_unless_present = "list")]
    pub name: Option<String>,
    /// List the available checks and their parameters.
    #[arg(long)]
    pub list: bool,
    #[arg(long, default_value = "small")]
    pub level: String,
    #[arg(long)]
    pub k: Option<String>,
    #[arg(long)]
    pub n: Option<String>,
    #[arg(long)]
    pub m: Option<String>,
    #[arg(long = "N")]
    pub big_n: Option<String>,
    #[arg(long)]
    pub shape: Option<String>,
    /// Any other check parameter, as `key=value` (repeatable).
    #[arg(long = "param", value_name = "KEY=VALUE")]
    pub params: Vec<String>,
    /// Include per-check wall time in the output.
    #[arg(long)]
    pub timings: bool,
}
