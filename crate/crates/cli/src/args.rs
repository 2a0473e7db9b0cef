use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "gpdim", version, about = "Metric dimension of generalized Petersen graphs P(n,m)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Include wall-clock timings (makes output run-dependent).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Jsonl,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the metric dimension by exhaustive search.
    Dim(DimArgs),
    /// Check a family of claims against BFS ground truth.
    Verify {
        #[arg(value_enum)]
        kind: VerifyKind,
        #[command(flatten)]
        select: Selection,
    },
    /// Re-render a saved JSON-lines report.
    Report { path: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum VerifyKind {
    Distances,
    Tables,
    Lower,
    Upper,
    GoodLists,
    WitnessPairs,
}

impl VerifyKind {
    pub fn name(self) -> &'static str {
        match self {
            VerifyKind::Distances => "distances",
            VerifyKind::Tables => "tables",
            VerifyKind::Lower => "lower",
            VerifyKind::Upper => "upper",
            VerifyKind::GoodLists => "good-lists",
            VerifyKind::WitnessPairs => "witness-pairs",
        }
    }

    /// `--range` and `--k` select `k` rather than `n`.
    pub fn indexed_by_k(self) -> bool {
        matches!(self, VerifyKind::Upper | VerifyKind::WitnessPairs)
    }
}

#[derive(Debug, Args)]
pub struct DimArgs {
    #[arg(long, conflicts_with = "range")]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 3)]
    pub m: usize,
    /// Inclusive n range `lo:hi`.
    #[arg(long)]
    pub range: Option<String>,
    /// Residue filter for `--range`, e.g. `2,3,4,5`.
    #[arg(long)]
    pub mod6: Option<String>,
    #[arg(long, default_value_t = gpdim_core::resolving::DEFAULT_MAX_SIZE)]
    pub max_size: usize,
    #[arg(long)]
    pub no_symmetry: bool,
    /// Accepted for uniformity; the search is valid for every legal P(n,m).
    #[arg(long)]
    pub unchecked: bool,
}

#[derive(Debug, Args)]
pub struct Selection {
    #[arg(long, conflicts_with_all = ["k", "range"])]
    pub n: Option<usize>,
    #[arg(long, conflicts_with = "range")]
    pub k: Option<usize>,
    /// Inclusive `lo:hi`; over n, or over k for `upper` and `witness-pairs`.
    #[arg(long)]
    pub range: Option<String>,
    #[arg(long)]
    pub mod6: Option<String>,
    /// Allow instances outside the validated domain (k < 6, residues 0 and 1).
    #[arg(long)]
    pub unchecked: bool,
    #[arg(long)]
    pub no_symmetry: bool,
}
