use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "ginv", version, about = "Genus-h character-degree invariants of finite groups")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Directory for cached character degrees.
    #[arg(long, global = true, env = "GINV_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,

    /// Do not read or write the degree cache.
    #[arg(long, global = true)]
    pub no_cache: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Theorems,
    Remarks,
    Lemmas,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorems => "theorems",
            Suite::Remarks => "remarks",
            Suite::Lemmas => "lemmas",
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Irreducible character degrees.
    Degrees { spec: String },
    /// Conjugacy classes: size, element order, representative.
    Classes { spec: String },
    /// Abelian / nilpotent / supersolvable / solvable, p-closed, p-solvable.
    Classify { spec: String },
    /// Evaluate one invariant exactly.
    Invariant {
        /// Q, q, qtilde, d, dpprime or qhpprime.
        #[arg(long)]
        kind: String,
        #[arg(long, default_value_t = 1)]
        genus: u32,
        #[arg(long)]
        prime: Option<u64>,
        /// Brauer-degree file for qhpprime at genus > 1.
        #[arg(long)]
        brauer: Option<PathBuf>,
        spec: String,
    },
    /// Evaluate a closed cobordism word (or the genus-h surface).
    Tqft {
        #[arg(long, conflicts_with = "word", required_unless_present = "word")]
        genus: Option<u32>,
        /// Comma-separated pieces, e.g. cap,copants,pants,cup.
        #[arg(long)]
        word: Option<String>,
        /// Also check the idempotent relations over the Dixon prime.
        #[arg(long)]
        check: bool,
        spec: String,
    },
    /// Run a verification suite over the default catalog.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 4)]
        max_genus: u32,
        /// Comma-separated labels or specs restricting the catalog.
        #[arg(long)]
        groups: Option<String>,
        /// File with one group spec per line, replacing the catalog.
        #[arg(long)]
        groups_file: Option<PathBuf>,
        /// Report timestamp (defaults to now, UTC).
        #[arg(long, hide = true)]
        timestamp: Option<String>,
        /// THEOREM[:FACTOR] — scales one threshold (test hook).
        #[arg(long, hide = true)]
        perturb_threshold: Option<String>,
    },
    /// Tabulate q_h(G), q_h(N), q_h(G/N) for N the normal closure of an element.
    Explore {
        /// Element in cycle notation, e.g. "(1 2 3)".
        #[arg(long)]
        normal: String,
        spec: String,
    },
    /// Inspect or clear the degree cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum CacheAction {
    Stats,
    Clear,
}
