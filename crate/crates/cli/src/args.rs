use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "magnus-forest",
    version,
    about = "Magnus expansion via planar trees, permutations and exact iterated integrals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Evaluate independent permutation integrals on worker threads
    /// (MAGNUS_FOREST_THREADS caps the worker count).
    #[arg(long, global = true)]
    pub parallel: bool,

    /// Lift the safety caps on degree.
    #[arg(long, global = true)]
    pub unsafe_degree: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List all trees of one kind and degree in canonical order.
    Trees {
        #[arg(long, value_enum)]
        kind: TreeKindArg,
        #[arg(long)]
        degree: usize,
    },
    /// Tabulate exact Magnus coefficients up to a degree.
    Coefficients {
        #[arg(long, value_enum, default_value_t = CoefficientKind::All)]
        kind: CoefficientKind,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        degree: u64,
    },
    /// Run a verification suite.
    Verify {
        /// axioms | theorem | psi | numeric | flows | all
        #[arg(value_name = "SUITE")]
        positional: Option<String>,
        #[arg(long, conflicts_with = "positional")]
        suite: Option<String>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        degree: u64,
        #[command(flatten)]
        point: PathPoint,
    },
    /// Compute the Magnus truncation of a matrix polynomial path.
    Magnus {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        degree: u64,
        #[command(flatten)]
        point: PathPoint,
    },
}

#[derive(Args, Debug)]
pub struct PathPoint {
    /// JSON file holding the path, or `default` for [[0, 1], [-1 - t, 0]].
    #[arg(long, default_value = "default")]
    pub path: String,
    /// Evaluation point, as `p` or `p/q`.
    #[arg(long, default_value = "1/4", allow_hyphen_values = true)]
    pub s: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TreeKindArg {
    Binary,
    Rooted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CoefficientKind {
    All,
    /// Leaf-count formula and its fixpoint-log variant on rooted trees.
    Rooted,
    /// Descent formula on binary trees.
    Binary,
    /// Descent formula on permutations.
    Perm,
}
