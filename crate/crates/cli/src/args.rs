use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Parser, Debug)]
#[command(name = "hyperc", version, about = "Eigenvector centralities for uniform hypergraphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    /// Build a hypergraph from n-grams or transactions and keep its largest component.
    Build(BuildArgs),
    /// Write the sunflower with m-node petals around a single core node.
    Sunflower(SunflowerArgs),
    /// Write the 7-node hypergraph with a positive but unstable Z-eigenvector.
    Fixture(GenerateArgs),
    /// Compute CEC, HEC and/or ZEC scores.
    Centrality(CentralityArgs),
    /// Correlate top-k rankings of two or more centrality CSVs.
    Compare(CompareArgs),
    /// Repeat a run from its run.json manifest.
    #[serde(skip)]
    Rerun {
        manifest: PathBuf,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    Ngrams,
    Transactions,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Every m-subset of a record becomes an edge.
    Subsets,
    /// Only records with exactly m distinct items become edges.
    Exact,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sep {
    Comma,
    Whitespace,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FreqColumn {
    Auto,
    None,
    First,
    Last,
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
pub struct BuildArgs {
    #[arg(long, value_enum)]
    pub from: Source,
    /// Hyperedge size.
    #[arg(long)]
    pub m: usize,
    #[arg(long, value_enum, default_value_t = Mode::Subsets)]
    pub mode: Mode,
    /// Item separator for transaction files.
    #[arg(long, value_enum, default_value_t = Sep::Whitespace)]
    pub sep: Sep,
    /// Position of the frequency field on n-gram lines.
    #[arg(long, value_enum, default_value_t = FreqColumn::Auto)]
    pub freq_column: FreqColumn,
    /// Sum frequencies into edge weights instead of a binary tensor.
    #[arg(long)]
    pub weighted: bool,
    #[arg(long)]
    pub lowercase: bool,
    /// Keep every component instead of only the largest.
    #[arg(long)]
    pub keep_all: bool,
    pub input: PathBuf,
    /// Output directory.
    #[arg(short, long)]
    pub output: PathBuf,
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
pub struct SunflowerArgs {
    pub m: usize,
    pub r: usize,
    /// Output file; standard output when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
pub struct GenerateArgs {
    /// Output file; standard output when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ZecSolver {
    /// Euler steps of dx/dt = Λ(T[x]) - x.
    Ds,
    /// Shifted symmetric higher-order power method.
    Sshopm,
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
pub struct CentralityArgs {
    /// Canonical edge-list file, or `-` for standard input.
    pub input: PathBuf,
    /// Comma-separated subset of cec, hec, zec.
    #[arg(long, value_delimiter = ',', default_value = "cec,hec,zec")]
    pub method: Vec<hyperc::Method>,
    /// Label file (`id<TAB>label`); node ids are used when omitted.
    #[arg(long)]
    pub labels: Option<PathBuf>,
    /// Restrict to the largest connected component first.
    #[arg(long)]
    pub lcc: bool,
    /// Convergence tolerance [default: 1e-10 for cec/hec, 1e-8 for zec].
    #[arg(long)]
    pub tol: Option<f64>,
    /// Iteration cap [default: 100000 cec, 10000 hec/zec].
    #[arg(long)]
    pub max_iters: Option<usize>,
    /// ZEC Euler step, in (0, 1].
    #[arg(long, default_value_t = 0.5)]
    pub step: f64,
    /// SS-HOPM shift.
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    #[arg(long, value_enum, default_value_t = ZecSolver::Ds)]
    pub zec_algorithm: ZecSolver,
    #[arg(long, default_value_t = 100)]
    pub restarts: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// ZEC vectors closer than this (2-norm) are the same eigenvector.
    #[arg(long, default_value_t = 1e-4)]
    pub cluster_tol: f64,
    /// Make parallel sums independent of the thread count.
    #[arg(long)]
    pub deterministic: bool,
    #[arg(long, env = "HYPERC_THREADS")]
    pub threads: Option<usize>,
    /// Output directory.
    #[arg(short, long, default_value = ".")]
    pub output: PathBuf,
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
pub struct CompareArgs {
    /// Centrality CSVs; the method name is taken from each file stem.
    #[arg(num_args = 2.., required = true)]
    pub inputs: Vec<PathBuf>,
    /// Comma-separated k values [default: 10,20,50,...,n clipped to n].
    #[arg(long, value_delimiter = ',')]
    pub k: Option<Vec<usize>>,
    /// Rows of the top-k table.
    #[arg(long, default_value_t = 10)]
    pub top: usize,
    /// Output directory.
    #[arg(short, long, default_value = ".")]
    pub output: PathBuf,
}
