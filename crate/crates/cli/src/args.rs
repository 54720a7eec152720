use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "chw", version, about = "Cascading Haar Wavelet Walsh-Hadamard transforms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Transform a signal file.
    Transform(TransformArgs),
    /// Check the cascade against the dense oracle on random signals.
    Verify(VerifyArgs),
    /// Simulate the node-per-scale parallel schedule.
    Simulate(SimulateArgs),
    /// Time the serial and parallel transforms; CSV on stdout.
    Bench(BenchArgs),
    /// Write a random signal of length 2^m.
    Generate(GenerateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FileFormat {
    Text,
    Binary,
}

impl From<FileFormat> for chw_core::SignalFormat {
    fn from(f: FileFormat) -> Self {
        match f {
            FileFormat::Text => chw_core::SignalFormat::Text,
            FileFormat::Binary => chw_core::SignalFormat::Binary,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Chw,
    Fwht,
    Haar,
    HaarWalsh,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Orthonormal,
    Unnormalized,
}

impl From<Mode> for chw_core::ScalingMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Orthonormal => chw_core::ScalingMode::Orthonormal,
            Mode::Unnormalized => chw_core::ScalingMode::Unnormalized,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Order {
    Natural,
    Dyadic,
    Sequency,
}

impl From<Order> for chw_core::Ordering {
    fn from(o: Order) -> Self {
        match o {
            Order::Natural => chw_core::Ordering::Natural,
            Order::Dyadic => chw_core::Ordering::Dyadic,
            Order::Sequency => chw_core::Ordering::Sequency,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Cost {
    LemmaOps,
    UnitPerTask,
    LinearInSize,
}

impl From<Cost> for chw_core::CostModel {
    fn from(c: Cost) -> Self {
        match c {
            Cost::LemmaOps => chw_core::CostModel::LemmaOps,
            Cost::UnitPerTask => chw_core::CostModel::UnitPerTask,
            Cost::LinearInSize => chw_core::CostModel::LinearInSize,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Policy {
    ExtraNode,
    ReuseLargestNode,
}

impl From<Policy> for chw_core::InitialNodePolicy {
    fn from(p: Policy) -> Self {
        match p {
            Policy::ExtraNode => chw_core::InitialNodePolicy::ExtraNode,
            Policy::ReuseLargestNode => chw_core::InitialNodePolicy::ReuseLargestNode,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScheduleFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SampleKind {
    Int,
    Real,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    #[arg(short, long)]
    pub input: PathBuf,
    /// Output file; text on stdout when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    pub input_format: FileFormat,
    #[arg(long, value_enum, default_value = "text")]
    pub output_format: FileFormat,
    #[arg(long, value_enum, default_value = "chw")]
    pub algo: Algo,
    #[arg(long, value_enum, default_value = "unnormalized")]
    pub mode: Mode,
    /// Coefficient order. Defaults to natural for `fwht`, dyadic otherwise;
    /// not valid with `haar`.
    #[arg(long, value_enum)]
    pub order: Option<Order>,
    /// Run the cascade on a pool of this many workers (`chw` only).
    #[arg(long)]
    pub workers: Option<usize>,
    /// Print `additions=<A> multiplications=<M>` to stderr.
    #[arg(long)]
    pub count_ops: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(short)]
    pub m: u32,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "unnormalized")]
    pub mode: Mode,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(short)]
    pub m: u32,
    #[arg(long, value_enum, default_value = "lemma-ops")]
    pub cost: Cost,
    #[arg(long, value_enum, default_value = "extra-node")]
    pub policy: Policy,
    /// Let stage tasks start as soon as their Haar band is final.
    #[arg(long)]
    pub pipelined: bool,
    #[arg(long, value_enum, default_value = "json")]
    pub format: ScheduleFormat,
    /// Schedule file; stdout when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 10)]
    pub min_m: u32,
    #[arg(long, default_value_t = 20)]
    pub max_m: u32,
    #[arg(long, default_value_t = 5)]
    pub reps: u32,
    #[arg(long, value_delimiter = ',', default_value = "1,2,4")]
    pub workers: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(short)]
    pub m: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "int")]
    pub kind: SampleKind,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: FileFormat,
}
