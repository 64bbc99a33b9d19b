//! Command-line surface.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(
    name = "ldpc",
    about = "LDPC code construction, analysis and Monte Carlo link simulation",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Construct a code and write it as an alist or base-matrix file.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Structural analysis: dimensions, rank, girth, short cycles,
    /// root-check audit.
    Analyze(AnalyzeArgs),
    /// Encode messages (one 0/1 word per line).
    Encode(EncodeArgs),
    /// Decode LLR vectors (one whitespace-separated vector per line).
    Decode(DecodeArgs),
    /// Monte Carlo FER/BER simulation over an SNR grid.
    Simulate(SimulateArgs),
    /// Sweep a decoder parameter (alpha, beta or rho) with common random
    /// numbers.
    Sweep(SweepArgs),
    /// Monte Carlo outage probability curve.
    Outage(OutageArgs),
}

#[derive(Subcommand, Debug)]
pub enum ConstructKind {
    /// Bit-level progressive edge growth.
    Peg {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        /// Uniform variable-node degree.
        #[arg(long, default_value_t = 3)]
        col_degree: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Output file (.alist).
        #[arg(long)]
        out: PathBuf,
    },
    /// Quasi-cyclic PEG: greedy circulant placement on the lifted graph.
    QcPeg {
        #[arg(long)]
        block_rows: usize,
        #[arg(long)]
        block_cols: usize,
        /// Circulant size.
        #[arg(long)]
        lift: usize,
        /// Uniform block-column degree.
        #[arg(long, default_value_t = 4)]
        col_degree: usize,
        /// Per-block-column degrees, comma separated (overrides
        /// --col-degree).
        #[arg(long, value_delimiter = ',')]
        degrees: Option<Vec<usize>>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Output file (.bm).
        #[arg(long)]
        out: PathBuf,
    },
    /// IRA code: dual-diagonal parity part plus PEG systematic part.
    Ira {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long, default_value_t = 3)]
        col_degree: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Output file (.alist); a .meta.json sidecar records the layout.
        #[arg(long)]
        out: PathBuf,
    },
    /// QC-IRA root-check code for block fading (rate 1/2, F = 2).
    RootCheck {
        #[arg(long)]
        block_cols: usize,
        /// Circulant size.
        #[arg(long)]
        lift: usize,
        #[arg(long, default_value_t = 2)]
        fadings: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Output file (.bm); a .meta.json sidecar records layout and
        /// root-check structure.
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    /// Code file (.alist or base-matrix text).
    #[arg(long)]
    pub code: PathBuf,
    /// Cycle counting window (4, 6 or 8).
    #[arg(long, default_value_t = 6)]
    pub max_cycle_len: usize,
}

#[derive(Args, Debug)]
pub struct EncodeArgs {
    #[arg(long)]
    pub code: PathBuf,
    /// Input file of 0/1 message lines (default: stdin).
    #[arg(long)]
    pub r#in: Option<PathBuf>,
    /// Output file of codeword lines (default: stdout).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct DecodeArgs {
    #[arg(long)]
    pub code: PathBuf,
    #[command(flatten)]
    pub decoder: DecoderArgs,
    /// Input file of LLR lines (default: stdin).
    #[arg(long)]
    pub r#in: Option<PathBuf>,
    /// Output file of decoded codeword lines (default: stdout).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Emit only the information bits.
    #[arg(long)]
    pub info_only: bool,
}

#[derive(Args, Debug, Clone)]
pub struct DecoderArgs {
    #[arg(long, value_enum, default_value_t = DecoderName::Spa)]
    pub decoder: DecoderName,
    #[arg(long, value_enum, default_value_t = ScheduleName::Flooding)]
    pub schedule: ScheduleName,
    /// Normalization constant for normalized-min-sum.
    #[arg(long, default_value_t = 1.25)]
    pub alpha: f64,
    /// Offset constant for offset-min-sum.
    #[arg(long, default_value_t = 0.15)]
    pub beta: f64,
    /// Reweighting factor for URW (constant) or VFAP (in-cycle value).
    #[arg(long, default_value_t = 0.8)]
    pub rho: f64,
    #[arg(long, default_value_t = 20)]
    pub max_iters: usize,
    /// Run all iterations even after the syndrome is satisfied.
    #[arg(long)]
    pub no_early_stop: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecoderName {
    Spa,
    MinSum,
    NormalizedMinSum,
    OffsetMinSum,
    Urw,
    Vfap,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScheduleName {
    Flooding,
    Layered,
    Residual,
    NodeWise,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChannelName {
    Awgn,
    BlockFading,
}

#[derive(Args, Debug)]
pub struct SimulateArgs {
    /// Code file(s); repeat the flag to compare codes in one run.
    #[arg(long, required = true)]
    pub code: Vec<PathBuf>,
    /// Keep only codes whose rate matches one of these (e.g. "1/2,3/4").
    #[arg(long, value_delimiter = ',')]
    pub rates: Option<Vec<String>>,
    #[arg(long, value_enum, default_value_t = ChannelName::Awgn)]
    pub channel: ChannelName,
    /// Fading blocks per codeword (block-fading channel).
    #[arg(long, default_value_t = 2)]
    pub fadings: usize,
    /// Uniform per-frame interleaver between codeword and channel.
    #[arg(long)]
    pub interleave: bool,
    #[arg(long)]
    pub snr_from: f64,
    #[arg(long)]
    pub snr_to: f64,
    #[arg(long, default_value_t = 1.0)]
    pub snr_step: f64,
    #[command(flatten)]
    pub decoder: DecoderArgs,
    /// Frame budget per SNR point.
    #[arg(long, default_value_t = 10_000)]
    pub frames: u64,
    /// Early-stop after this many frame errors (0 disables).
    #[arg(long, default_value_t = 100)]
    pub min_errors: u64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Worker threads (0 = all cores; default from LDPC_WORKERS).
    #[arg(long)]
    pub workers: Option<usize>,
    /// Transmit the all-zero message instead of random messages.
    #[arg(long)]
    pub all_zero: bool,
    /// Output stem; writes <stem>.csv and <stem>.json.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[arg(long)]
    pub code: PathBuf,
    /// Which parameter to sweep.
    #[arg(long, value_enum)]
    pub param: SweepParamName,
    /// Grid values, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub grid: Vec<f64>,
    /// Eb/N0 point in dB.
    #[arg(long)]
    pub snr: f64,
    #[arg(long, value_enum, default_value_t = ChannelName::Awgn)]
    pub channel: ChannelName,
    #[arg(long, default_value_t = 2)]
    pub fadings: usize,
    #[command(flatten)]
    pub decoder: DecoderArgs,
    #[arg(long, default_value_t = 10_000)]
    pub frames: u64,
    #[arg(long, default_value_t = 0)]
    pub min_errors: u64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long)]
    pub workers: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepParamName {
    Alpha,
    Beta,
    Rho,
}

#[derive(Args, Debug)]
pub struct OutageArgs {
    /// Code rate R.
    #[arg(long)]
    pub rate: f64,
    #[arg(long, default_value_t = 2)]
    pub fadings: usize,
    #[arg(long)]
    pub snr_from: f64,
    #[arg(long)]
    pub snr_to: f64,
    #[arg(long, default_value_t = 1.0)]
    pub snr_step: f64,
    #[arg(long, default_value_t = 100_000)]
    pub samples: u64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Use BPSK-constrained mutual information instead of Gaussian-input
    /// capacity.
    #[arg(long)]
    pub bpsk: bool,
    /// Output CSV file (default: stdout).
    #[arg(long)]
    pub out: Option<PathBuf>,
}
