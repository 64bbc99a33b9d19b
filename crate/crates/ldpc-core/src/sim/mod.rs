//! Monte Carlo link simulation.
//!
//! Frames are independent work items: frame `f` of a run draws its message,
//! noise and fading from dedicated ChaCha8 streams keyed by
//! `(master seed, f, stream)`, so a `SimResult` is a pure function of the
//! configuration and master seed: worker count and platform never change
//! it. Early stopping is evaluated at fixed chunk boundaries for the same
//! reason. A frame counts as an error iff the decoded information bits
//! differ from the transmitted ones, so miscorrection to another valid
//! codeword still counts.

mod code;
mod output;
mod rng;

pub use code::{CodeEncoder, CodeMeta, LoadedCode};
pub use output::{write_csv, write_json};
pub use rng::{frame_stream, streams, RNG_ALGORITHM};

use crate::channel::{bpsk_modulate, compute_llr, sigma_from_ebn0_db, transmit, ChannelModel};
use crate::decode::{Decoder, DecoderConfig, Variant};
use crate::error::{Error, Result};
use rand::seq::SliceRandom;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Frames dispatched between early-stop checks. Fixed so that the set of
/// simulated frames does not depend on the worker count.
const CHUNK: u64 = 256;

/// Channel selection for a sweep (noise level comes from the SNR grid).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ChannelKind {
    /// AWGN only.
    Awgn,
    /// Rayleigh block fading with F blocks per codeword.
    BlockFading {
        /// Number of fading blocks.
        fadings: usize,
    },
}

impl ChannelKind {
    fn model(&self, sigma: f64) -> ChannelModel {
        match *self {
            ChannelKind::Awgn => ChannelModel::Awgn { sigma },
            ChannelKind::BlockFading { fadings } => ChannelModel::BlockFading { sigma, fadings },
        }
    }
}

/// Full simulation configuration.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SimConfig {
    /// Eb/N0 grid in dB.
    pub snr_db: Vec<f64>,
    pub channel: ChannelKind,
    /// Apply a per-frame uniform interleaver between codeword and channel
    /// (useful for baseline codes whose layout was not designed for the
    /// contiguous fading mapping).
    pub interleave: bool,
    pub decoder: DecoderConfig,
    /// Frame budget per SNR point.
    pub max_frames: u64,
    /// Stop a point early once this many frame errors accumulated
    /// (0 disables early stopping).
    pub min_frame_errors: u64,
    /// Master seed; together with the config this fully determines the
    /// result.
    pub seed: u64,
    /// Worker threads (0 = all available). Never affects the numbers.
    pub workers: usize,
    /// Send the all-zero message instead of random messages.
    pub all_zero_messages: bool,
}

impl SimConfig {
    /// A reasonable starting configuration for one code.
    pub fn new(snr_db: Vec<f64>, channel: ChannelKind, decoder: DecoderConfig) -> Self {
        Self {
            snr_db,
            channel,
            interleave: false,
            decoder,
            max_frames: 10_000,
            min_frame_errors: 100,
            seed: 1,
            workers: 0,
            all_zero_messages: false,
        }
    }

    fn validate(&self, code: &LoadedCode) -> Result<()> {
        if self.snr_db.is_empty() {
            return Err(Error::Config("SNR grid must be non-empty".into()));
        }
        if self.max_frames == 0 {
            return Err(Error::Config("frame budget must be >= 1".into()));
        }
        self.decoder.validate(code.h.rows())?;
        let f = match self.channel {
            ChannelKind::Awgn => 1,
            ChannelKind::BlockFading { fadings } => fadings,
        };
        if f == 0 || !code.n().is_multiple_of(f) {
            return Err(Error::Config(format!(
                "block length {} not divisible into {} fading blocks",
                code.n(),
                f
            )));
        }
        Ok(())
    }
}

/// Accumulated statistics for one SNR point.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct PointResult {
    pub ebn0_db: f64,
    /// Noise standard deviation used at this point.
    pub sigma: f64,
    pub frames: u64,
    pub frame_errors: u64,
    /// Information-bit errors summed over all frames.
    pub bit_errors: u64,
    pub fer: f64,
    pub ber: f64,
    /// 95% Wilson interval for the FER.
    pub fer_wilson_low: f64,
    pub fer_wilson_high: f64,
    pub mean_iterations: f64,
    pub p50_iterations: u32,
    pub p95_iterations: u32,
    /// Frames whose final hard decisions satisfied the syndrome.
    pub converged_frames: u64,
}

/// Result of a simulation run over the whole SNR grid.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SimResult {
    pub code_name: String,
    /// Hex fingerprint of the parity-check matrix.
    pub code_fingerprint: String,
    pub code_n: usize,
    pub code_k: usize,
    pub rate: f64,
    /// Pinned RNG description.
    pub rng: String,
    pub seed: u64,
    /// FNV-1a hash of the serialized configuration.
    pub config_hash: String,
    /// Full configuration echo.
    pub config: SimConfig,
    pub points: Vec<PointResult>,
    /// Wall-clock seconds (not part of the deterministic surface).
    pub wall_time_secs: f64,
}

/// Outcome of one simulated frame.
#[derive(Debug, Clone, Copy)]
struct FrameOutcome {
    error: bool,
    bit_errors: u32,
    iterations: u32,
    converged: bool,
}

/// Simulates a single frame end to end. Pure given the seed triple.
fn simulate_frame(
    code: &LoadedCode,
    decoder: &mut Decoder,
    model: &ChannelModel,
    interleave: bool,
    all_zero: bool,
    master_seed: u64,
    frame: u64,
) -> FrameOutcome {
    use rand::Rng;

    let k = code.k();
    let message: Vec<bool> = if all_zero {
        vec![false; k]
    } else {
        let mut rng = frame_stream(master_seed, frame, streams::MESSAGE);
        (0..k).map(|_| rng.random()).collect()
    };
    let codeword = code
        .encoder
        .encode(&message)
        .expect("message length matches k");
    let symbols = bpsk_modulate(&codeword);

    let mut ch_rng = frame_stream(master_seed, frame, streams::CHANNEL);
    let llr = if interleave {
        let n = symbols.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut il_rng = frame_stream(master_seed, frame, streams::INTERLEAVER);
        perm.shuffle(&mut il_rng);
        let mut sent = vec![0.0; n];
        for (j, &p) in perm.iter().enumerate() {
            sent[p] = symbols[j];
        }
        let (y, fr) = transmit(&sent, model, &mut ch_rng).expect("validated channel");
        let llr_sent = compute_llr(&y, model, &fr).expect("validated channel");
        perm.iter().map(|&p| llr_sent[p]).collect::<Vec<f64>>()
    } else {
        let (y, fr) = transmit(&symbols, model, &mut ch_rng).expect("validated channel");
        compute_llr(&y, model, &fr).expect("validated channel")
    };

    let out = decoder.decode(&llr).expect("LLR length matches n");
    let mut bit_errors = 0u32;
    for (t, &pos) in code.info_positions().iter().enumerate() {
        if out.bits[pos] != message[t] {
            bit_errors += 1;
        }
    }
    FrameOutcome {
        error: bit_errors > 0,
        bit_errors,
        iterations: out.iterations_used as u32,
        converged: out.converged,
    }
}

fn build_pool(workers: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Config(format!("thread pool: {}", e)))
}

fn wilson_interval(errors: u64, trials: u64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let z = 1.959963984540054_f64; // 95%
    let n = trials as f64;
    let p = errors as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    ((center - half).max(0.0), (center + half).min(1.0))
}

fn percentile_from_hist(hist: &[u64], frames: u64, q: f64) -> u32 {
    let target = (q * frames as f64).ceil() as u64;
    let mut cum = 0u64;
    for (t, &c) in hist.iter().enumerate() {
        cum += c;
        if cum >= target {
            return t as u32;
        }
    }
    hist.len().saturating_sub(1) as u32
}

/// Runs the frame-error-rate experiment over the configured SNR grid.
pub fn run_fer(code: &LoadedCode, cfg: &SimConfig) -> Result<SimResult> {
    cfg.validate(code)?;
    let start = std::time::Instant::now();
    let pool = build_pool(cfg.workers)?;
    let k = code.k() as u64;

    let mut points = Vec::with_capacity(cfg.snr_db.len());
    for &ebn0 in &cfg.snr_db {
        let sigma = sigma_from_ebn0_db(ebn0, code.rate());
        let model = cfg.channel.model(sigma);
        let mut frames = 0u64;
        let mut frame_errors = 0u64;
        let mut bit_errors = 0u64;
        let mut converged = 0u64;
        let mut iter_sum = 0u64;
        let mut hist = vec![0u64; cfg.decoder.max_iters + 1];

        while frames < cfg.max_frames
            && (cfg.min_frame_errors == 0 || frame_errors < cfg.min_frame_errors)
        {
            let chunk = CHUNK.min(cfg.max_frames - frames);
            let outcomes: Vec<FrameOutcome> = pool.install(|| {
                (frames..frames + chunk)
                    .into_par_iter()
                    .map_init(
                        || {
                            Decoder::new(&code.graph, cfg.decoder.clone())
                                .expect("config validated")
                        },
                        |decoder, f| {
                            simulate_frame(
                                code,
                                decoder,
                                &model,
                                cfg.interleave,
                                cfg.all_zero_messages,
                                cfg.seed,
                                f,
                            )
                        },
                    )
                    .collect()
            });
            for o in &outcomes {
                frame_errors += u64::from(o.error);
                bit_errors += o.bit_errors as u64;
                converged += u64::from(o.converged);
                iter_sum += o.iterations as u64;
                hist[o.iterations as usize] += 1;
            }
            frames += chunk;
        }

        let (lo, hi) = wilson_interval(frame_errors, frames);
        points.push(PointResult {
            ebn0_db: ebn0,
            sigma,
            frames,
            frame_errors,
            bit_errors,
            fer: frame_errors as f64 / frames as f64,
            ber: bit_errors as f64 / (frames * k) as f64,
            fer_wilson_low: lo,
            fer_wilson_high: hi,
            mean_iterations: iter_sum as f64 / frames as f64,
            p50_iterations: percentile_from_hist(&hist, frames, 0.50),
            p95_iterations: percentile_from_hist(&hist, frames, 0.95),
            converged_frames: converged,
        });
    }

    let config_json = serde_json::to_string(cfg).expect("config serializes");
    Ok(SimResult {
        code_name: code.name.clone(),
        code_fingerprint: format!("{:016x}", code.fingerprint),
        code_n: code.n(),
        code_k: code.k(),
        rate: code.rate(),
        rng: RNG_ALGORITHM.to_string(),
        seed: cfg.seed,
        config_hash: format!("{:016x}", fnv1a(config_json.as_bytes())),
        config: cfg.clone(),
        points,
        wall_time_secs: start.elapsed().as_secs_f64(),
    })
}

/// Same experiment as [`run_fer`] with the iteration statistics as the
/// quantity of interest (they are recorded either way).
pub fn run_iteration_profile(code: &LoadedCode, cfg: &SimConfig) -> Result<SimResult> {
    run_fer(code, cfg)
}

/// FER as a function of the iteration budget at one SNR point.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConvergenceResult {
    pub ebn0_db: f64,
    pub frames: u64,
    /// (iteration-equivalents, frame errors, FER) per grid entry.
    pub points: Vec<ConvergencePoint>,
}

/// One entry of a convergence study.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConvergencePoint {
    pub iterations: usize,
    pub frame_errors: u64,
    pub fer: f64,
}

/// Measures FER after exactly `t` iteration-equivalents for every `t` in
/// `iter_grid`, at the first SNR point of the grid, over `cfg.max_frames`
/// frames (no early stopping, so different decoders see identical frames).
/// Frames that stop early keep their final state for larger `t`.
pub fn run_convergence_study(
    code: &LoadedCode,
    cfg: &SimConfig,
    iter_grid: &[usize],
) -> Result<ConvergenceResult> {
    cfg.validate(code)?;
    if iter_grid.is_empty() {
        return Err(Error::Config("iteration grid must be non-empty".into()));
    }
    let max_t = *iter_grid.iter().max().unwrap();
    let mut decoder_cfg = cfg.decoder.clone();
    decoder_cfg.max_iters = max_t.max(1);

    let ebn0 = cfg.snr_db[0];
    let sigma = sigma_from_ebn0_db(ebn0, code.rate());
    let model = cfg.channel.model(sigma);
    let pool = build_pool(cfg.workers)?;

    // errors_by_t[t] = frames whose info bits are wrong after t
    // iteration-equivalents.
    let errors_by_t: Vec<u64> = pool.install(|| {
        (0..cfg.max_frames)
            .into_par_iter()
            .map_init(
                || Decoder::new(&code.graph, decoder_cfg.clone()).expect("config validated"),
                |decoder, f| {
                    use rand::Rng;
                    let k = code.k();
                    let message: Vec<bool> = if cfg.all_zero_messages {
                        vec![false; k]
                    } else {
                        let mut rng = frame_stream(cfg.seed, f, streams::MESSAGE);
                        (0..k).map(|_| rng.random()).collect()
                    };
                    let codeword = code.encoder.encode(&message).expect("length ok");
                    let symbols = bpsk_modulate(&codeword);
                    let mut ch_rng = frame_stream(cfg.seed, f, streams::CHANNEL);
                    let (y, fr) = transmit(&symbols, &model, &mut ch_rng).expect("validated");
                    let llr = compute_llr(&y, &model, &fr).expect("validated");

                    let info = code.info_positions();
                    let mut wrong_at = vec![true; max_t + 1];
                    let mut last_seen = 0usize;
                    decoder
                        .decode_traced(&llr, &mut |view| {
                            if view.iteration <= max_t {
                                let ok = info
                                    .iter()
                                    .enumerate()
                                    .all(|(t, &pos)| view.hard[pos] == message[t]);
                                wrong_at[view.iteration] = !ok;
                                last_seen = view.iteration;
                            }
                        })
                        .expect("LLR length matches");
                    // Early-stopped frames keep their final state.
                    for t in last_seen + 1..=max_t {
                        wrong_at[t] = wrong_at[last_seen];
                    }
                    wrong_at
                },
            )
            .fold(
                || vec![0u64; max_t + 1],
                |mut acc, wrong_at| {
                    for (t, &w) in wrong_at.iter().enumerate() {
                        acc[t] += u64::from(w);
                    }
                    acc
                },
            )
            .reduce(
                || vec![0u64; max_t + 1],
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(b) {
                        *x += y;
                    }
                    a
                },
            )
    });

    let points = iter_grid
        .iter()
        .map(|&t| ConvergencePoint {
            iterations: t,
            frame_errors: errors_by_t[t],
            fer: errors_by_t[t] as f64 / cfg.max_frames as f64,
        })
        .collect();
    Ok(ConvergenceResult {
        ebn0_db: ebn0,
        frames: cfg.max_frames,
        points,
    })
}

/// Which decoder parameter a sweep varies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SweepParam {
    /// Normalization constant of normalized min-sum.
    Alpha,
    /// Offset constant of offset min-sum.
    Beta,
    /// Constant reweighting factor of URW-BP.
    Rho,
}

/// One sweep entry.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepEntry {
    pub value: f64,
    pub fer: f64,
    pub frames: u64,
    pub frame_errors: u64,
}

/// Result of a parameter sweep at the first SNR point.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepResult {
    pub param: SweepParam,
    pub ebn0_db: f64,
    pub entries: Vec<SweepEntry>,
    /// Grid value with the lowest FER (first minimum on ties).
    pub best_value: f64,
    pub best_fer: f64,
}

/// Sweeps one decoder parameter over `grid` with common random numbers
/// (identical seed, hence identical frames, for every value).
pub fn sweep_parameter(
    code: &LoadedCode,
    cfg: &SimConfig,
    param: SweepParam,
    grid: &[f64],
) -> Result<SweepResult> {
    if grid.is_empty() {
        return Err(Error::Config("sweep grid must be non-empty".into()));
    }
    let mut entries = Vec::with_capacity(grid.len());
    for &value in grid {
        let mut swept = cfg.clone();
        swept.snr_db = vec![cfg
            .snr_db
            .first()
            .copied()
            .ok_or_else(|| Error::Config("SNR grid must be non-empty".into()))?];
        swept.decoder.variant = match param {
            SweepParam::Alpha => Variant::NormalizedMinSum { alpha: value },
            SweepParam::Beta => Variant::OffsetMinSum { beta: value },
            SweepParam::Rho => Variant::Urw { rho: value },
        };
        let result = run_fer(code, &swept)?;
        let p = &result.points[0];
        entries.push(SweepEntry {
            value,
            fer: p.fer,
            frames: p.frames,
            frame_errors: p.frame_errors,
        });
    }
    let best = entries
        .iter()
        .min_by(|a, b| a.fer.total_cmp(&b.fer))
        .expect("non-empty grid");
    Ok(SweepResult {
        param,
        ebn0_db: cfg.snr_db[0],
        best_value: best.value,
        best_fer: best.fer,
        entries,
    })
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codegen::{build_ira_code, peg_construct, DegreeSequence};
    use crate::decode::Schedule;

    fn test_code() -> LoadedCode {
        let h = build_ira_code(24, 48, 3, 7).unwrap();
        LoadedCode::from_matrix("ira-48-24", h, None).unwrap()
    }

    fn base_cfg() -> SimConfig {
        SimConfig {
            snr_db: vec![4.0],
            channel: ChannelKind::Awgn,
            interleave: false,
            decoder: DecoderConfig::spa(20),
            max_frames: 400,
            min_frame_errors: 0,
            seed: 11,
            workers: 2,
            all_zero_messages: false,
        }
    }

    #[test]
    fn noiseless_point_is_error_free() {
        let code = test_code();
        let mut cfg = base_cfg();
        cfg.snr_db = vec![40.0];
        cfg.max_frames = 50;
        let result = run_fer(&code, &cfg).unwrap();
        let p = &result.points[0];
        assert_eq!(p.frame_errors, 0);
        assert_eq!(p.fer, 0.0);
        assert!(p.mean_iterations <= 1.0);
    }

    #[test]
    fn deterministic_across_worker_counts() {
        let code = test_code();
        let mut one = base_cfg();
        one.workers = 1;
        let mut eight = base_cfg();
        eight.workers = 8;
        let a = run_fer(&code, &one).unwrap();
        let b = run_fer(&code, &eight).unwrap();
        assert_eq!(a.points, b.points);
    }

    #[test]
    fn fer_bounds_ber() {
        let code = test_code();
        let mut cfg = base_cfg();
        cfg.snr_db = vec![0.0, 2.0];
        let result = run_fer(&code, &cfg).unwrap();
        for p in &result.points {
            assert!(p.fer >= p.ber);
            assert!(p.fer >= p.fer_wilson_low && p.fer <= p.fer_wilson_high);
            assert!(p.mean_iterations <= cfg.decoder.max_iters as f64);
        }
    }

    #[test]
    fn early_stop_truncates_budget() {
        let code = test_code();
        let mut cfg = base_cfg();
        cfg.snr_db = vec![-10.0]; // everything fails
        cfg.max_frames = 100_000;
        cfg.min_frame_errors = 50;
        let result = run_fer(&code, &cfg).unwrap();
        let p = &result.points[0];
        assert!(p.frames < cfg.max_frames);
        assert!(p.frame_errors >= 50);
    }

    #[test]
    fn convergence_study_t0_is_channel_fer() {
        let code = test_code();
        let mut cfg = base_cfg();
        cfg.max_frames = 300;
        let conv = run_convergence_study(&code, &cfg, &[0, 1, 5, 10]).unwrap();
        // t = 0 equals hard decisions straight off the channel: at 4 dB on a
        // rate-1/2 code essentially every frame has at least one bit error.
        assert!(conv.points[0].fer > 0.5);
        // FER never increases with more iterations for this well-behaved
        // configuration (checked on the common frame set).
        let fers: Vec<f64> = conv.points.iter().map(|p| p.fer).collect();
        for w in fers.windows(2) {
            assert!(w[1] <= w[0] + 1e-12);
        }
    }

    #[test]
    fn sweep_alpha_one_equals_plain_minsum() {
        let code = test_code();
        let mut cfg = base_cfg();
        cfg.max_frames = 300;
        cfg.decoder.variant = Variant::MinSum;
        cfg.decoder.schedule = Schedule::Flooding;
        let plain = run_fer(&code, &cfg).unwrap();
        let sweep = sweep_parameter(&code, &cfg, SweepParam::Alpha, &[1.0, 1.5]).unwrap();
        assert_eq!(sweep.entries[0].fer, plain.points[0].fer);
        assert_eq!(sweep.entries[0].frame_errors, plain.points[0].frame_errors);
    }

    #[test]
    fn mean_iterations_monotone_in_snr_with_common_frames() {
        let code = test_code();
        let mut cfg = base_cfg();
        cfg.snr_db = (0..7).map(|i| i as f64).collect();
        cfg.max_frames = 500;
        let result = run_iteration_profile(&code, &cfg).unwrap();
        let means: Vec<f64> = result.points.iter().map(|p| p.mean_iterations).collect();
        for w in means.windows(2) {
            assert!(w[1] <= w[0] + 1e-12, "means not monotone: {:?}", means);
        }
    }

    #[test]
    fn sweep_rho_one_equals_spa() {
        let code = test_code();
        let mut cfg = base_cfg();
        cfg.max_frames = 300;
        let spa = run_fer(&code, &cfg).unwrap();
        let sweep = sweep_parameter(&code, &cfg, SweepParam::Rho, &[0.6, 1.0]).unwrap();
        let rho_one = sweep.entries.iter().find(|e| e.value == 1.0).unwrap();
        assert_eq!(rho_one.fer, spa.points[0].fer);
        assert_eq!(rho_one.frame_errors, spa.points[0].frame_errors);
    }

    #[test]
    fn all_zero_shortcut_sends_zero_codewords() {
        let code = test_code();
        let mut cfg = base_cfg();
        cfg.all_zero_messages = true;
        cfg.snr_db = vec![30.0];
        cfg.max_frames = 20;
        let result = run_fer(&code, &cfg).unwrap();
        assert_eq!(result.points[0].frame_errors, 0);
        // Random-message mode must draw from a different stream, so the two
        // configurations hash differently in the metadata.
        let mut rnd = cfg.clone();
        rnd.all_zero_messages = false;
        let other = run_fer(&code, &rnd).unwrap();
        assert_ne!(result.config_hash, other.config_hash);
    }

    #[test]
    fn interleaver_is_deterministic_and_changes_outcomes() {
        let degrees = DegreeSequence::regular(48, 3, 24).unwrap();
        let h = peg_construct(24, 48, &degrees, 3).unwrap();
        let code = LoadedCode::from_matrix("peg", h, None).unwrap();
        let mut cfg = base_cfg();
        cfg.channel = ChannelKind::BlockFading { fadings: 2 };
        cfg.snr_db = vec![8.0];
        cfg.max_frames = 200;
        let plain = run_fer(&code, &cfg).unwrap();
        cfg.interleave = true;
        let il_a = run_fer(&code, &cfg).unwrap();
        let il_b = run_fer(&code, &cfg).unwrap();
        assert_eq!(il_a.points, il_b.points);
        // The interleaver reshuffles which bits fade; outcomes shift.
        assert_ne!(plain.points[0].bit_errors, il_a.points[0].bit_errors);
    }
}
