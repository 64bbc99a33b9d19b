//! BPSK mapping, AWGN and block-fading channels, LLR computation, and the
//! outage reference curve.
//!
//! Conventions fixed project-wide: bit 0 maps to +1.0 (so a positive LLR
//! favors bit 0), `sigma` is the per-dimension noise standard deviation with
//! `sigma^2 = N0/2`, and the per-symbol SNR for real BPSK at rate R is
//! `gamma = 2·R·(Eb/N0)` in linear scale. Channel LLRs are clamped to
//! ±[`LLR_MAX`](crate::LLR_MAX).

use crate::error::{Error, Result};
use crate::LLR_MAX;
use rand::Rng;
use rand_distr::StandardNormal;

/// Channel selection with its noise level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ChannelModel {
    /// Additive white Gaussian noise.
    Awgn {
        /// Per-dimension noise standard deviation (> 0).
        sigma: f64,
    },
    /// Rayleigh block fading: the gain is constant over each of `fadings`
    /// contiguous equal segments of the codeword and redrawn every frame,
    /// with E[h²] = 1.
    BlockFading {
        /// Per-dimension noise standard deviation (> 0).
        sigma: f64,
        /// Number of fading blocks F ≥ 1.
        fadings: usize,
    },
}

impl ChannelModel {
    /// The configured noise standard deviation.
    pub fn sigma(&self) -> f64 {
        match *self {
            ChannelModel::Awgn { sigma } => sigma,
            ChannelModel::BlockFading { sigma, .. } => sigma,
        }
    }

    /// Number of fading blocks (1 for AWGN).
    pub fn fadings(&self) -> usize {
        match *self {
            ChannelModel::Awgn { .. } => 1,
            ChannelModel::BlockFading { fadings, .. } => fadings,
        }
    }

    fn validate(&self, n: usize) -> Result<()> {
        if self.sigma() <= 0.0 {
            return Err(Error::Config(format!(
                "noise standard deviation must be positive (got {})",
                self.sigma()
            )));
        }
        let f = self.fadings();
        if f == 0 {
            return Err(Error::Config("fading block count must be >= 1".into()));
        }
        if !n.is_multiple_of(f) {
            return Err(Error::Config(format!(
                "block length {} is not divisible into {} equal fading segments",
                n, f
            )));
        }
        Ok(())
    }
}

/// The fading gains drawn for one frame, one per block (constant within a
/// block). AWGN frames carry the single gain 1.0.
#[derive(Debug, Clone, PartialEq)]
pub struct FadingRealization {
    /// Non-negative per-block gains h_1..h_F.
    pub gains: Vec<f64>,
}

impl FadingRealization {
    /// Unit gain, used by the AWGN path.
    pub fn unit() -> Self {
        Self { gains: vec![1.0] }
    }

    /// Gain applied to symbol position `j` of an n-symbol frame.
    pub fn gain_at(&self, j: usize, n: usize) -> f64 {
        let seg = n / self.gains.len();
        self.gains[j / seg]
    }
}

/// Maps bits to antipodal symbols: 0 → +1.0, 1 → −1.0.
pub fn bpsk_modulate(bits: &[bool]) -> Vec<f64> {
    bits.iter().map(|&b| if b { -1.0 } else { 1.0 }).collect()
}

/// Draws one Rayleigh gain with E[h²] = 1 (h² is Exp(1)).
pub fn rayleigh_gain(rng: &mut impl Rng) -> f64 {
    let u: f64 = rng.random();
    (-(1.0 - u).ln()).sqrt()
}

/// Applies per-block gains and Gaussian noise: `y_j = h_{f(j)}·x_j + w_j`.
///
/// `gains.len()` must divide the frame length evenly.
pub fn apply_channel(
    symbols: &[f64],
    gains: &[f64],
    sigma: f64,
    rng: &mut impl Rng,
) -> Result<Vec<f64>> {
    if gains.is_empty() || !symbols.len().is_multiple_of(gains.len()) {
        return Err(Error::Config(format!(
            "frame length {} is not divisible into {} fading segments",
            symbols.len(),
            gains.len()
        )));
    }
    let seg = symbols.len() / gains.len();
    Ok(symbols
        .iter()
        .enumerate()
        .map(|(j, &x)| {
            let w: f64 = rng.sample(StandardNormal);
            gains[j / seg] * x + sigma * w
        })
        .collect())
}

/// Transmits a frame: draws this frame's fading realization (unit gain for
/// AWGN), then applies gains and noise.
pub fn transmit(
    symbols: &[f64],
    ch: &ChannelModel,
    rng: &mut impl Rng,
) -> Result<(Vec<f64>, FadingRealization)> {
    ch.validate(symbols.len())?;
    let fr = match *ch {
        ChannelModel::Awgn { .. } => FadingRealization::unit(),
        ChannelModel::BlockFading { fadings, .. } => FadingRealization {
            gains: (0..fadings).map(|_| rayleigh_gain(rng)).collect(),
        },
    };
    let y = apply_channel(symbols, &fr.gains, ch.sigma(), rng)?;
    Ok((y, fr))
}

/// Channel LLRs for coherent detection: `L_j = 2·h_{f(j)}·y_j / sigma²`,
/// clamped to ±[`LLR_MAX`](crate::LLR_MAX). Positive favors bit 0; an erased
/// block (h = 0) yields exactly zero.
pub fn compute_llr(y: &[f64], ch: &ChannelModel, fr: &FadingRealization) -> Result<Vec<f64>> {
    ch.validate(y.len())?;
    if !y.len().is_multiple_of(fr.gains.len()) {
        return Err(Error::Config(format!(
            "frame length {} does not match {} fading segments",
            y.len(),
            fr.gains.len()
        )));
    }
    let sigma2 = ch.sigma() * ch.sigma();
    let seg = y.len() / fr.gains.len();
    Ok(y.iter()
        .enumerate()
        .map(|(j, &yj)| (2.0 * fr.gains[j / seg] * yj / sigma2).clamp(-LLR_MAX, LLR_MAX))
        .collect())
}

/// Noise standard deviation for a given Eb/N0 in dB at code rate R:
/// `sigma = sqrt(1 / (2·R·10^(EbN0/10)))`.
pub fn sigma_from_ebn0_db(ebn0_db: f64, rate: f64) -> f64 {
    let ebn0 = 10f64.powf(ebn0_db / 10.0);
    (1.0 / (2.0 * rate * ebn0)).sqrt()
}

/// Per-symbol SNR `gamma = Es/N0 = 2·R·(Eb/N0)` in linear scale.
pub fn snr_per_symbol(ebn0_db: f64, rate: f64) -> f64 {
    2.0 * rate * 10f64.powf(ebn0_db / 10.0)
}

/// Input distribution assumed by the outage computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapacityInput {
    /// Gaussian-input capacity log2(1 + gamma·h²).
    Gaussian,
    /// BPSK-constrained mutual information.
    Bpsk,
}

/// Monte Carlo outage probability
/// `Pr[(1/F)·sum_f C(gamma·h_f²) < R]` with Gaussian-input capacity.
pub fn outage_probability(
    ebn0_db: f64,
    rate: f64,
    fadings: usize,
    samples: u64,
    rng: &mut impl Rng,
) -> f64 {
    outage_probability_with(
        ebn0_db,
        rate,
        fadings,
        samples,
        CapacityInput::Gaussian,
        rng,
    )
}

/// Outage probability with a selectable input distribution.
pub fn outage_probability_with(
    ebn0_db: f64,
    rate: f64,
    fadings: usize,
    samples: u64,
    input: CapacityInput,
    rng: &mut impl Rng,
) -> f64 {
    let gamma = snr_per_symbol(ebn0_db, rate);
    let gh = gauss_hermite_32();
    let mut outages = 0u64;
    for _ in 0..samples {
        let mut acc = 0.0;
        for _ in 0..fadings {
            let h = rayleigh_gain(rng);
            let snr = gamma * h * h;
            acc += match input {
                CapacityInput::Gaussian => (1.0 + snr).log2(),
                CapacityInput::Bpsk => bpsk_mutual_information(snr, &gh),
            };
        }
        if acc / (fadings as f64) < rate {
            outages += 1;
        }
    }
    outages as f64 / samples as f64
}

/// BPSK-constrained mutual information over AWGN at per-symbol SNR `snr`:
/// `I = 1 − E_z[log2(1 + exp(−2·snr − 2·sqrt(snr)·z))]`, z ~ N(0,1),
/// evaluated by Gauss-Hermite quadrature.
pub fn bpsk_mutual_information(snr: f64, gh: &[(f64, f64)]) -> f64 {
    if snr <= 0.0 {
        return 0.0;
    }
    let sq = snr.sqrt();
    let inv_sqrt_pi = 1.0 / std::f64::consts::PI.sqrt();
    let mut expect = 0.0;
    for &(x, w) in gh {
        let z = std::f64::consts::SQRT_2 * x;
        let e = (-2.0 * snr - 2.0 * sq * z).exp();
        expect += w * (1.0 + e).log2();
    }
    (1.0 - inv_sqrt_pi * expect).max(0.0)
}

/// Nodes and weights of 32-point Gauss-Hermite quadrature (weight e^{−x²}),
/// computed by Newton iteration on the Hermite recurrence.
pub fn gauss_hermite_32() -> Vec<(f64, f64)> {
    gauss_hermite(32)
}

fn gauss_hermite(n: usize) -> Vec<(f64, f64)> {
    // Standard Golub-Welsch-free construction (Numerical Recipes "gauher"):
    // find the roots of H_n by Newton from asymptotic initial guesses.
    let mut nodes = vec![0.0f64; n];
    let mut weights = vec![0.0f64; n];
    let m = n.div_ceil(2);
    let pim4 = 0.751_125_544_464_943; // pi^{-1/4}
    let mut z = 0.0f64;
    for i in 0..m {
        z = match i {
            0 => (2.0 * n as f64 + 1.0).sqrt() - 1.85575 * (2.0 * n as f64 + 1.0).powf(-1.0 / 6.0),
            1 => z - 1.14 * (n as f64).powf(0.426) / z,
            2 => 1.86 * z - 0.86 * nodes[0],
            3 => 1.91 * z - 0.91 * nodes[1],
            _ => 2.0 * z - nodes[i - 2],
        };
        let mut pp = 0.0;
        for _ in 0..100 {
            let mut p1 = pim4;
            let mut p2 = 0.0;
            for j in 0..n {
                let p3 = p2;
                p2 = p1;
                p1 = z * (2.0 / (j as f64 + 1.0)).sqrt() * p2
                    - (j as f64 / (j as f64 + 1.0)).sqrt() * p3;
            }
            pp = (2.0 * n as f64).sqrt() * p2;
            let z1 = z;
            z = z1 - p1 / pp;
            if (z - z1).abs() <= 3e-14 {
                break;
            }
        }
        nodes[i] = z;
        nodes[n - 1 - i] = -z;
        weights[i] = 2.0 / (pp * pp);
        weights[n - 1 - i] = weights[i];
    }
    nodes.into_iter().zip(weights).collect()
}
