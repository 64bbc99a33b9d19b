//! Belief-propagation decoding.
//!
//! A decoder is the cross product of a check-update *variant* and a message
//! *schedule*:
//!
//! - Variants: sum-product (tanh domain), min-sum, normalized min-sum
//!   (magnitudes divided by alpha), offset min-sum (magnitudes reduced by
//!   beta with a floor at zero), uniformly reweighted BP (constant factor
//!   rho on every check contribution) and variable-FAP BP (per-check rho
//!   derived from short-cycle structure).
//! - Schedules: flooding (simultaneous update of all messages), layered
//!   (check nodes in sequence, each immediately updating its variables),
//!   residual BP (always propagate the single check-to-variable message
//!   with the largest residual) and node-wise BP (propagate all messages of
//!   the check owning the largest residual).
//!
//! All variants share one engine, so the documented reductions (normalized
//! min-sum at alpha = 1 is min-sum, offset min-sum at beta = 0 is min-sum,
//! URW at rho = 1 is the sum-product algorithm) hold bitwise on the message
//! trajectories, not just statistically.
//!
//! Decoders read nothing but the per-bit LLRs (or any positively scaled
//! version of them for the min-sum family): the transmitted codeword and the
//! channel noise level are never consulted. Hard decisions use the
//! convention that a non-negative belief means bit 0. Decoding stops when
//! the hard decisions satisfy every parity check (if enabled) or after
//! `max_iters` iteration-equivalents; for the dynamic schedules one
//! iteration-equivalent is |E| single check-to-variable propagations.

mod engine;

pub use engine::{Decoder, IterationView};

use crate::error::{Error, Result};
use crate::pcm::{CycleCounts, SparseBinaryMatrix, TannerGraph};
use crate::LLR_MAX;
use serde::{Deserialize, Serialize};

/// Check-update variant.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Variant {
    /// Sum-product (tanh domain), the reference algorithm.
    Spa,
    /// Min-sum approximation.
    MinSum,
    /// Min-sum with magnitudes divided by `alpha` (≥ 1).
    NormalizedMinSum {
        /// Normalization constant alpha ≥ 1.
        alpha: f64,
    },
    /// Min-sum with magnitudes reduced by `beta` and floored at zero.
    OffsetMinSum {
        /// Offset constant beta ≥ 0.
        beta: f64,
    },
    /// Uniformly reweighted BP: every check contribution scaled by `rho`.
    Urw {
        /// Constant factor-appearance probability, 0 < rho ≤ 1.
        rho: f64,
    },
    /// Variable-FAP BP: per-check weights, typically from
    /// [`vfap_weights`].
    Vfap {
        /// One weight in (0, 1] per check node.
        weights: Vec<f64>,
    },
}

/// Message-passing schedule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Schedule {
    /// Simultaneous update of all variable-to-check then check-to-variable
    /// messages.
    Flooding,
    /// Per check node: update its outgoing messages, then the associated
    /// variable nodes, sequentially in natural check order.
    Layered,
    /// Informed dynamic scheduling: single largest-residual message first.
    ResidualBp,
    /// Informed dynamic scheduling: all messages of the largest-residual
    /// check node first.
    NodeWise,
}

/// Full decoder configuration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecoderConfig {
    pub variant: Variant,
    pub schedule: Schedule,
    /// Maximum iteration-equivalents (≥ 1).
    pub max_iters: usize,
    /// Stop as soon as the hard decisions satisfy every parity check.
    pub stop_on_syndrome: bool,
}

impl DecoderConfig {
    /// Flooding SPA with syndrome stopping, the common baseline.
    pub fn spa(max_iters: usize) -> Self {
        Self {
            variant: Variant::Spa,
            schedule: Schedule::Flooding,
            max_iters,
            stop_on_syndrome: true,
        }
    }

    /// Validates parameter ranges against a code with `checks` check nodes.
    pub fn validate(&self, checks: usize) -> Result<()> {
        if self.max_iters == 0 {
            return Err(Error::Config("max_iters must be positive".into()));
        }
        match &self.variant {
            Variant::Spa | Variant::MinSum => {}
            Variant::NormalizedMinSum { alpha } => {
                if alpha.is_nan() || *alpha < 1.0 {
                    return Err(Error::Config(format!(
                        "normalization alpha must be >= 1 (got {})",
                        alpha
                    )));
                }
            }
            Variant::OffsetMinSum { beta } => {
                if beta.is_nan() || *beta < 0.0 {
                    return Err(Error::Config(format!(
                        "offset beta must be >= 0 (got {})",
                        beta
                    )));
                }
            }
            Variant::Urw { rho } => {
                if !(*rho > 0.0 && *rho <= 1.0) {
                    return Err(Error::Config(format!(
                        "reweighting rho must be in (0, 1] (got {})",
                        rho
                    )));
                }
            }
            Variant::Vfap { weights } => {
                if weights.len() != checks {
                    return Err(Error::Config(format!(
                        "VFAP weight map covers {} checks, code has {} (derive it with vfap_weights from cycle counts)",
                        weights.len(),
                        checks
                    )));
                }
                if weights.iter().any(|&w| !(w > 0.0 && w <= 1.0)) {
                    return Err(Error::Config("VFAP weights must all be in (0, 1]".into()));
                }
            }
        }
        Ok(())
    }
}

/// Outcome of one decode.
#[derive(Debug, Clone, PartialEq)]
pub struct DecodeResult {
    /// Hard decisions for every variable node.
    pub bits: Vec<bool>,
    /// True iff `bits` satisfies every parity check.
    pub converged: bool,
    /// Iteration-equivalents actually spent (0 when the channel hard
    /// decisions already satisfy the syndrome).
    pub iterations_used: usize,
    /// Number of unsatisfied checks at exit (0 when converged).
    pub syndrome_weight: usize,
}

/// Sum-product check update over one extrinsic input list:
/// `2·atanh(∏ tanh(Λ/2))`, clamped to ±[`LLR_MAX`](crate::LLR_MAX).
///
/// The exact value never exceeds the smallest input magnitude (the min-sum
/// bound); the tanh/atanh round trip can drift a few ulps above it, so the
/// magnitude is capped there.
pub fn check_update_spa(incoming: &[f64]) -> f64 {
    let p: f64 = incoming.iter().map(|x| (x / 2.0).tanh()).product();
    let min_mag = incoming.iter().fold(f64::INFINITY, |m, &x| m.min(x.abs()));
    let raw = (2.0 * p.atanh()).clamp(-LLR_MAX, LLR_MAX);
    raw.clamp(-min_mag, min_mag)
}

/// Min-sum family check update: sign is the product of input signs, the
/// magnitude is `max(min|Λ|/alpha − beta, 0)`. Plain min-sum is alpha = 1,
/// beta = 0; the normalized and offset variants set one of the two.
pub fn check_update_minsum(incoming: &[f64], alpha: f64, beta: f64) -> f64 {
    let mut negative = false;
    let mut min_mag = f64::INFINITY;
    for &x in incoming {
        negative ^= x < 0.0;
        min_mag = min_mag.min(x.abs());
    }
    let mag = (min_mag / alpha - beta).max(0.0);
    if negative {
        -mag
    } else {
        mag
    }
}

/// Reweighted belief: `b = L + Σ_i w_i·Λ_i`. With unit weights this is the
/// standard BP belief.
pub fn belief(channel_llr: f64, messages: &[f64], weights: &[f64]) -> f64 {
    debug_assert_eq!(messages.len(), weights.len());
    channel_llr
        + messages
            .iter()
            .zip(weights)
            .map(|(m, w)| w * m)
            .sum::<f64>()
}

/// Residual of a message update: `|after − before|`. A message that has just
/// been propagated has residual zero.
pub fn compute_residual(before: f64, after: f64) -> f64 {
    (after - before).abs()
}

/// Two-level VFAP weight map: checks participating in at least one
/// shortest-length cycle get `rho_in_cycle`, every other check gets 1.0.
/// An acyclic graph (or one whose girth exceeds the counting window) gets
/// all ones.
pub fn vfap_weights(
    h: &SparseBinaryMatrix,
    counts: &CycleCounts,
    rho_in_cycle: f64,
) -> Result<Vec<f64>> {
    if !(rho_in_cycle > 0.0 && rho_in_cycle <= 1.0) {
        return Err(Error::Parameter(format!(
            "rho_in_cycle must be in (0, 1] (got {})",
            rho_in_cycle
        )));
    }
    let Some(shortest) = counts.shortest_cycle_len() else {
        return Ok(vec![1.0; h.rows()]);
    };
    Ok((0..h.rows())
        .map(|i| {
            if counts.check_count_at(i, shortest) > 0 {
                rho_in_cycle
            } else {
                1.0
            }
        })
        .collect())
}

/// Decodes `llr` against `h` under the given configuration.
///
/// Builds the Tanner-graph indexing on the fly; for repeated decoding of the
/// same code construct a [`Decoder`] once and reuse it.
pub fn decode(h: &SparseBinaryMatrix, llr: &[f64], cfg: &DecoderConfig) -> Result<DecodeResult> {
    let graph = TannerGraph::new(h);
    Decoder::new(&graph, cfg.clone())?.decode(llr)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spa_single_input_passthrough() {
        assert!((check_update_spa(&[3.7]) - 3.7).abs() < 1e-12);
    }

    #[test]
    fn spa_two_inputs() {
        // 2·atanh(tanh(1)·tanh(−1)).
        let expected = 2.0 * (1.0f64.tanh() * (-1.0f64).tanh()).atanh();
        let got = check_update_spa(&[2.0, -2.0]);
        assert!((got - expected).abs() < 1e-12);
        assert!((got + 1.3250027473578643).abs() < 1e-9);
    }

    #[test]
    fn spa_saturates_at_llr_max() {
        assert_eq!(check_update_spa(&[LLR_MAX, LLR_MAX]), LLR_MAX);
        assert_eq!(check_update_spa(&[LLR_MAX, -LLR_MAX]), -LLR_MAX);
    }

    #[test]
    fn spa_matches_exact_parity_posterior() {
        // Exact check-node output: the LLR of bit x0 given that x0 ^ x1 ^ x2
        // ^ x3 = 0 and independent priors L1..L3 on the other bits.
        let inputs = [1.3f64, -0.7, 2.2];
        let mut num = 0.0f64; // P(parity of x1..x3 = 0)
        let mut den = 0.0f64;
        for mask in 0..8u32 {
            let mut p = 1.0;
            let mut parity = false;
            for (t, &l) in inputs.iter().enumerate() {
                let one = mask >> t & 1 == 1;
                let p1 = 1.0 / (1.0 + l.exp()); // P(bit = 1)
                p *= if one { p1 } else { 1.0 - p1 };
                parity ^= one;
            }
            if parity {
                den += p;
            } else {
                num += p;
            }
        }
        let exact = (num / den).ln();
        let got = check_update_spa(&inputs);
        assert!((got - exact).abs() < 1e-9, "{} vs {}", got, exact);
    }

    #[test]
    fn minsum_examples() {
        let inputs = [2.0, -1.5, 3.0];
        assert!((check_update_minsum(&inputs, 1.0, 0.0) + 1.5).abs() < 1e-12);
        assert!((check_update_minsum(&inputs, 1.25, 0.0) + 1.2).abs() < 1e-12);
        assert_eq!(check_update_minsum(&inputs, 1.0, 2.0), 0.0);
    }

    #[test]
    fn minsum_dominates_spa() {
        // |min-sum| >= |SPA| with equal sign, for any input list.
        let lists: [&[f64]; 4] = [
            &[0.3, -2.0],
            &[1.0, 1.0, 1.0],
            &[-0.2, 4.0, -3.3, 0.9],
            &[5.0],
        ];
        for inputs in lists {
            let ms = check_update_minsum(inputs, 1.0, 0.0);
            let spa = check_update_spa(inputs);
            assert!(ms.abs() >= spa.abs());
            if spa != 0.0 {
                assert_eq!(ms.is_sign_negative(), spa.is_sign_negative());
            }
        }
    }

    #[test]
    fn belief_examples() {
        assert!((belief(0.5, &[1.0, -0.25], &[1.0, 1.0]) - 1.25).abs() < 1e-12);
        assert!((belief(0.5, &[1.0, -0.25], &[0.5, 0.5]) - 0.875).abs() < 1e-12);
    }

    #[test]
    fn residual_definition() {
        assert_eq!(compute_residual(1.0, 1.0), 0.0);
        assert_eq!(compute_residual(1.0, 1.5), 0.5);
        assert_eq!(compute_residual(1.5, 1.0), 0.5);
    }

    #[test]
    fn vfap_acyclic_all_ones() {
        let h = SparseBinaryMatrix::from_rows(2, 3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        let counts = crate::pcm::count_short_cycles(&h, 8).unwrap();
        let w = vfap_weights(&h, &counts, 0.8).unwrap();
        assert_eq!(w, vec![1.0, 1.0]);
    }

    #[test]
    fn vfap_four_cycle_both_checks() {
        let h = SparseBinaryMatrix::from_rows(2, 2, vec![vec![0, 1], vec![0, 1]]).unwrap();
        let counts = crate::pcm::count_short_cycles(&h, 4).unwrap();
        let w = vfap_weights(&h, &counts, 0.8).unwrap();
        assert_eq!(w, vec![0.8, 0.8]);
    }

    #[test]
    fn vfap_rejects_bad_rho() {
        let h = SparseBinaryMatrix::from_rows(2, 2, vec![vec![0, 1], vec![0, 1]]).unwrap();
        let counts = crate::pcm::count_short_cycles(&h, 4).unwrap();
        assert!(vfap_weights(&h, &counts, 0.0).is_err());
        assert!(vfap_weights(&h, &counts, 1.5).is_err());
    }

    #[test]
    fn config_validation() {
        let mut cfg = DecoderConfig::spa(20);
        assert!(cfg.validate(4).is_ok());
        cfg.max_iters = 0;
        assert!(cfg.validate(4).is_err());
        let bad_alpha = DecoderConfig {
            variant: Variant::NormalizedMinSum { alpha: 0.5 },
            ..DecoderConfig::spa(10)
        };
        assert!(bad_alpha.validate(4).is_err());
        let bad_vfap = DecoderConfig {
            variant: Variant::Vfap {
                weights: vec![0.8; 3],
            },
            ..DecoderConfig::spa(10)
        };
        assert!(bad_vfap.validate(4).is_err());
    }
}
