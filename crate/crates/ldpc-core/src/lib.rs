//! LDPC coding laboratory: code construction, encoding, belief-propagation
//! decoding in several variants and schedules, and a Monte Carlo link
//! simulation harness for AWGN and block-fading channels.
//!
//! The crate is organized along the processing chain:
//!
//! - [`pcm`]: sparse parity-check matrices, file formats (alist and
//!   base-matrix text), Tanner-graph indexing, girth and cycle counting.
//! - [`codegen`]: progressive edge growth, quasi-cyclic lifting,
//!   repeat-accumulate templates and root-check codes for block fading.
//! - [`encode`]: generator derivation over GF(2) and the linear-time
//!   dual-diagonal encoder.
//! - [`channel`]: BPSK, AWGN / Rayleigh block fading, LLRs, outage curves.
//! - [`decode`]: sum-product and min-sum families (plain, normalized,
//!   offset), uniform and variable reweighting, under flooding, layered,
//!   residual and node-wise schedules.
//! - [`sim`]: reproducible frame-error-rate simulation with per-frame
//!   counter-based RNG streams, parameter sweeps and convergence studies.

pub mod channel;
pub mod codegen;
pub mod decode;
pub mod encode;
pub mod error;
pub mod pcm;
pub mod sim;

pub use error::{Error, Result};

/// Saturation bound for log-likelihood ratios, applied to channel LLRs and
/// inside check-node updates. Far beyond any decision-relevant magnitude;
/// keeps tanh-domain arithmetic away from infinities.
pub const LLR_MAX: f64 = 50.0;
