//! Benchmark fixtures shared by the criterion targets.

use ldpc_core::channel::{bpsk_modulate, compute_llr, sigma_from_ebn0_db, transmit, ChannelModel};
use ldpc_core::pcm::{load_base_matrix, SparseBinaryMatrix};
use ldpc_core::sim::LoadedCode;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::path::PathBuf;

pub fn codes_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../codes")
}

/// The rate-1/2 baseline matrix used by the decoder benchmarks.
pub fn wifi_matrix() -> SparseBinaryMatrix {
    let text = std::fs::read_to_string(codes_dir().join("wifi_ad_r12.bm")).unwrap();
    load_base_matrix(&text).unwrap().expand()
}

/// A batch of noisy LLR frames for the given Eb/N0, deterministic by seed.
pub fn noisy_frames(ebn0_db: f64, count: usize, seed: u64) -> Vec<Vec<f64>> {
    let code = LoadedCode::from_file(codes_dir().join("wifi_ad_r12.bm")).unwrap();
    let sigma = sigma_from_ebn0_db(ebn0_db, code.rate());
    let ch = ChannelModel::Awgn { sigma };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let msg: Vec<bool> = (0..code.k()).map(|_| rng.random()).collect();
            let cw = code.encoder.encode(&msg).unwrap();
            let x = bpsk_modulate(&cw);
            let (y, fr) = transmit(&x, &ch, &mut rng).unwrap();
            compute_llr(&y, &ch, &fr).unwrap()
        })
        .collect()
}
