//! Shared helpers for integration tests.
#![allow(dead_code)]

use ldpc_core::pcm::SparseBinaryMatrix;
use std::path::PathBuf;

/// Workspace-level directory of shipped code files.
pub fn codes_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../codes")
}

pub fn code_path(name: &str) -> PathBuf {
    codes_dir().join(name)
}

/// Names of every shipped code file.
pub const SHIPPED_CODES: &[&str] = &[
    "wifi_ad_r12.bm",
    "wifi_style_r58.bm",
    "wifi_style_r34.bm",
    "wifi_style_r1316.bm",
    "qc_ira_root_r12.bm",
    "peg_n96_r12.alist",
];

pub fn from_dense(rows: &[&[u8]]) -> SparseBinaryMatrix {
    let m = rows.len();
    let n = rows[0].len();
    let lists = rows
        .iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    SparseBinaryMatrix::from_rows(m, n, lists).unwrap()
}

/// Random sparse matrix for property tests (not necessarily full rank).
pub fn random_matrix(m: usize, n: usize, col_deg: usize, seed: u64) -> SparseBinaryMatrix {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); m];
    for j in 0..n {
        let mut picked = Vec::new();
        while picked.len() < col_deg.min(m) {
            let i = rng.random_range(0..m);
            if !picked.contains(&i) {
                picked.push(i);
            }
        }
        for i in picked {
            rows[i].push(j);
        }
    }
    SparseBinaryMatrix::from_rows(m, n, rows).unwrap()
}
