//! Repeat-accumulate dual-diagonal templating.

use super::peg::PegGrowth;
use super::DegreeSequence;
use crate::error::{Error, Result};
use crate::pcm::SparseBinaryMatrix;

/// Returns the m×n matrix holding only the dual-diagonal parity part in the
/// last m columns: ones at (i, i) for all i and (i, i−1) for i ≥ 1, in
/// parity-local coordinates. The first n−m columns are left empty for the
/// systematic part.
pub fn build_ira_template(m: usize, n: usize) -> Result<SparseBinaryMatrix> {
    if m >= n {
        return Err(Error::Parameter(format!(
            "need m < n for a systematic part (got m = {}, n = {})",
            m, n
        )));
    }
    let k = n - m;
    let rows = (0..m)
        .map(|i| {
            if i == 0 {
                vec![k]
            } else {
                vec![k + i - 1, k + i]
            }
        })
        .collect();
    SparseBinaryMatrix::from_rows(m, n, rows)
}

/// Builds a complete IRA code: dual-diagonal parity part plus a PEG-grown
/// systematic part of the given column degree. The PEG growth sees the
/// accumulator edges, so the cycles they create are accounted for.
pub fn build_ira_code(
    m: usize,
    n: usize,
    systematic_degree: usize,
    seed: u64,
) -> Result<SparseBinaryMatrix> {
    let template = build_ira_template(m, n)?;
    let k = n - m;
    let degrees = DegreeSequence::regular(k, systematic_degree, m)?;
    let mut growth = PegGrowth::new(m, n, seed);
    for i in 0..m {
        for &j in template.row(i) {
            growth.add_edge(i, j);
        }
    }
    for j in 0..k {
        growth.grow_var(j, degrees.degree(j))?;
    }
    Ok(growth.into_matrix(n))
}
