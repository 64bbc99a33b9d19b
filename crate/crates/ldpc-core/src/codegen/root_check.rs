//! Root-check structuring for full diversity over block-fading channels.
//!
//! For F = 2 fadings at rate 1/2 the codeword is split into contiguous
//! halves, one per fading block, and each half carries an equal share of the
//! information bits. Every information bit gets a dedicated root check whose
//! other neighbors all live in the opposite fading block, so erasing either
//! block still lets one hop of message passing recover every information
//! bit. The construction works at the protograph level and lifts to a
//! quasi-cyclic matrix, keeping the accumulator (dual-diagonal) parity
//! blocks that make encoding a forward substitution.
//!
//! Base-matrix layout for nb block columns (q = nb/4):
//!
//! ```text
//!              i1 (q)     p1 (q)     i2 (q)     p2 (q)
//! class 1   [  I_diag   |   0     |  PEG      |  dual-diag ]   rows 0..q
//! class 2   [  PEG      | dual-diag|  I_diag  |   0        ]   rows q..2q
//! ```
//!
//! Class-1 checks are the root checks of the block-1 information bits,
//! class-2 checks of the block-2 ones.

use super::peg::{place_block_greedy, LiftedGraph};
use crate::error::{Error, Result};
use crate::pcm::{BaseMatrix, SparseBinaryMatrix};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Structural description of a root-check code.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootCheckTemplate {
    /// Number of fading blocks F.
    pub fadings: usize,
    /// Design rate (1/F for full diversity).
    pub rate: f64,
    /// Fading block of every variable node (contiguous equal segments).
    pub block_of: Vec<usize>,
    /// Codeword positions carrying information bits.
    pub info_positions: Vec<usize>,
    /// Codeword positions carrying parity bits.
    pub parity_positions: Vec<usize>,
    /// For every check, the fading block whose information bits it roots.
    pub check_class: Vec<usize>,
}

impl RootCheckTemplate {
    /// Fading block of variable `v`.
    pub fn block(&self, v: usize) -> usize {
        self.block_of[v]
    }
}

/// Builds a QC-IRA root-check base matrix and its structural template.
///
/// `nb` block columns, `mb = nb/2` block rows, lift `s`, `fadings = 2`.
/// The expansion is `mb·s × nb·s` with rate 1/2. PEG-style greedy shift and
/// row selection maximizes the shortest cycle on the lifted graph; identical
/// seeds give identical output.
pub fn build_qc_ira_root_check(
    nb: usize,
    mb: usize,
    s: usize,
    fadings: usize,
    seed: u64,
) -> Result<(BaseMatrix, RootCheckTemplate)> {
    if fadings != 2 {
        return Err(Error::Parameter(format!(
            "full diversity requires R <= 1/F; this construction supports F = 2 (got F = {})",
            fadings
        )));
    }
    if mb * 2 != nb {
        return Err(Error::Parameter(format!(
            "full diversity requires R <= 1/F: need mb/nb = 1/2 (got {}/{})",
            mb, nb
        )));
    }
    if !nb.is_multiple_of(4) {
        return Err(Error::Parameter(format!(
            "nb must be divisible by 4 to split info/parity per fading block (got {})",
            nb
        )));
    }
    let q = nb / 4;
    let i1 = 0..q;
    let p1 = q..2 * q;
    let i2 = 2 * q..3 * q;
    let p2 = 3 * q..4 * q;

    let mut base = BaseMatrix::new(mb, nb, s, vec![vec![-1; nb]; mb])?;
    let mut lifted = LiftedGraph::new(mb, nb, s);
    let mut row_deg = vec![0usize; mb];
    let place_fixed = |base: &mut BaseMatrix,
                       lifted: &mut LiftedGraph,
                       row_deg: &mut [usize],
                       r: usize,
                       c: usize| {
        base.set_entry(r, c, 0).expect("shift 0 is always in range");
        lifted.add_block(r, c, 0);
        row_deg[r] += 1;
    };

    // Root diagonals: class-1 row r <-> i1 column r, class-2 row q+r <-> i2.
    for r in 0..q {
        place_fixed(&mut base, &mut lifted, &mut row_deg, r, i1.start + r);
        place_fixed(&mut base, &mut lifted, &mut row_deg, q + r, i2.start + r);
    }
    // Accumulators: class-1 rows drive p2, class-2 rows drive p1.
    for r in 0..q {
        place_fixed(&mut base, &mut lifted, &mut row_deg, r, p2.start + r);
        if r > 0 {
            place_fixed(&mut base, &mut lifted, &mut row_deg, r, p2.start + r - 1);
        }
        place_fixed(&mut base, &mut lifted, &mut row_deg, q + r, p1.start + r);
        if r > 0 {
            place_fixed(
                &mut base,
                &mut lifted,
                &mut row_deg,
                q + r,
                p1.start + r - 1,
            );
        }
    }

    // PEG regions: class-1 rows connect to i2 columns, class-2 rows to i1
    // columns, three blocks per information column.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let class1: Vec<usize> = (0..q).collect();
    let class2: Vec<usize> = (q..2 * q).collect();
    const EXTRA_INFO_BLOCKS: usize = 3;
    for bj in i2.clone() {
        for _ in 0..EXTRA_INFO_BLOCKS.min(q) {
            place_block_greedy(
                &mut base,
                &mut lifted,
                &mut row_deg,
                &mut rng,
                bj,
                Some(&class1),
            )?;
        }
    }
    for bj in i1.clone() {
        for _ in 0..EXTRA_INFO_BLOCKS.min(q) {
            place_block_greedy(
                &mut base,
                &mut lifted,
                &mut row_deg,
                &mut rng,
                bj,
                Some(&class2),
            )?;
        }
    }

    let n = nb * s;
    let m = mb * s;
    let half = n / 2;
    let block_of = (0..n).map(|v| usize::from(v >= half)).collect();
    let expand_cols = |range: std::ops::Range<usize>| -> Vec<usize> {
        range.flat_map(|bc| bc * s..(bc + 1) * s).collect()
    };
    let mut info_positions = expand_cols(i1);
    info_positions.extend(expand_cols(i2));
    let mut parity_positions = expand_cols(p1);
    parity_positions.extend(expand_cols(p2));
    let check_class = (0..m).map(|c| usize::from(c >= m / 2)).collect();

    let template = RootCheckTemplate {
        fadings,
        rate: 0.5,
        block_of,
        info_positions,
        parity_positions,
        check_class,
    };
    Ok((base, template))
}

/// Verifies the root-check property by direct graph scan: every information
/// variable in fading block f must have at least one check whose other
/// neighbors all lie outside f. Returns the offending variables.
pub fn audit_root_check(h: &SparseBinaryMatrix, tpl: &RootCheckTemplate) -> Vec<usize> {
    let mut violations = Vec::new();
    for &v in &tpl.info_positions {
        let f = tpl.block_of[v];
        let has_root = h
            .col(v)
            .iter()
            .any(|&c| h.row(c).iter().all(|&v2| v2 == v || tpl.block_of[v2] != f));
        if !has_root {
            violations.push(v);
        }
    }
    violations
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encode::IraEncoder;
    use crate::pcm::girth;

    #[test]
    fn wifi_sized_expansion() {
        let (base, tpl) = build_qc_ira_root_check(16, 8, 42, 2, 1).unwrap();
        let h = base.expand();
        assert_eq!(h.rows(), 336);
        assert_eq!(h.cols(), 672);
        assert_eq!(tpl.info_positions.len(), 336);
        assert_eq!(tpl.parity_positions.len(), 336);
    }

    #[test]
    fn root_property_holds() {
        let (base, tpl) = build_qc_ira_root_check(16, 8, 7, 2, 3).unwrap();
        let h = base.expand();
        assert!(audit_root_check(&h, &tpl).is_empty());
    }

    #[test]
    fn expansion_is_ira_encodable() {
        let (base, tpl) = build_qc_ira_root_check(8, 4, 5, 2, 9).unwrap();
        let h = base.expand();
        let enc = IraEncoder::with_parity_positions(&h, &tpl.parity_positions).unwrap();
        assert_eq!(enc.k(), 20);
        let msg: Vec<bool> = (0..enc.k()).map(|t| t % 2 == 0).collect();
        let c = enc.encode(&msg).unwrap();
        assert!(h.is_codeword(&c));
    }

    #[test]
    fn deterministic_construction() {
        let (a, ta) = build_qc_ira_root_check(16, 8, 11, 2, 21).unwrap();
        let (b, tb) = build_qc_ira_root_check(16, 8, 11, 2, 21).unwrap();
        assert_eq!(a, b);
        assert_eq!(ta, tb);
    }

    #[test]
    fn rejects_bad_rate_or_fadings() {
        assert!(build_qc_ira_root_check(16, 8, 42, 3, 0).is_err());
        assert!(build_qc_ira_root_check(16, 10, 42, 2, 0).is_err());
        assert!(build_qc_ira_root_check(6, 3, 42, 2, 0).is_err());
    }

    #[test]
    fn lifted_girth_at_least_six() {
        let (base, _) = build_qc_ira_root_check(16, 8, 42, 2, 1).unwrap();
        let h = base.expand();
        assert!(girth(&h).unwrap() >= 6);
    }

    #[test]
    fn audit_flags_broken_structure() {
        let (base, tpl) = build_qc_ira_root_check(8, 4, 5, 2, 9).unwrap();
        let mut bad = base.clone();
        // Connect a class-1 row to a parity column of fading block 1: the
        // i1 bits rooted by that row lose their root check.
        bad.set_entry(0, 2, 0).unwrap();
        let h = bad.expand();
        assert!(!audit_root_check(&h, &tpl).is_empty());
    }
}
