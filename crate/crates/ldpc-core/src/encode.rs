//! Systematic encoders.
//!
//! Two routes to a codeword: a dense [`GeneratorMatrix`] derived from H by
//! Gaussian elimination over GF(2) (works for any matrix, tolerates rank
//! deficiency), and the [`IraEncoder`] which solves the parity bits of a
//! dual-diagonal (repeat-accumulate) parity part by forward substitution in
//! O(edges) without ever forming G.

use crate::error::{Error, Result};
use crate::pcm::SparseBinaryMatrix;

/// Dense bit rows packed into u64 words.
#[derive(Debug, Clone, PartialEq, Eq)]
struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    fn zero(n: usize) -> Self {
        Self {
            words: vec![0; n.div_ceil(64)],
        }
    }

    fn get(&self, j: usize) -> bool {
        self.words[j / 64] >> (j % 64) & 1 != 0
    }

    fn set(&mut self, j: usize) {
        self.words[j / 64] |= 1 << (j % 64);
    }

    fn xor_assign(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }
}

/// A k×n generator matrix in systematic form over a recorded set of
/// information positions.
///
/// Rows are the canonical basis codewords: row `t` carries a one at the t-th
/// systematic position and zeros at the others, so encoding places the
/// message verbatim at [`systematic_positions`](Self::systematic_positions).
#[derive(Debug, Clone)]
pub struct GeneratorMatrix {
    n: usize,
    rows: Vec<BitRow>,
    systematic: Vec<usize>,
}

impl GeneratorMatrix {
    /// Derives a generator for `h` by Gaussian elimination with leftmost
    /// column pivoting.
    ///
    /// `k = n − rank(H)`; duplicate or dependent rows of H are tolerated.
    /// Fails with a degenerate-code error when the only codeword is zero.
    pub fn derive(h: &SparseBinaryMatrix) -> Result<Self> {
        Self::derive_with_column_order(h, (0..h.cols()).collect())
    }

    /// Derives a generator preferring pivots on the *last* columns, so the
    /// systematic positions fall on the first k columns whenever the tail of
    /// H is invertible. This matches the conventional [information | parity]
    /// layout of standard code definitions.
    pub fn derive_systematic_first(h: &SparseBinaryMatrix) -> Result<Self> {
        Self::derive_with_column_order(h, (0..h.cols()).rev().collect())
    }

    /// Derives a generator that pins the systematic set to `systematic` when
    /// the complementary columns of H are independent (falls back to further
    /// pivots among `systematic` only if they are not).
    pub fn derive_with_systematic_hint(
        h: &SparseBinaryMatrix,
        systematic: &[usize],
    ) -> Result<Self> {
        let is_sys: Vec<bool> = {
            let mut v = vec![false; h.cols()];
            for &j in systematic {
                if j >= h.cols() {
                    return Err(Error::Parameter(format!(
                        "systematic position {} out of range (n = {})",
                        j,
                        h.cols()
                    )));
                }
                v[j] = true;
            }
            v
        };
        let mut order: Vec<usize> = (0..h.cols()).filter(|&j| !is_sys[j]).collect();
        order.extend((0..h.cols()).filter(|&j| is_sys[j]));
        Self::derive_with_column_order(h, order)
    }

    /// Elimination core. `col_order` lists all columns in decreasing pivot
    /// preference; within the preference order the first available column is
    /// always taken, so the result is deterministic.
    fn derive_with_column_order(h: &SparseBinaryMatrix, col_order: Vec<usize>) -> Result<Self> {
        let m = h.rows();
        let n = h.cols();
        debug_assert_eq!(col_order.len(), n);

        // Pack H rows densely.
        let mut rows: Vec<BitRow> = (0..m)
            .map(|i| {
                let mut r = BitRow::zero(n);
                for &j in h.row(i) {
                    r.set(j);
                }
                r
            })
            .collect();

        // Reduced row echelon form with pivots chosen along col_order.
        let mut pivot_col_of_row: Vec<usize> = Vec::new();
        let mut rank = 0usize;
        for &j in &col_order {
            let Some(pr) = (rank..m).find(|&r| rows[r].get(j)) else {
                continue;
            };
            rows.swap(rank, pr);
            let pivot = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row.get(j) {
                    row.xor_assign(&pivot);
                }
            }
            pivot_col_of_row.push(j);
            rank += 1;
            if rank == m {
                break;
            }
        }

        if rank == n {
            return Err(Error::DegenerateCode);
        }

        let mut is_pivot = vec![false; n];
        for &j in &pivot_col_of_row {
            is_pivot[j] = true;
        }
        let mut systematic: Vec<usize> = (0..n).filter(|&j| !is_pivot[j]).collect();
        systematic.sort_unstable();

        // Null-space basis: one codeword per free column f, with a one at f
        // and, at pivot column p_r, the RREF entry rows[r][f].
        let g_rows = systematic
            .iter()
            .map(|&f| {
                let mut row = BitRow::zero(n);
                row.set(f);
                for (r, &p) in pivot_col_of_row.iter().enumerate() {
                    if rows[r].get(f) {
                        row.set(p);
                    }
                }
                row
            })
            .collect();

        Ok(Self {
            n,
            rows: g_rows,
            systematic,
        })
    }

    /// Message length k.
    pub fn k(&self) -> usize {
        self.rows.len()
    }

    /// Codeword length n.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Ascending positions at which the message appears verbatim.
    pub fn systematic_positions(&self) -> &[usize] {
        &self.systematic
    }

    /// Encodes `message` as `c = m·G`.
    pub fn encode(&self, message: &[bool]) -> Result<Vec<bool>> {
        if message.len() != self.rows.len() {
            return Err(Error::Dimension(format!(
                "encode: message length {} does not match k = {}",
                message.len(),
                self.rows.len()
            )));
        }
        let mut acc = BitRow::zero(self.n);
        for (bit, row) in message.iter().zip(&self.rows) {
            if *bit {
                acc.xor_assign(row);
            }
        }
        Ok((0..self.n).map(|j| acc.get(j)).collect())
    }

    /// Reads the message back out of a codeword.
    pub fn extract_message(&self, codeword: &[bool]) -> Vec<bool> {
        self.systematic.iter().map(|&j| codeword[j]).collect()
    }

    /// Dense row `t` of G as booleans (mostly for tests).
    pub fn row_bits(&self, t: usize) -> Vec<bool> {
        (0..self.n).map(|j| self.rows[t].get(j)).collect()
    }
}

/// Derives a generator matrix for `h` (leftmost-column pivoting).
pub fn derive_generator(h: &SparseBinaryMatrix) -> Result<GeneratorMatrix> {
    GeneratorMatrix::derive(h)
}

/// Encodes a message with a generator matrix.
pub fn encode_systematic(g: &GeneratorMatrix, message: &[bool]) -> Result<Vec<bool>> {
    g.encode(message)
}

/// Back-substitution encoder for codes whose parity part is solvable in a
/// forward pass (the dual-diagonal template of repeat-accumulate codes, and
/// block-structured variants of it).
///
/// Construction analyses H once and records a peeling order: repeatedly find
/// a check with exactly one unresolved parity neighbor and solve that bit.
/// For the plain dual diagonal this reproduces `p_i = p_{i−1} ⊕ (systematic
/// neighbors of check i)`. Encoding is then O(edges) per message.
#[derive(Debug, Clone)]
pub struct IraEncoder {
    n: usize,
    k: usize,
    systematic: Vec<usize>,
    /// (check row, parity column solved by that row), in solve order.
    solve_order: Vec<(usize, usize)>,
    /// Row adjacency retained for the substitution pass.
    rows: Vec<Vec<usize>>,
}

impl IraEncoder {
    /// Standard layout: the last `m` columns are the parity part.
    pub fn new(h: &SparseBinaryMatrix) -> Result<Self> {
        if h.rows() >= h.cols() {
            return Err(Error::Structure(
                "parity part cannot cover all columns".into(),
            ));
        }
        let parity: Vec<usize> = (h.cols() - h.rows()..h.cols()).collect();
        Self::with_parity_positions(h, &parity)
    }

    /// General layout: `parity` lists the codeword positions to be solved;
    /// the remaining positions are systematic. Fails with a structure error
    /// if the parity part does not admit forward substitution.
    pub fn with_parity_positions(h: &SparseBinaryMatrix, parity: &[usize]) -> Result<Self> {
        let n = h.cols();
        let m = h.rows();
        if parity.len() != m {
            return Err(Error::Structure(format!(
                "parity set size {} must equal the check count {}",
                parity.len(),
                m
            )));
        }
        let mut is_parity = vec![false; n];
        for &j in parity {
            if j >= n {
                return Err(Error::Parameter(format!(
                    "parity position {} out of range (n = {})",
                    j, n
                )));
            }
            if is_parity[j] {
                return Err(Error::Parameter(format!("duplicate parity position {}", j)));
            }
            is_parity[j] = true;
        }

        // Peel: a check with exactly one unresolved parity neighbor solves it.
        let mut unresolved: Vec<usize> = (0..m)
            .map(|i| h.row(i).iter().filter(|&&j| is_parity[j]).count())
            .collect();
        let mut solved = vec![false; n];
        let mut row_used = vec![false; m];
        let mut queue: std::collections::VecDeque<usize> =
            (0..m).filter(|&i| unresolved[i] == 1).collect();
        let mut solve_order = Vec::with_capacity(m);

        while let Some(i) = queue.pop_front() {
            if row_used[i] || unresolved[i] != 1 {
                continue;
            }
            let &target = h
                .row(i)
                .iter()
                .find(|&&j| is_parity[j] && !solved[j])
                .expect("row with one unresolved parity neighbor");
            row_used[i] = true;
            solved[target] = true;
            solve_order.push((i, target));
            for &i2 in h.col(target) {
                if !row_used[i2] {
                    unresolved[i2] -= 1;
                    if unresolved[i2] == 1 {
                        queue.push_back(i2);
                    }
                }
            }
        }

        if solve_order.len() != m {
            return Err(Error::Structure(
                "parity part is not dual-diagonal (forward substitution got stuck)".into(),
            ));
        }

        let systematic: Vec<usize> = (0..n).filter(|&j| !is_parity[j]).collect();
        Ok(Self {
            n,
            k: n - m,
            systematic,
            solve_order,
            rows: (0..m).map(|i| h.row(i).to_vec()).collect(),
        })
    }

    /// Message length k.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Codeword length n.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Ascending positions carrying the message verbatim.
    pub fn systematic_positions(&self) -> &[usize] {
        &self.systematic
    }

    /// Encodes by forward substitution over the recorded solve order.
    pub fn encode(&self, message: &[bool]) -> Result<Vec<bool>> {
        if message.len() != self.k {
            return Err(Error::Dimension(format!(
                "encode: message length {} does not match k = {}",
                message.len(),
                self.k
            )));
        }
        let mut word = vec![false; self.n];
        for (&j, &bit) in self.systematic.iter().zip(message) {
            word[j] = bit;
        }
        for &(row, target) in &self.solve_order {
            let mut acc = false;
            for &j in &self.rows[row] {
                if j != target {
                    acc ^= word[j];
                }
            }
            word[target] = acc;
        }
        Ok(word)
    }
}

/// Encodes `message` against a matrix whose last `m` columns form the
/// dual-diagonal template, by forward back-substitution.
pub fn encode_ira(h: &SparseBinaryMatrix, message: &[bool]) -> Result<Vec<bool>> {
    IraEncoder::new(h)?.encode(message)
}
