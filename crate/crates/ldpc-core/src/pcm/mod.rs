//! Sparse binary parity-check matrices and their Tanner-graph view.
//!
//! The central type is [`SparseBinaryMatrix`], which stores the matrix as a
//! pair of adjacency lists (row-wise and column-wise) so that both check-node
//! and variable-node neighborhoods are O(degree) to walk. [`BaseMatrix`] is a
//! protograph of circulant shift exponents that expands to a quasi-cyclic
//! matrix, and [`TannerGraph`] adds a dense edge indexing on top of a matrix
//! for use by the message-passing decoders.

mod alist;
mod basefile;
mod cycles;

pub use cycles::{count_short_cycles, girth, CycleCounts};

use crate::error::{Error, Result};

/// A sparse binary matrix with dual adjacency.
///
/// Rows are check nodes, columns are variable nodes. The same edge set is
/// stored twice: `row_adj[i]` lists the columns with a one in row `i`, and
/// `col_adj[j]` lists the rows with a one in column `j`. Both lists are
/// sorted and duplicate-free; the two views are kept transpose-consistent by
/// every constructor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseBinaryMatrix {
    m: usize,
    n: usize,
    row_adj: Vec<Vec<usize>>,
    col_adj: Vec<Vec<usize>>,
}

impl SparseBinaryMatrix {
    /// Builds a matrix from per-row column lists.
    ///
    /// Lists are sorted internally. Out-of-range or duplicate indices are
    /// rejected.
    pub fn from_rows(m: usize, n: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != m {
            return Err(Error::Dimension(format!(
                "expected {} rows, got {}",
                m,
                rows.len()
            )));
        }
        let mut row_adj = rows;
        let mut col_adj = vec![Vec::new(); n];
        for (i, row) in row_adj.iter_mut().enumerate() {
            row.sort_unstable();
            for w in row.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::Format(format!(
                        "duplicate column index {} in row {}",
                        w[0], i
                    )));
                }
            }
            for &j in row.iter() {
                if j >= n {
                    return Err(Error::Format(format!(
                        "column index {} out of range in row {} (n = {})",
                        j, i, n
                    )));
                }
                col_adj[j].push(i);
            }
        }
        // Rows were visited in order, so each col_adj list is already sorted.
        Ok(Self {
            m,
            n,
            row_adj,
            col_adj,
        })
    }

    /// Number of rows (check nodes).
    pub fn rows(&self) -> usize {
        self.m
    }

    /// Number of columns (variable nodes).
    pub fn cols(&self) -> usize {
        self.n
    }

    /// Columns with a one in row `i`, sorted.
    pub fn row(&self, i: usize) -> &[usize] {
        &self.row_adj[i]
    }

    /// Rows with a one in column `j`, sorted.
    pub fn col(&self, j: usize) -> &[usize] {
        &self.col_adj[j]
    }

    /// Iterator over all row adjacency lists.
    pub fn row_iter(&self) -> impl Iterator<Item = &[usize]> {
        self.row_adj.iter().map(|r| r.as_slice())
    }

    /// Total number of ones.
    pub fn edge_count(&self) -> usize {
        self.row_adj.iter().map(|r| r.len()).sum()
    }

    /// Weight of every row.
    pub fn row_weights(&self) -> Vec<usize> {
        self.row_adj.iter().map(|r| r.len()).collect()
    }

    /// Weight of every column.
    pub fn col_weights(&self) -> Vec<usize> {
        self.col_adj.iter().map(|c| c.len()).collect()
    }

    /// True if entry (i, j) is one.
    pub fn has_entry(&self, i: usize, j: usize) -> bool {
        self.row_adj[i].binary_search(&j).is_ok()
    }

    /// Computes the syndrome `H·cᵀ` over GF(2).
    ///
    /// Component `i` is the XOR of `word` over the ones of row `i`; the
    /// all-zero result means `word` is a codeword.
    pub fn syndrome(&self, word: &[bool]) -> Result<Vec<bool>> {
        if word.len() != self.n {
            return Err(Error::Dimension(format!(
                "syndrome: word length {} does not match n = {}",
                word.len(),
                self.n
            )));
        }
        Ok(self
            .row_adj
            .iter()
            .map(|row| row.iter().fold(false, |acc, &j| acc ^ word[j]))
            .collect())
    }

    /// True if `word` satisfies every parity check.
    pub fn is_codeword(&self, word: &[bool]) -> bool {
        word.len() == self.n
            && self
                .row_adj
                .iter()
                .all(|row| !row.iter().fold(false, |acc, &j| acc ^ word[j]))
    }

    /// A stable 64-bit fingerprint of the matrix content (FNV-1a over the
    /// dimensions and row adjacency).
    pub fn fingerprint(&self) -> u64 {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let mut eat = |v: u64| {
            for b in v.to_le_bytes() {
                h ^= b as u64;
                h = h.wrapping_mul(0x0000_0100_0000_01b3);
            }
        };
        eat(self.m as u64);
        eat(self.n as u64);
        for row in &self.row_adj {
            eat(row.len() as u64);
            for &j in row {
                eat(j as u64);
            }
        }
        h
    }
}

/// Protograph of circulant shift exponents with lift size `s`.
///
/// Entry −1 denotes the `s×s` all-zero block; an entry `e ≥ 0` denotes the
/// `s×s` identity with every row right-cyclic-shifted by `e`. Expansion
/// produces an `mb·s × nb·s` [`SparseBinaryMatrix`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseMatrix {
    mb: usize,
    nb: usize,
    s: usize,
    entries: Vec<Vec<i32>>,
}

impl BaseMatrix {
    /// Builds a base matrix, validating every entry against the lift size.
    pub fn new(mb: usize, nb: usize, s: usize, entries: Vec<Vec<i32>>) -> Result<Self> {
        if s == 0 {
            return Err(Error::Parameter("lift size s must be positive".into()));
        }
        if entries.len() != mb {
            return Err(Error::Dimension(format!(
                "expected {} base rows, got {}",
                mb,
                entries.len()
            )));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != nb {
                return Err(Error::Dimension(format!(
                    "base row {} has {} entries, expected {}",
                    i,
                    row.len(),
                    nb
                )));
            }
            for &e in row {
                if e < -1 || e >= s as i32 {
                    return Err(Error::Format(format!(
                        "base entry {} out of range [-1, {}) in row {}",
                        e, s, i
                    )));
                }
            }
        }
        Ok(Self { mb, nb, s, entries })
    }

    /// Base row count.
    pub fn base_rows(&self) -> usize {
        self.mb
    }

    /// Base column count.
    pub fn base_cols(&self) -> usize {
        self.nb
    }

    /// Lift size (circulant dimension).
    pub fn lift(&self) -> usize {
        self.s
    }

    /// Shift exponent at base position (i, j); −1 is the null block.
    pub fn entry(&self, i: usize, j: usize) -> i32 {
        self.entries[i][j]
    }

    /// Grid of shift exponents.
    pub fn entries(&self) -> &[Vec<i32>] {
        &self.entries
    }

    /// Replaces the entry at base position (i, j).
    pub fn set_entry(&mut self, i: usize, j: usize, e: i32) -> Result<()> {
        if e < -1 || e >= self.s as i32 {
            return Err(Error::Format(format!(
                "base entry {} out of range [-1, {})",
                e, self.s
            )));
        }
        self.entries[i][j] = e;
        Ok(())
    }

    /// Expands the protograph to its quasi-cyclic binary matrix.
    ///
    /// Block (i, j) with entry `e ≥ 0` places, for every `r` in `0..s`, a one
    /// at row `i·s + r`, column `j·s + (r + e) mod s`.
    pub fn expand(&self) -> SparseBinaryMatrix {
        let s = self.s;
        let m = self.mb * s;
        let n = self.nb * s;
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); m];
        for (bi, row) in self.entries.iter().enumerate() {
            for (bj, &e) in row.iter().enumerate() {
                if e < 0 {
                    continue;
                }
                let e = e as usize;
                for r in 0..s {
                    rows[bi * s + r].push(bj * s + (r + e) % s);
                }
            }
        }
        SparseBinaryMatrix::from_rows(m, n, rows)
            .expect("expansion of a validated base matrix is always well formed")
    }
}

/// Expands a base matrix to its quasi-cyclic parity-check matrix.
pub fn expand_base(b: &BaseMatrix) -> SparseBinaryMatrix {
    b.expand()
}

/// Dense edge indexing over a [`SparseBinaryMatrix`].
///
/// Edges are numbered check-major: the edges of check `i` occupy the
/// contiguous id range `check_range(i)`, ordered by ascending variable
/// index. Per-variable edge id lists are also kept so both directions of
/// message passing can iterate cheaply.
#[derive(Debug, Clone)]
pub struct TannerGraph {
    n_checks: usize,
    n_vars: usize,
    /// Edge id -> variable index.
    edge_var: Vec<u32>,
    /// Edge id -> check index.
    edge_check: Vec<u32>,
    /// Check i owns edge ids check_start[i]..check_start[i+1].
    check_start: Vec<u32>,
    /// Variable j participates in edge ids var_edges[var_start[j]..var_start[j+1]].
    var_start: Vec<u32>,
    var_edges: Vec<u32>,
}

impl TannerGraph {
    /// Builds the edge indexing for `h`.
    pub fn new(h: &SparseBinaryMatrix) -> Self {
        let n_checks = h.rows();
        let n_vars = h.cols();
        let ne = h.edge_count();
        let mut edge_var = Vec::with_capacity(ne);
        let mut edge_check = Vec::with_capacity(ne);
        let mut check_start = Vec::with_capacity(n_checks + 1);
        check_start.push(0u32);
        for i in 0..n_checks {
            for &j in h.row(i) {
                edge_var.push(j as u32);
                edge_check.push(i as u32);
            }
            check_start.push(edge_var.len() as u32);
        }
        let mut var_start = vec![0u32; n_vars + 1];
        for &j in &edge_var {
            var_start[j as usize + 1] += 1;
        }
        for j in 0..n_vars {
            var_start[j + 1] += var_start[j];
        }
        let mut fill = var_start.clone();
        let mut var_edges = vec![0u32; ne];
        for (e, &j) in edge_var.iter().enumerate() {
            var_edges[fill[j as usize] as usize] = e as u32;
            fill[j as usize] += 1;
        }
        Self {
            n_checks,
            n_vars,
            edge_var,
            edge_check,
            check_start,
            var_start,
            var_edges,
        }
    }

    /// Number of check nodes.
    pub fn checks(&self) -> usize {
        self.n_checks
    }

    /// Number of variable nodes.
    pub fn vars(&self) -> usize {
        self.n_vars
    }

    /// Number of edges (ids are dense in `0..edges()`).
    pub fn edges(&self) -> usize {
        self.edge_var.len()
    }

    /// Variable endpoint of edge `e`.
    pub fn var_of(&self, e: usize) -> usize {
        self.edge_var[e] as usize
    }

    /// Check endpoint of edge `e`.
    pub fn check_of(&self, e: usize) -> usize {
        self.edge_check[e] as usize
    }

    /// Edge id range owned by check `i`.
    pub fn check_range(&self, i: usize) -> std::ops::Range<usize> {
        self.check_start[i] as usize..self.check_start[i + 1] as usize
    }

    /// Edge ids incident to variable `j`.
    pub fn var_edge_ids(&self, j: usize) -> &[u32] {
        &self.var_edges[self.var_start[j] as usize..self.var_start[j + 1] as usize]
    }

    /// Degree of check `i`.
    pub fn check_degree(&self, i: usize) -> usize {
        (self.check_start[i + 1] - self.check_start[i]) as usize
    }

    /// Degree of variable `j`.
    pub fn var_degree(&self, j: usize) -> usize {
        (self.var_start[j + 1] - self.var_start[j]) as usize
    }

    /// True if the hard-decision word satisfies every check.
    pub fn syndrome_ok(&self, bits: &[bool]) -> bool {
        for i in 0..self.n_checks {
            let mut acc = false;
            for e in self.check_range(i) {
                acc ^= bits[self.edge_var[e] as usize];
            }
            if acc {
                return false;
            }
        }
        true
    }
}

/// Computes the syndrome of `word` against `h` (free-function form).
pub fn syndrome(h: &SparseBinaryMatrix, word: &[bool]) -> Result<Vec<bool>> {
    h.syndrome(word)
}

pub use alist::{load_alist, save_alist};
pub use basefile::{load_base_matrix, save_base_matrix};
