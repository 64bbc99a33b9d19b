//! Progressive edge growth.
//!
//! Edges are placed one variable node at a time. Each new edge goes to the
//! check node at maximum depth in the BFS subtree expanded from the variable
//! (unreachable checks count as infinitely deep), so the shortest cycle the
//! edge can close is as long as possible. Ties are broken toward the check
//! with the lowest current degree, then by a seeded draw, which keeps the
//! construction fully reproducible.

use super::DegreeSequence;
use crate::error::{Error, Result};
use crate::pcm::{BaseMatrix, SparseBinaryMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::VecDeque;

/// Incrementally grown bipartite graph.
pub(crate) struct PegGrowth {
    m: usize,
    check_adj: Vec<Vec<usize>>,
    var_adj: Vec<Vec<usize>>,
    rng: ChaCha8Rng,
    // BFS scratch.
    check_dist: Vec<usize>,
    var_dist: Vec<usize>,
}

impl PegGrowth {
    pub(crate) fn new(m: usize, n: usize, seed: u64) -> Self {
        Self {
            m,
            check_adj: vec![Vec::new(); m],
            var_adj: vec![Vec::new(); n],
            rng: ChaCha8Rng::seed_from_u64(seed),
            check_dist: vec![usize::MAX; m],
            var_dist: vec![usize::MAX; n],
        }
    }

    pub(crate) fn add_edge(&mut self, check: usize, var: usize) {
        self.check_adj[check].push(var);
        self.var_adj[var].push(check);
    }

    fn has_edge(&self, check: usize, var: usize) -> bool {
        self.var_adj[var].contains(&check)
    }

    /// BFS from variable `root`, filling distance arrays (usize::MAX means
    /// unreached).
    fn bfs_from(&mut self, root: usize) {
        self.check_dist.iter_mut().for_each(|d| *d = usize::MAX);
        self.var_dist.iter_mut().for_each(|d| *d = usize::MAX);
        self.var_dist[root] = 0;
        let mut queue: VecDeque<(usize, bool)> = VecDeque::new(); // (node, is_check)
        queue.push_back((root, false));
        while let Some((u, is_check)) = queue.pop_front() {
            if is_check {
                let d = self.check_dist[u];
                for &v in &self.check_adj[u] {
                    if self.var_dist[v] == usize::MAX {
                        self.var_dist[v] = d + 1;
                        queue.push_back((v, false));
                    }
                }
            } else {
                let d = self.var_dist[u];
                for &c in &self.var_adj[u] {
                    if self.check_dist[c] == usize::MAX {
                        self.check_dist[c] = d + 1;
                        queue.push_back((c, true));
                    }
                }
            }
        }
    }

    /// Picks the deepest eligible check for a new edge from `var`.
    ///
    /// Checks already adjacent to `var` are ineligible. Unreached checks are
    /// preferred (the edge closes no cycle at all); otherwise the maximum
    /// finite distance wins. Lowest current degree breaks depth ties, a
    /// seeded draw breaks the rest.
    fn select_check(&mut self, var: usize, first_edge: bool) -> Result<usize> {
        let mut candidates: Vec<usize> = Vec::new();
        if first_edge {
            candidates.extend(0..self.m);
        } else {
            self.bfs_from(var);
            let mut best_depth = 0usize; // 0 = none, usize::MAX = unreached class
            for c in 0..self.m {
                if self.has_edge(c, var) {
                    continue;
                }
                let depth = if self.check_dist[c] == usize::MAX {
                    usize::MAX
                } else {
                    self.check_dist[c]
                };
                match depth.cmp(&best_depth) {
                    std::cmp::Ordering::Greater => {
                        best_depth = depth;
                        candidates.clear();
                        candidates.push(c);
                    }
                    std::cmp::Ordering::Equal => candidates.push(c),
                    std::cmp::Ordering::Less => {}
                }
            }
        }
        if candidates.is_empty() {
            return Err(Error::Parameter(format!(
                "no eligible check node for variable {}",
                var
            )));
        }
        let min_deg = candidates
            .iter()
            .map(|&c| self.check_adj[c].len())
            .min()
            .unwrap();
        candidates.retain(|&c| self.check_adj[c].len() == min_deg);
        let pick = self.rng.random_range(0..candidates.len());
        Ok(candidates[pick])
    }

    /// Grows all edges of variable `var`.
    pub(crate) fn grow_var(&mut self, var: usize, degree: usize) -> Result<()> {
        for t in 0..degree {
            let c = self.select_check(var, t == 0 && self.var_adj[var].is_empty())?;
            self.add_edge(c, var);
        }
        Ok(())
    }

    pub(crate) fn into_matrix(self, n: usize) -> SparseBinaryMatrix {
        SparseBinaryMatrix::from_rows(self.m, n, self.check_adj)
            .expect("PEG growth never creates duplicate or out-of-range edges")
    }
}

/// Constructs an m×n parity-check matrix by progressive edge growth.
///
/// The output satisfies `degrees` exactly and is identical for identical
/// seeds.
pub fn peg_construct(
    m: usize,
    n: usize,
    degrees: &DegreeSequence,
    seed: u64,
) -> Result<SparseBinaryMatrix> {
    if m >= n {
        return Err(Error::Parameter(format!(
            "need m < n for positive rate (got m = {}, n = {})",
            m, n
        )));
    }
    if degrees.len() != n {
        return Err(Error::Parameter(format!(
            "degree sequence covers {} variables, expected {}",
            degrees.len(),
            n
        )));
    }
    if let Some((j, &d)) = degrees.as_slice().iter().enumerate().find(|(_, &d)| d > m) {
        return Err(Error::Parameter(format!(
            "variable {} requests degree {} > m = {}",
            j, d, m
        )));
    }
    let mut growth = PegGrowth::new(m, n, seed);
    for j in 0..n {
        growth.grow_var(j, degrees.degree(j))?;
    }
    Ok(growth.into_matrix(n))
}

// ---------------------------------------------------------------------------
// Quasi-cyclic PEG: place circulant blocks greedily on the lifted graph.
// ---------------------------------------------------------------------------

/// Lifted adjacency used while choosing block placements and shifts.
pub(crate) struct LiftedGraph {
    s: usize,
    check_adj: Vec<Vec<usize>>, // check bit -> var bits
    var_adj: Vec<Vec<usize>>,
}

impl LiftedGraph {
    pub(crate) fn new(mb: usize, nb: usize, s: usize) -> Self {
        Self {
            s,
            check_adj: vec![Vec::new(); mb * s],
            var_adj: vec![Vec::new(); nb * s],
        }
    }

    pub(crate) fn add_block(&mut self, bi: usize, bj: usize, shift: usize) {
        let s = self.s;
        for r in 0..s {
            let c = bi * s + r;
            let v = bj * s + (r + shift) % s;
            self.check_adj[c].push(v);
            self.var_adj[v].push(c);
        }
    }

    fn remove_last_block(&mut self, bi: usize, bj: usize, shift: usize) {
        let s = self.s;
        for r in 0..s {
            let c = bi * s + r;
            let v = bj * s + (r + shift) % s;
            self.check_adj[c].pop();
            self.var_adj[v].pop();
        }
    }

    /// Shortest cycle through the representative new edge
    /// (check `bi·s`, var `bj·s + shift`), assuming the block is present.
    /// By the cyclic symmetry of the lift this is the shortest cycle through
    /// any edge of the block. Returns `usize::MAX` if no cycle passes.
    fn cycle_through_block(&self, bi: usize, bj: usize, shift: usize, cap: usize) -> usize {
        let s = self.s;
        let c0 = bi * s;
        let v0 = bj * s + shift % s;
        // Shortest path v0 -> c0 avoiding the direct edge, plus that edge.
        let mut var_dist = vec![u32::MAX; self.var_adj.len()];
        let mut check_dist = vec![u32::MAX; self.check_adj.len()];
        let mut queue = VecDeque::new();
        var_dist[v0] = 0;
        queue.push_back((v0, false));
        while let Some((u, is_check)) = queue.pop_front() {
            if is_check {
                let d = check_dist[u];
                if d as usize + 1 >= cap {
                    continue;
                }
                for &v in &self.check_adj[u] {
                    if var_dist[v] == u32::MAX {
                        var_dist[v] = d + 1;
                        queue.push_back((v, false));
                    }
                }
            } else {
                let d = var_dist[u];
                if d as usize + 1 >= cap {
                    continue;
                }
                for &c in &self.var_adj[u] {
                    if c == c0 && u == v0 && d == 0 {
                        continue; // skip the direct edge itself
                    }
                    if check_dist[c] == u32::MAX {
                        check_dist[c] = d + 1;
                        if c == c0 {
                            return d as usize + 2; // path length + closing edge
                        }
                        queue.push_back((c, true));
                    }
                }
            }
        }
        usize::MAX
    }
}

/// Constructs a quasi-cyclic base matrix by PEG-style greedy placement.
///
/// Block columns are processed in order; every column receives
/// `block_col_degrees[bj]` circulant blocks. Each placement scans all
/// (row, shift) candidates among unoccupied rows and keeps those maximizing
/// the shortest cycle through the new block on the lifted graph, then
/// prefers the lowest-degree block row, then draws from the seeded RNG.
pub fn qc_peg_construct(
    mb: usize,
    nb: usize,
    s: usize,
    block_col_degrees: &[usize],
    seed: u64,
) -> Result<BaseMatrix> {
    if block_col_degrees.len() != nb {
        return Err(Error::Parameter(format!(
            "degree list covers {} block columns, expected {}",
            block_col_degrees.len(),
            nb
        )));
    }
    if let Some(&d) = block_col_degrees.iter().find(|&&d| d > mb) {
        return Err(Error::Parameter(format!(
            "block column degree {} exceeds mb = {}",
            d, mb
        )));
    }
    let mut base = BaseMatrix::new(mb, nb, s, vec![vec![-1; nb]; mb])?;
    let mut lifted = LiftedGraph::new(mb, nb, s);
    let mut row_deg = vec![0usize; mb];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    for (bj, &degree) in block_col_degrees.iter().enumerate() {
        for _ in 0..degree {
            place_block_greedy(&mut base, &mut lifted, &mut row_deg, &mut rng, bj, None)?;
        }
    }
    Ok(base)
}

/// One greedy placement into block column `bj`. `allowed_rows` restricts the
/// candidate block rows (used by the root-check construction).
pub(crate) fn place_block_greedy(
    base: &mut BaseMatrix,
    lifted: &mut LiftedGraph,
    row_deg: &mut [usize],
    rng: &mut ChaCha8Rng,
    bj: usize,
    allowed_rows: Option<&[usize]>,
) -> Result<()> {
    let mb = base.base_rows();
    let s = base.lift();
    let rows: Vec<usize> = match allowed_rows {
        Some(rs) => rs
            .iter()
            .copied()
            .filter(|&r| base.entry(r, bj) < 0)
            .collect(),
        None => (0..mb).filter(|&r| base.entry(r, bj) < 0).collect(),
    };
    if rows.is_empty() {
        return Err(Error::Parameter(format!(
            "no free block row left in block column {}",
            bj
        )));
    }

    let mut best: Vec<(usize, usize)> = Vec::new();
    let mut best_len = 0usize;
    for &r in &rows {
        for shift in 0..s {
            lifted.add_block(r, bj, shift);
            let len = lifted.cycle_through_block(r, bj, shift, 16);
            lifted.remove_last_block(r, bj, shift);
            match len.cmp(&best_len) {
                std::cmp::Ordering::Greater => {
                    best_len = len;
                    best.clear();
                    best.push((r, shift));
                }
                std::cmp::Ordering::Equal => best.push((r, shift)),
                std::cmp::Ordering::Less => {}
            }
        }
    }

    let min_deg = best.iter().map(|&(r, _)| row_deg[r]).min().unwrap();
    best.retain(|&(r, _)| row_deg[r] == min_deg);
    let (r, shift) = best[rng.random_range(0..best.len())];
    base.set_entry(r, bj, shift as i32)?;
    lifted.add_block(r, bj, shift);
    row_deg[r] += 1;
    Ok(())
}
