//! Exact girth computation and short-cycle counting on the Tanner graph.
//!
//! Both routines work on a unified node space: variables are nodes
//! `0..n`, checks are nodes `n..n+m`. All cycles in a bipartite graph have
//! even length ≥ 4.

use super::SparseBinaryMatrix;
use crate::error::{Error, Result};

/// Adjacency over the unified node space.
fn unified_adj(h: &SparseBinaryMatrix) -> Vec<Vec<usize>> {
    let n = h.cols();
    let m = h.rows();
    let mut adj: Vec<Vec<usize>> = (0..n)
        .map(|j| h.col(j).iter().map(|&i| n + i).collect())
        .collect();
    adj.extend((0..m).map(|i| h.row(i).to_vec()));
    adj
}

/// Length of the shortest cycle in the Tanner graph of `h`, or `None` if the
/// graph is acyclic.
///
/// Exact: one breadth-first search per node; the first non-tree edge seen
/// from a root closes a shortest cycle through that root, and the minimum
/// over roots is the girth.
pub fn girth(h: &SparseBinaryMatrix) -> Option<usize> {
    let adj = unified_adj(h);
    let nn = adj.len();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; nn];
    let mut parent = vec![usize::MAX; nn];
    let mut queue = std::collections::VecDeque::new();

    for root in 0..nn {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        queue.clear();
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            // Nodes this deep cannot close anything shorter than `best`.
            if 2 * dist[u] + 2 > best {
                break;
            }
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if w != parent[u] {
                    best = best.min(dist[u] + dist[w] + 1);
                    if best == 4 {
                        return Some(4);
                    }
                }
            }
        }
    }
    if best == usize::MAX {
        None
    } else {
        Some(best)
    }
}

/// Per-node counts of distinct short cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleCounts {
    max_len: usize,
    /// `check_by_len[l][i]` = cycles of length `4 + 2l` through check `i`.
    check_by_len: Vec<Vec<usize>>,
    /// `var_by_len[l][j]` = cycles of length `4 + 2l` through variable `j`.
    var_by_len: Vec<Vec<usize>>,
}

impl CycleCounts {
    /// Maximum cycle length counted.
    pub fn max_len(&self) -> usize {
        self.max_len
    }

    /// Number of cycles of length ≤ `max_len` through check `i`.
    pub fn check_count(&self, i: usize) -> usize {
        self.check_by_len.iter().map(|v| v[i]).sum()
    }

    /// Number of cycles of length ≤ `max_len` through variable `j`.
    pub fn var_count(&self, j: usize) -> usize {
        self.var_by_len.iter().map(|v| v[j]).sum()
    }

    /// Cycles of exactly `len` through check `i` (0 if `len` not counted).
    pub fn check_count_at(&self, i: usize, len: usize) -> usize {
        if len < 4 || !len.is_multiple_of(2) || len > self.max_len {
            return 0;
        }
        self.check_by_len[(len - 4) / 2][i]
    }

    /// Cycles of exactly `len` through variable `j`.
    pub fn var_count_at(&self, j: usize, len: usize) -> usize {
        if len < 4 || !len.is_multiple_of(2) || len > self.max_len {
            return 0;
        }
        self.var_by_len[(len - 4) / 2][j]
    }

    /// Shortest length with at least one cycle, if any was found within the
    /// counting window. Coincides with the girth when `max_len` ≥ girth.
    pub fn shortest_cycle_len(&self) -> Option<usize> {
        for (l, counts) in self.check_by_len.iter().enumerate() {
            if counts.iter().any(|&c| c > 0) {
                return Some(4 + 2 * l);
            }
        }
        None
    }

    /// Total number of distinct cycles of length ≤ `max_len`.
    pub fn total(&self) -> usize {
        // Every cycle of length 2k passes through exactly k checks.
        self.check_by_len
            .iter()
            .enumerate()
            .map(|(l, counts)| counts.iter().sum::<usize>() / (l + 2))
            .sum()
    }
}

/// Counts, for every check node and variable node, the distinct cycles of
/// length ≤ `max_len` passing through it. Supported windows: 4, 6 and 8.
///
/// Cycles are enumerated once each by rooting the search at the cycle's
/// minimum node and fixing the traversal direction, then credited to every
/// node they visit.
pub fn count_short_cycles(h: &SparseBinaryMatrix, max_len: usize) -> Result<CycleCounts> {
    if !matches!(max_len, 4 | 6 | 8) {
        return Err(Error::Parameter(format!(
            "unsupported max cycle length {} (must be 4, 6 or 8)",
            max_len
        )));
    }
    let n = h.cols();
    let m = h.rows();
    let adj = unified_adj(h);
    let nn = adj.len();
    let levels = (max_len - 4) / 2 + 1;
    let mut check_by_len = vec![vec![0usize; m]; levels];
    let mut var_by_len = vec![vec![0usize; n]; levels];

    let mut stack: Vec<usize> = Vec::with_capacity(max_len);
    let mut in_path = vec![false; nn];

    for root in 0..nn {
        stack.clear();
        stack.push(root);
        in_path[root] = true;
        dfs_cycles(
            &adj,
            root,
            max_len,
            &mut stack,
            &mut in_path,
            &mut |path: &[usize]| {
                let l = (path.len() - 4) / 2;
                for &v in path {
                    if v < n {
                        var_by_len[l][v] += 1;
                    } else {
                        check_by_len[l][v - n] += 1;
                    }
                }
            },
        );
        in_path[root] = false;
    }

    Ok(CycleCounts {
        max_len,
        check_by_len,
        var_by_len,
    })
}

/// Depth-first enumeration of simple cycles rooted at `root`.
///
/// Only nodes larger than the root may appear on the path, so each cycle is
/// found exactly at its minimum node; requiring `path[1] < path.last()` on
/// closure picks one of the two traversal directions.
fn dfs_cycles(
    adj: &[Vec<usize>],
    root: usize,
    max_len: usize,
    stack: &mut Vec<usize>,
    in_path: &mut [bool],
    found: &mut impl FnMut(&[usize]),
) {
    let u = *stack.last().unwrap();
    for &w in &adj[u] {
        if w == root {
            if stack.len() >= 4 && stack[1] < u {
                found(stack);
            }
            continue;
        }
        if w > root && !in_path[w] && stack.len() < max_len {
            stack.push(w);
            in_path[w] = true;
            dfs_cycles(adj, root, max_len, stack, in_path, found);
            in_path[w] = false;
            stack.pop();
        }
    }
}
