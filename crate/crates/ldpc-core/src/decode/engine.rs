//! The message-passing engine shared by every variant and schedule.
//!
//! One [`Decoder`] owns all per-edge workspace and may be reused across
//! frames; it is bound to a [`TannerGraph`] and a [`DecoderConfig`]. The
//! reweighting factors rho are resolved to a per-check vector once at
//! construction (all ones for SPA and the min-sum family), and the check
//! update rule to either the tanh-domain or the min-sum kernel, so the
//! documented parameter reductions share the exact arithmetic path.

use super::{DecodeResult, DecoderConfig, Schedule, Variant};
use crate::error::Result;
use crate::pcm::TannerGraph;
use crate::LLR_MAX;
use std::collections::BinaryHeap;

/// Snapshot handed to trace observers after every iteration-equivalent.
/// Iteration 0 is the channel state before any message passing.
#[derive(Debug)]
pub struct IterationView<'a> {
    /// Iteration-equivalent index (0 = channel hard decisions).
    pub iteration: usize,
    /// Current beliefs, one per variable node.
    pub beliefs: &'a [f64],
    /// Current hard decisions (belief < 0 means bit 1).
    pub hard: &'a [bool],
    /// Current check-to-variable messages, one per edge.
    pub c2v: &'a [f64],
}

#[derive(Debug, Clone, Copy)]
enum CheckRule {
    Spa,
    MinSum { alpha: f64, beta: f64 },
}

impl CheckRule {
    /// Writes, for every position t, the update over `inputs` excluding
    /// index t. `pre` is scratch of length inputs.len() + 1.
    fn outputs(&self, inputs: &[f64], out: &mut [f64], pre: &mut Vec<f64>) {
        match *self {
            CheckRule::Spa => {
                let d = inputs.len();
                pre.clear();
                pre.push(1.0);
                let mut min1 = f64::INFINITY;
                let mut min2 = f64::INFINITY;
                let mut min_idx = 0usize;
                for (t, &x) in inputs.iter().enumerate() {
                    let p = pre[t] * (x / 2.0).tanh();
                    pre.push(p);
                    let a = x.abs();
                    if a < min1 {
                        min2 = min1;
                        min1 = a;
                        min_idx = t;
                    } else if a < min2 {
                        min2 = a;
                    }
                }
                let mut suffix = 1.0;
                for t in (0..d).rev() {
                    let prod: f64 = pre[t] * suffix;
                    // The exact update never exceeds the smallest extrinsic
                    // magnitude; cap away tanh/atanh round-trip drift.
                    let bound = if t == min_idx { min2 } else { min1 };
                    out[t] = (2.0 * prod.atanh())
                        .clamp(-LLR_MAX, LLR_MAX)
                        .clamp(-bound, bound);
                    suffix *= (inputs[t] / 2.0).tanh();
                }
            }
            CheckRule::MinSum { alpha, beta } => {
                let mut negatives = 0usize;
                let mut min1 = f64::INFINITY;
                let mut min2 = f64::INFINITY;
                let mut min_idx = 0usize;
                for (t, &x) in inputs.iter().enumerate() {
                    if x < 0.0 {
                        negatives += 1;
                    }
                    let a = x.abs();
                    if a < min1 {
                        min2 = min1;
                        min1 = a;
                        min_idx = t;
                    } else if a < min2 {
                        min2 = a;
                    }
                }
                for (t, &x) in inputs.iter().enumerate() {
                    let base = if t == min_idx { min2 } else { min1 };
                    let mag = (base / alpha - beta).max(0.0);
                    let neg = (negatives - usize::from(x < 0.0)) % 2 == 1;
                    out[t] = if neg { -mag } else { mag };
                }
            }
        }
    }
}

/// Max-heap entry for the dynamic schedules; ties broken toward the lower
/// id so scheduling is reproducible across platforms.
#[derive(Debug, PartialEq)]
struct HeapItem {
    res: f64,
    id: u32,
    version: u32,
}

impl Eq for HeapItem {}

impl PartialOrd for HeapItem {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HeapItem {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.res
            .total_cmp(&other.res)
            .then_with(|| other.id.cmp(&self.id))
    }
}

/// A reusable decoder bound to one Tanner graph and configuration.
pub struct Decoder<'g> {
    graph: &'g TannerGraph,
    cfg: DecoderConfig,
    rule: CheckRule,
    rho: Vec<f64>,
    // Message workspace (per edge).
    v2c: Vec<f64>,
    c2v: Vec<f64>,
    cand: Vec<f64>,
    res: Vec<f64>,
    // Per-variable state.
    beliefs: Vec<f64>,
    hard: Vec<bool>,
    // Per-check gather/scatter buffers.
    in_buf: Vec<f64>,
    out_buf: Vec<f64>,
    pre_buf: Vec<f64>,
    // Dynamic-schedule bookkeeping.
    heap: BinaryHeap<HeapItem>,
    version: Vec<u32>,
    check_res: Vec<f64>,
}

impl<'g> Decoder<'g> {
    /// Validates the configuration against the graph and allocates the
    /// workspace.
    pub fn new(graph: &'g TannerGraph, cfg: DecoderConfig) -> Result<Self> {
        cfg.validate(graph.checks())?;
        let rule = match &cfg.variant {
            Variant::Spa | Variant::Urw { .. } | Variant::Vfap { .. } => CheckRule::Spa,
            Variant::MinSum => CheckRule::MinSum {
                alpha: 1.0,
                beta: 0.0,
            },
            Variant::NormalizedMinSum { alpha } => CheckRule::MinSum {
                alpha: *alpha,
                beta: 0.0,
            },
            Variant::OffsetMinSum { beta } => CheckRule::MinSum {
                alpha: 1.0,
                beta: *beta,
            },
        };
        let rho = match &cfg.variant {
            Variant::Urw { rho } => vec![*rho; graph.checks()],
            Variant::Vfap { weights } => weights.clone(),
            _ => vec![1.0; graph.checks()],
        };
        let ne = graph.edges();
        let max_deg = (0..graph.checks())
            .map(|i| graph.check_degree(i))
            .max()
            .unwrap_or(0);
        Ok(Self {
            graph,
            cfg,
            rule,
            rho,
            v2c: vec![0.0; ne],
            c2v: vec![0.0; ne],
            cand: vec![0.0; ne],
            res: vec![0.0; ne],
            beliefs: vec![0.0; graph.vars()],
            hard: vec![false; graph.vars()],
            in_buf: vec![0.0; max_deg],
            out_buf: vec![0.0; max_deg],
            pre_buf: Vec::with_capacity(max_deg + 1),
            heap: BinaryHeap::new(),
            version: Vec::new(),
            check_res: Vec::new(),
        })
    }

    /// The configuration this decoder runs.
    pub fn config(&self) -> &DecoderConfig {
        &self.cfg
    }

    /// Decodes one frame of channel LLRs.
    pub fn decode(&mut self, llr: &[f64]) -> Result<DecodeResult> {
        self.decode_traced(llr, &mut |_: &IterationView| {})
    }

    /// Decodes while reporting the state after every iteration-equivalent
    /// (including iteration 0) to `observer`. If the decoder reaches a fixed
    /// point early, the remaining iterations are reported with the frozen
    /// state.
    pub fn decode_traced(
        &mut self,
        llr: &[f64],
        observer: &mut dyn FnMut(&IterationView),
    ) -> Result<DecodeResult> {
        if llr.len() != self.graph.vars() {
            return Err(crate::error::Error::Dimension(format!(
                "decode: {} LLRs for a code with n = {}",
                llr.len(),
                self.graph.vars()
            )));
        }
        match self.cfg.schedule {
            Schedule::Flooding => self.run_flooding(llr, observer),
            Schedule::Layered => self.run_layered(llr, observer),
            Schedule::ResidualBp => self.run_dynamic(llr, false, observer),
            Schedule::NodeWise => self.run_dynamic(llr, true, observer),
        }
    }

    /// Channel-state initialization shared by all schedules: beliefs are the
    /// raw LLRs, all check messages zero.
    fn init_channel_state(&mut self, llr: &[f64]) {
        self.c2v.iter_mut().for_each(|m| *m = 0.0);
        for ((b, h), &l) in self.beliefs.iter_mut().zip(&mut self.hard).zip(llr) {
            *b = l;
            *h = l < 0.0;
        }
    }

    fn emit(&self, iteration: usize, observer: &mut dyn FnMut(&IterationView)) {
        observer(&IterationView {
            iteration,
            beliefs: &self.beliefs,
            hard: &self.hard,
            c2v: &self.c2v,
        });
    }

    fn finish(&self, iterations_used: usize) -> DecodeResult {
        let mut weight = 0usize;
        for i in 0..self.graph.checks() {
            let mut acc = false;
            for e in self.graph.check_range(i) {
                acc ^= self.hard[self.graph.var_of(e)];
            }
            if acc {
                weight += 1;
            }
        }
        DecodeResult {
            bits: self.hard.clone(),
            converged: weight == 0,
            iterations_used,
            syndrome_weight: weight,
        }
    }

    fn run_flooding(
        &mut self,
        llr: &[f64],
        observer: &mut dyn FnMut(&IterationView),
    ) -> Result<DecodeResult> {
        self.init_channel_state(llr);
        for e in 0..self.graph.edges() {
            self.v2c[e] = llr[self.graph.var_of(e)];
        }
        self.emit(0, observer);
        if self.cfg.stop_on_syndrome && self.graph.syndrome_ok(&self.hard) {
            return Ok(self.finish(0));
        }

        for iter in 1..=self.cfg.max_iters {
            // Check pass: all c2v from the previous iteration's v2c.
            for i in 0..self.graph.checks() {
                let range = self.graph.check_range(i);
                let d = range.len();
                for (t, e) in range.clone().enumerate() {
                    self.in_buf[t] = self.v2c[e];
                }
                self.rule
                    .outputs(&self.in_buf[..d], &mut self.out_buf[..d], &mut self.pre_buf);
                for (t, e) in range.enumerate() {
                    self.c2v[e] = self.out_buf[t];
                }
            }
            // Variable pass: beliefs and extrinsic v2c.
            for (j, &llr_j) in llr.iter().enumerate() {
                let mut b = llr_j;
                for &e in self.graph.var_edge_ids(j) {
                    let e = e as usize;
                    b += self.rho[self.graph.check_of(e)] * self.c2v[e];
                }
                self.beliefs[j] = b;
                self.hard[j] = b < 0.0;
                for &e in self.graph.var_edge_ids(j) {
                    let e = e as usize;
                    self.v2c[e] = b - self.rho[self.graph.check_of(e)] * self.c2v[e];
                }
            }
            self.emit(iter, observer);
            if self.cfg.stop_on_syndrome && self.graph.syndrome_ok(&self.hard) {
                return Ok(self.finish(iter));
            }
        }
        Ok(self.finish(self.cfg.max_iters))
    }

    fn run_layered(
        &mut self,
        llr: &[f64],
        observer: &mut dyn FnMut(&IterationView),
    ) -> Result<DecodeResult> {
        self.init_channel_state(llr);
        self.emit(0, observer);
        if self.cfg.stop_on_syndrome && self.graph.syndrome_ok(&self.hard) {
            return Ok(self.finish(0));
        }

        for iter in 1..=self.cfg.max_iters {
            for i in 0..self.graph.checks() {
                let range = self.graph.check_range(i);
                let d = range.len();
                let w = self.rho[i];
                // Extrinsic inputs from the current beliefs.
                for (t, e) in range.clone().enumerate() {
                    let j = self.graph.var_of(e);
                    self.in_buf[t] = self.beliefs[j] - w * self.c2v[e];
                }
                self.rule
                    .outputs(&self.in_buf[..d], &mut self.out_buf[..d], &mut self.pre_buf);
                for (t, e) in range.enumerate() {
                    let j = self.graph.var_of(e);
                    self.beliefs[j] = self.in_buf[t] + w * self.out_buf[t];
                    self.c2v[e] = self.out_buf[t];
                }
            }
            for j in 0..self.graph.vars() {
                self.hard[j] = self.beliefs[j] < 0.0;
            }
            self.emit(iter, observer);
            if self.cfg.stop_on_syndrome && self.graph.syndrome_ok(&self.hard) {
                return Ok(self.finish(iter));
            }
        }
        Ok(self.finish(self.cfg.max_iters))
    }

    /// Recomputes candidate outputs for check `i` and refreshes residuals of
    /// its outgoing messages, skipping those toward `skip_var` (their inputs
    /// did not change). In node-wise mode the check's node residual and heap
    /// entry are refreshed instead of per-edge entries.
    fn refresh_check(&mut self, i: usize, skip_var: usize, nodewise: bool) {
        let range = self.graph.check_range(i);
        let d = range.len();
        for (t, e) in range.clone().enumerate() {
            self.in_buf[t] = self.v2c[e];
        }
        self.rule
            .outputs(&self.in_buf[..d], &mut self.out_buf[..d], &mut self.pre_buf);
        for (t, e) in range.clone().enumerate() {
            if self.graph.var_of(e) == skip_var {
                continue;
            }
            self.cand[e] = self.out_buf[t];
            self.res[e] = (self.cand[e] - self.c2v[e]).abs();
            if !nodewise {
                self.version[e] = self.version[e].wrapping_add(1);
                self.heap.push(HeapItem {
                    res: self.res[e],
                    id: e as u32,
                    version: self.version[e],
                });
            }
        }
        if nodewise {
            let node_res = range.clone().map(|e| self.res[e]).fold(0.0f64, f64::max);
            self.check_res[i] = node_res;
            self.version[i] = self.version[i].wrapping_add(1);
            self.heap.push(HeapItem {
                res: node_res,
                id: i as u32,
                version: self.version[i],
            });
        }
    }

    /// After check messages into variable `j` moved, push its new belief out
    /// to every check except `from_check` (whose extrinsic input from `j` is
    /// unaffected by its own message).
    fn update_var_outgoing(&mut self, j: usize, from_check: usize, llr_j: f64) {
        let mut b = llr_j;
        for &e in self.graph.var_edge_ids(j) {
            let e = e as usize;
            b += self.rho[self.graph.check_of(e)] * self.c2v[e];
        }
        self.beliefs[j] = b;
        for &e in self.graph.var_edge_ids(j) {
            let e = e as usize;
            if self.graph.check_of(e) != from_check {
                self.v2c[e] = b - self.rho[self.graph.check_of(e)] * self.c2v[e];
            }
        }
    }

    fn run_dynamic(
        &mut self,
        llr: &[f64],
        nodewise: bool,
        observer: &mut dyn FnMut(&IterationView),
    ) -> Result<DecodeResult> {
        let ne = self.graph.edges();
        let nc = self.graph.checks();
        self.init_channel_state(llr);
        for e in 0..ne {
            self.v2c[e] = llr[self.graph.var_of(e)];
        }
        self.heap.clear();
        self.version = vec![0; if nodewise { nc } else { ne }];
        if nodewise {
            self.check_res = vec![0.0; nc];
        }

        // Virtual first update: candidates for every check from channel LLRs.
        for i in 0..nc {
            let range = self.graph.check_range(i);
            let d = range.len();
            for (t, e) in range.clone().enumerate() {
                self.in_buf[t] = self.v2c[e];
            }
            self.rule
                .outputs(&self.in_buf[..d], &mut self.out_buf[..d], &mut self.pre_buf);
            for (t, e) in range.clone().enumerate() {
                self.cand[e] = self.out_buf[t];
                self.res[e] = self.cand[e].abs(); // |cand − 0|
                if !nodewise {
                    self.heap.push(HeapItem {
                        res: self.res[e],
                        id: e as u32,
                        version: 0,
                    });
                }
            }
            if nodewise {
                let node_res = range.clone().map(|e| self.res[e]).fold(0.0f64, f64::max);
                self.check_res[i] = node_res;
                self.heap.push(HeapItem {
                    res: node_res,
                    id: i as u32,
                    version: 0,
                });
            }
        }

        self.emit(0, observer);
        if self.cfg.stop_on_syndrome && self.graph.syndrome_ok(&self.hard) {
            return Ok(self.finish(0));
        }

        let budget = self.cfg.max_iters * ne;
        let mut props = 0usize;
        let mut boundary = ne;
        let mut iter = 1usize;
        let mut frozen = false;

        while props < budget {
            // Pop the freshest largest-residual entry (every residual change
            // bumps the version, so a version match means the entry is
            // current).
            let target = loop {
                match self.heap.pop() {
                    None => break None,
                    Some(item) => {
                        if item.version == self.version[item.id as usize] {
                            break Some(item);
                        }
                    }
                }
            };
            let Some(item) = target else {
                frozen = true;
                break;
            };
            if item.res == 0.0 {
                // Fixed point: every pending update is a no-op.
                frozen = true;
                break;
            }

            if nodewise {
                let i = item.id as usize;
                let range = self.graph.check_range(i);
                for e in range.clone() {
                    self.c2v[e] = self.cand[e];
                    self.res[e] = 0.0;
                }
                self.check_res[i] = 0.0;
                self.version[i] = self.version[i].wrapping_add(1);
                props += range.len();
                // Sequentially push each variable's news to its other checks.
                let vars: Vec<usize> = range.map(|e| self.graph.var_of(e)).collect();
                for j in vars {
                    self.update_var_outgoing(j, i, llr[j]);
                    let neighbors: Vec<usize> = self
                        .graph
                        .var_edge_ids(j)
                        .iter()
                        .map(|&e| self.graph.check_of(e as usize))
                        .filter(|&c| c != i)
                        .collect();
                    for i2 in neighbors {
                        self.refresh_check(i2, j, true);
                    }
                }
            } else {
                let e = item.id as usize;
                self.c2v[e] = self.cand[e];
                self.res[e] = 0.0;
                self.version[e] = self.version[e].wrapping_add(1);
                props += 1;
                let i = self.graph.check_of(e);
                let j = self.graph.var_of(e);
                self.update_var_outgoing(j, i, llr[j]);
                // TODO: reuse a scratch buffer for these neighbor lists; the
                // per-propagation allocation shows up in the node-wise bench.
                let neighbors: Vec<usize> = self
                    .graph
                    .var_edge_ids(j)
                    .iter()
                    .map(|&e2| self.graph.check_of(e2 as usize))
                    .filter(|&c| c != i)
                    .collect();
                for i2 in neighbors {
                    self.refresh_check(i2, j, false);
                }
            }

            while props >= boundary && iter <= self.cfg.max_iters {
                self.refresh_hard(llr);
                self.emit(iter, observer);
                if self.cfg.stop_on_syndrome && self.graph.syndrome_ok(&self.hard) {
                    return Ok(self.finish(iter));
                }
                boundary += ne;
                iter += 1;
            }
        }

        self.refresh_hard(llr);
        let used = if frozen {
            props.div_ceil(ne)
        } else {
            self.cfg.max_iters
        };
        // Report the frozen tail so observers see the full iteration grid.
        for t in iter..=self.cfg.max_iters {
            self.emit(t, observer);
        }
        Ok(self.finish(used))
    }

    /// Recomputes beliefs and hard decisions from the current c2v state.
    fn refresh_hard(&mut self, llr: &[f64]) {
        for (j, &llr_j) in llr.iter().enumerate() {
            let mut b = llr_j;
            for &e in self.graph.var_edge_ids(j) {
                let e = e as usize;
                b += self.rho[self.graph.check_of(e)] * self.c2v[e];
            }
            self.beliefs[j] = b;
            self.hard[j] = b < 0.0;
        }
    }
}
