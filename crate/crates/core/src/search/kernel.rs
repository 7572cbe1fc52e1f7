//! Backtracking kernel shared by square and cube searches.
//!
//! Cells are filled in index order from a candidate table sorted by value.
//! Every candidate is dominated by the total, so a line sums to the total
//! exactly when, at each digit position, some cell on it carries the
//! total's digit. Each candidate is reduced to the bitmask of positions
//! where it matches the total, and a line is satisfied when the OR of its
//! masks is full.
//!
//! The search tree is split at the first cell. Subtrees run independently
//! and are merged in order, clipping each trace to the budget and emit
//! limit left by its predecessors, so a parallel run reports exactly what a
//! sequential one would.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// How aggressively the kernel prunes partial assignments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Pruning {
    /// Completed-line checks plus reachability of the total on every
    /// unfinished line from the candidates still available.
    #[default]
    Full,
    /// Only reject a cell when it completes a line with the wrong sum.
    CompletedLinesOnly,
}

/// Why a search stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StopReason {
    /// The whole space was searched.
    Exhausted,
    /// The node budget ran out.
    Budget,
    /// `emit_limit` results were found.
    EmitLimit,
}

const MAX_LINES_PER_CELL: usize = 16;

pub(crate) struct Geometry {
    cells: usize,
    lines: Vec<[usize; 3]>,
    cell_lines: Vec<Vec<usize>>,
    last_cell: Vec<usize>,
    /// `remaining[k][l]`: cells of line `l` still empty once cell `k` is set.
    remaining: Vec<Vec<u8>>,
}

impl Geometry {
    pub(crate) fn new(cells: usize, lines: Vec<[usize; 3]>) -> Self {
        let mut cell_lines = vec![Vec::new(); cells];
        for (l, line) in lines.iter().enumerate() {
            for &k in line {
                cell_lines[k].push(l);
            }
        }
        assert!(cell_lines.iter().all(|l| l.len() <= MAX_LINES_PER_CELL));
        let last_cell = lines.iter().map(|l| *l.iter().max().unwrap()).collect();
        let remaining = (0..cells)
            .map(|k| {
                lines
                    .iter()
                    .map(|l| l.iter().filter(|&&c| c > k).count() as u8)
                    .collect()
            })
            .collect();
        Self {
            cells,
            lines,
            cell_lines,
            last_cell,
            remaining,
        }
    }
}

pub(crate) struct Kernel<'a> {
    pub geometry: &'a Geometry,
    /// Per candidate: positions where it equals the total's digit.
    pub masks: Vec<u64>,
    pub full: u64,
    pub distinct: bool,
    pub pruning: Pruning,
    /// Keep only leaves that are least among their images under these
    /// cell maps.
    pub symmetries: Option<&'a [[usize; 9]; 8]>,
    /// Per cell, which candidates it may hold; `None` allows all. Pruning
    /// still reasons over every candidate, which stays sound.
    pub allowed: Option<Vec<Vec<bool>>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Complete,
    Budget,
    EmitLimit,
}

/// One subtree's run: nodes counted, leaves found with the node count at
/// which each was reached, and how it ended.
struct Trace {
    nodes: u64,
    hits: Vec<(u64, Vec<u32>)>,
    status: Status,
}

impl Trace {
    /// What a run of the same subtree with caps `(budget, emit)` would have
    /// produced. Valid when this trace was recorded with caps at least as
    /// large.
    fn clip(mut self, budget: u64, emit: usize) -> Trace {
        if self.hits.len() >= emit && self.hits[emit - 1].0 <= budget {
            let nodes = self.hits[emit - 1].0;
            self.hits.truncate(emit);
            return Trace {
                nodes,
                hits: self.hits,
                status: Status::EmitLimit,
            };
        }
        if self.status == Status::Complete && self.nodes <= budget {
            return self;
        }
        self.hits.retain(|h| h.0 <= budget);
        Trace {
            nodes: budget,
            hits: self.hits,
            status: Status::Budget,
        }
    }
}

/// Totals for a whole run; the hits themselves go to the caller's sink.
pub(crate) struct Outcome {
    pub nodes: u64,
    pub emitted: usize,
    pub stop: StopReason,
}

struct Dfs<'k, 'a, 's> {
    kernel: &'k Kernel<'a>,
    assign: Vec<u32>,
    cov: Vec<u64>,
    used: Vec<bool>,
    nodes: u64,
    budget: u64,
    emit: usize,
    emitted: usize,
    sink: &'s mut dyn FnMut(u64, &[u32]),
    status: Status,
}

impl Dfs<'_, '_, '_> {
    /// Tries candidate `c` at cell `k`. Returns false when the search must
    /// stop.
    fn place(&mut self, k: usize, c: u32) -> bool {
        if self.nodes == self.budget {
            self.status = Status::Budget;
            return false;
        }
        self.nodes += 1;
        let kernel = self.kernel;
        let g = kernel.geometry;
        let mask = kernel.masks[c as usize];
        for &l in &g.cell_lines[k] {
            if g.last_cell[l] == k && self.cov[l] | mask != kernel.full {
                return true;
            }
        }
        let mut saved = [0u64; MAX_LINES_PER_CELL];
        for (i, &l) in g.cell_lines[k].iter().enumerate() {
            saved[i] = self.cov[l];
            self.cov[l] |= mask;
        }
        self.assign[k] = c;
        if kernel.distinct {
            self.used[c as usize] = true;
        }
        let go = match kernel.pruning {
            Pruning::Full if !self.reachable(k) => true,
            _ => self.descend(k + 1),
        };
        if kernel.distinct {
            self.used[c as usize] = false;
        }
        for (&l, &v) in g.cell_lines[k].iter().zip(&saved) {
            self.cov[l] = v;
        }
        go
    }

    /// Every unfinished line can still reach the total with what is left.
    fn reachable(&self, k: usize) -> bool {
        let kernel = self.kernel;
        let g = kernel.geometry;
        let available = |c: usize| !kernel.distinct || !self.used[c];
        let union = kernel
            .masks
            .iter()
            .enumerate()
            .filter(|&(c, _)| available(c))
            .fold(0u64, |acc, (_, &m)| acc | m);
        for (l, &rem) in g.remaining[k].iter().enumerate() {
            if rem == 0 {
                continue;
            }
            let missing = kernel.full & !self.cov[l];
            if missing == 0 {
                continue;
            }
            if union & missing != missing {
                return false;
            }
            if rem == 1
                && !kernel
                    .masks
                    .iter()
                    .enumerate()
                    .any(|(c, &m)| available(c) && m & missing == missing)
            {
                return false;
            }
        }
        true
    }

    fn descend(&mut self, k: usize) -> bool {
        if k == self.kernel.geometry.cells {
            if self.is_canonical() {
                self.emitted += 1;
                (self.sink)(self.nodes, &self.assign);
                if self.emitted >= self.emit {
                    self.status = Status::EmitLimit;
                    return false;
                }
            }
            return true;
        }
        for c in 0..self.kernel.masks.len() as u32 {
            if self.kernel.distinct && self.used[c as usize] {
                continue;
            }
            if !self.kernel.allows(k, c) {
                continue;
            }
            if !self.place(k, c) {
                return false;
            }
        }
        true
    }

    fn is_canonical(&self) -> bool {
        let Some(maps) = self.kernel.symmetries else {
            return true;
        };
        maps.iter().all(|m| {
            let image = m.iter().map(|&src| self.assign[src]);
            image.cmp(self.assign.iter().copied()) != std::cmp::Ordering::Less
        })
    }
}

impl Kernel<'_> {
    fn allows(&self, cell: usize, c: u32) -> bool {
        self.allowed.as_ref().is_none_or(|a| a[cell][c as usize])
    }

    /// Searches the subtree with `first` in cell 0, returning nodes, hits
    /// emitted and how it ended.
    fn subtree(
        &self,
        first: u32,
        budget: u64,
        emit: usize,
        sink: &mut dyn FnMut(u64, &[u32]),
    ) -> (u64, usize, Status) {
        let n = self.geometry.cells;
        let mut dfs = Dfs {
            kernel: self,
            assign: vec![0; n],
            cov: vec![0; self.geometry.lines.len()],
            used: vec![false; self.masks.len()],
            nodes: 0,
            budget,
            emit,
            emitted: 0,
            sink,
            status: Status::Complete,
        };
        dfs.place(0, first);
        (dfs.nodes, dfs.emitted, dfs.status)
    }

    fn trace(&self, first: u32, budget: u64, emit: usize) -> Trace {
        let mut hits = Vec::new();
        let (nodes, _, status) = self.subtree(first, budget, emit, &mut |at, a| {
            hits.push((at, a.to_vec()))
        });
        Trace {
            nodes,
            hits,
            status,
        }
    }

    /// Runs the whole search, passing each hit to `sink` in search order.
    /// `budget` and `emit` must be positive.
    ///
    /// With several threads, first-cell subtrees are searched a chunk at a
    /// time, each under the budget and emit limit left at the start of the
    /// chunk, then clipped and emitted in order.
    pub(crate) fn run(
        &self,
        budget: u64,
        emit: usize,
        threads: usize,
        sink: &mut dyn FnMut(&[u32]),
    ) -> Outcome {
        debug_assert!(budget > 0 && emit > 0);
        let firsts: Vec<u32> = (0..self.masks.len() as u32)
            .filter(|&c| self.allows(0, c))
            .collect();
        let mut nodes = 0u64;
        let mut emitted = 0usize;
        let stop_of = |status| match status {
            Status::Complete => None,
            Status::Budget => Some(StopReason::Budget),
            Status::EmitLimit => Some(StopReason::EmitLimit),
        };

        let pool = if threads > 1 {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .ok()
        } else {
            None
        };
        let Some(pool) = pool else {
            for &first in &firsts {
                let (n, e, status) =
                    self.subtree(first, budget - nodes, emit - emitted, &mut |_, a| sink(a));
                nodes += n;
                emitted += e;
                if let Some(stop) = stop_of(status) {
                    return Outcome {
                        nodes,
                        emitted,
                        stop,
                    };
                }
            }
            return Outcome {
                nodes,
                emitted,
                stop: StopReason::Exhausted,
            };
        };

        for chunk in firsts.chunks(threads * 4) {
            let (b, e) = (budget - nodes, emit - emitted);
            let traces: Vec<Trace> =
                pool.install(|| chunk.par_iter().map(|&f| self.trace(f, b, e)).collect());
            for trace in traces {
                let trace = trace.clip(budget - nodes, emit - emitted);
                nodes += trace.nodes;
                emitted += trace.hits.len();
                for (_, a) in &trace.hits {
                    sink(a);
                }
                if let Some(stop) = stop_of(trace.status) {
                    return Outcome {
                        nodes,
                        emitted,
                        stop,
                    };
                }
            }
        }
        Outcome {
            nodes,
            emitted,
            stop: StopReason::Exhausted,
        }
    }
}
