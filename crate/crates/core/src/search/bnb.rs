//! Exact `s(Z_n, t)` by branch and bound.
//!
//! For `t >= 2` candidates come from `1..=floor((n-1)/2)`: replacing a member
//! `a` by `n - a` only flips the signs of its coefficients, and a set holding
//! both `a` and `n - a` (or `n/2`) has a two-term zero sum. Candidates are tried
//! in increasing order, so the first maximum found in a subtree is its
//! lexicographically smallest one.
//!
//! Work is split into tasks by the first two members. Tasks are numbered in
//! lexicographic order of that prefix and share one atomic word packing the
//! best size with the lowest task index achieving it. A task abandons a branch
//! whose bound is below the shared size, or equal to it when an earlier task
//! already reached it. The merge keeps the largest size and then the lowest
//! task index, which is the lexicographically smallest maximum set no matter how
//! many workers ran.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::bounds::bounds;
use crate::constructions::{closed_form, powers_construction, three_free_construct};
use crate::error::{Error, Result};
use crate::zn::{GammaLayers, ResidueSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub time_limit: Option<Duration>,
    pub node_limit: Option<u64>,
    pub workers: usize,
    /// Only explore sets whose smallest member divides `n`. Any set can be
    /// moved there by a unit multiplier (and sign folding), and the
    /// lexicographically smallest maximum set already lies there. Off by default.
    pub unit_canonical: bool,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self { time_limit: None, node_limit: None, workers: 1, unit_canonical: false }
    }
}

impl SearchBudget {
    pub fn with_workers(workers: usize) -> Self {
        Self { workers, ..Self::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Exact,
    LowerBoundOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxResult {
    pub n: u64,
    pub t: u32,
    pub size: usize,
    pub witness: ResidueSet,
    pub status: Status,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

const NO_TASK: u64 = u32::MAX as u64;

fn pack(size: usize, task: u64) -> u64 {
    ((size as u64) << 32) | (NO_TASK - task)
}

fn unpack(word: u64) -> (usize, u64) {
    ((word >> 32) as usize, NO_TASK - (word & NO_TASK))
}

struct Shared {
    t: usize,
    upper: usize,
    best: AtomicU64,
    nodes: AtomicU64,
    stop: AtomicBool,
    start: Instant,
    budget: SearchBudget,
}

impl Shared {
    fn out_of_budget(&self, nodes: u64) -> bool {
        if self.stop.load(Ordering::Relaxed) {
            return true;
        }
        let over_nodes = self.budget.node_limit.is_some_and(|lim| nodes >= lim);
        let over_time = nodes % 256 == 0
            && self.budget.time_limit.is_some_and(|lim| self.start.elapsed() >= lim);
        if over_nodes || over_time {
            self.stop.store(true, Ordering::Relaxed);
        }
        over_nodes || over_time
    }
}

struct Task<'a> {
    shared: &'a Shared,
    index: u64,
    local_best: Vec<u64>,
}

impl Task<'_> {
    fn abandon(&self, bound: usize) -> bool {
        let bound = bound.min(self.shared.upper);
        if bound <= self.local_best.len() {
            return true;
        }
        let (size, task) = unpack(self.shared.best.load(Ordering::Relaxed));
        bound < size || (bound == size && task < self.index)
    }

    fn dfs(&mut self, members: &mut Vec<u64>, layers: &GammaLayers, cands: &[u64]) {
        let nodes = self.shared.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if self.shared.out_of_budget(nodes) {
            return;
        }
        if members.len() > self.local_best.len() {
            self.local_best.clone_from(members);
            self.shared.best.fetch_max(pack(members.len(), self.index), Ordering::Relaxed);
        }
        for (i, &x) in cands.iter().enumerate() {
            if self.abandon(members.len() + cands.len() - i) {
                break;
            }
            let mut next = layers.clone();
            next.adjoin(x);
            let rest: Vec<u64> =
                cands[i + 1..].iter().copied().filter(|&y| next.admits(y, self.shared.t)).collect();
            members.push(x);
            self.dfs(members, &next, &rest);
            members.pop();
            if self.shared.stop.load(Ordering::Relaxed) {
                return;
            }
        }
    }
}

/// Best explicit set known without searching, used as a floor for pruning and
/// as the fallback witness when the budget runs out.
fn construction_floor(n: u64, t: u32) -> Result<ResidueSet> {
    let mut best = ResidueSet::empty(n)?;
    let mut consider = |s: ResidueSet| {
        if s.len() > best.len() {
            best = s;
        }
    };
    if t <= 2 {
        consider(closed_form(n, t)?.set);
    }
    if t == 3 {
        consider(three_free_construct(n)?.set);
    }
    if t >= 2 && n > u64::from(t) {
        consider(powers_construction(n, t)?.set);
    }
    if n > u64::from(t) {
        consider(ResidueSet::new(n, [1])?);
    }
    Ok(best)
}

/// Computes `s(Z_n, t)` with a lexicographically smallest maximum witness.
pub fn exact_max(n: u64, t: u32, budget: &SearchBudget) -> Result<MaxResult> {
    if n == 0 || t == 0 {
        return Err(Error::InvalidParameter("need n >= 1 and t >= 1".into()));
    }
    if budget.workers == 0 {
        return Err(Error::InvalidParameter("worker count must be at least 1".into()));
    }
    let start = Instant::now();
    let depth = t as usize;
    let top = if t == 1 { n - 1 } else { (n - 1) / 2 };
    let root = GammaLayers::new(n, depth);
    let cands: Vec<u64> = (1..=top).filter(|&x| root.admits(x, depth)).collect();

    let floor = construction_floor(n, t)?;
    let report = bounds(n, t)?;
    let shared = Shared {
        t: depth,
        upper: report.upper as usize,
        best: AtomicU64::new(pack(floor.len(), NO_TASK)),
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        start,
        budget: *budget,
    };

    let first_ok = |x: u64| !budget.unit_canonical || n % x == 0;
    let mut prefixes: Vec<(u64, u64)> = Vec::new();
    for (i, &a) in cands.iter().enumerate().filter(|(_, &a)| first_ok(a)) {
        let mut layers = root.clone();
        layers.adjoin(a);
        prefixes.extend(cands[i + 1..].iter().filter(|&&b| layers.admits(b, depth)).map(|&b| (a, b)));
    }

    let run_task = |(index, &(a, b)): (usize, &(u64, u64))| -> Option<Vec<u64>> {
        let mut task = Task { shared: &shared, index: index as u64, local_best: Vec::new() };
        let after_b = cands.partition_point(|&y| y <= b);
        if task.abandon(2 + cands.len() - after_b) {
            return None;
        }
        let mut layers = root.clone();
        layers.adjoin(a);
        layers.adjoin(b);
        let rest: Vec<u64> =
            cands[after_b..].iter().copied().filter(|&y| layers.admits(y, depth)).collect();
        task.dfs(&mut vec![a, b], &layers, &rest);
        (!task.local_best.is_empty()).then_some(task.local_best)
    };

    let found: Vec<Option<Vec<u64>>> = if budget.workers == 1 {
        prefixes.iter().enumerate().map(run_task).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(budget.workers)
            .build()
            .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
        pool.install(|| prefixes.par_iter().enumerate().map(run_task).collect())
    };

    // Largest size wins; among equals the earliest task, i.e. the lex-smallest set.
    let mut best: Option<Vec<u64>> = None;
    for set in found.into_iter().flatten() {
        if best.as_ref().is_none_or(|b| set.len() > b.len()) {
            best = Some(set);
        }
    }
    let first_single = cands.iter().find(|&&x| first_ok(x)).map(|&x| vec![x]);
    let searched = best.or(first_single).unwrap_or_default();

    let stopped = shared.stop.load(Ordering::Relaxed);
    let witness = if stopped && floor.len() > searched.len() {
        floor
    } else {
        ResidueSet::new(n, searched)?
    };
    Ok(MaxResult {
        n,
        t,
        size: witness.len(),
        witness,
        status: if stopped { Status::LowerBoundOnly } else { Status::Exact },
        nodes_explored: shared.nodes.load(Ordering::Relaxed),
        elapsed: start.elapsed(),
    })
}
