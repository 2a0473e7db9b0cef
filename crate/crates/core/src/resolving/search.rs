//! Exact metric-dimension search.
//!
//! Candidate landmark sets are visited in lexicographic order of their linear
//! indices. With symmetry reduction only sets containing `u_1` or `v_1` are
//! visited: every set rotates onto one of those. With pruning, a set whose
//! members fail to recognize some outer vertex is rejected without building
//! representations.
//!
//! The stream is split into tasks by the first two members. Tasks run in
//! parallel; a task stops once a task earlier in the order has found a set,
//! and the result is the first set of the first successful task, so the
//! answer does not depend on the worker count.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use super::{is_resolving, LandmarkSet};
use crate::error::{Error, Result};
use crate::oracle::DistanceOracle;

pub const DEFAULT_MAX_SIZE: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub symmetry: bool,
    pub prune: bool,
    /// `None` uses the global rayon pool.
    pub workers: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { symmetry: true, prune: true, workers: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchVerdict {
    /// Every candidate of this size was enumerated and none resolves.
    NoneExists { candidates: u64 },
    /// The lexicographically first resolving candidate.
    Found(LandmarkSet),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExhaustedSize {
    pub size: usize,
    pub candidates: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionResult {
    pub n: usize,
    pub m: usize,
    /// `None` when no set of size up to `max_size` resolves.
    pub dimension: Option<usize>,
    pub witness: Option<LandmarkSet>,
    pub exhausted: Vec<ExhaustedSize>,
    pub symmetry: bool,
    pub max_size: usize,
}

struct Kernel<'a> {
    oracle: &'a DistanceOracle,
    n: usize,
    v: usize,
    s: usize,
    symmetry: bool,
    prune: bool,
    /// Bits per coordinate in packed keys; `None` falls back to the slow path.
    shift: Option<u32>,
    /// Per vertex, the outer positions it recognizes.
    masks: Vec<Vec<u64>>,
    full: Vec<u64>,
}

#[derive(PartialEq, Eq)]
enum Step {
    Take,
    Skip,
    Stop,
}

struct TaskState {
    candidates: u64,
    keys: Vec<Vec<u64>>,
    cover: Vec<Vec<u64>>,
    scratch: Vec<u64>,
    chosen: Vec<usize>,
    aborted: bool,
}

impl<'a> Kernel<'a> {
    fn new(oracle: &'a DistanceOracle, s: usize, opts: &SearchOptions) -> Self {
        let n = oracle.n();
        let v = oracle.vertex_count();
        let diam = oracle.diameter() as u64;
        let shift = [8u32, 16]
            .into_iter()
            .find(|&b| diam < (1 << b) && s as u32 * b <= 64);
        let words = n.div_ceil(64);
        let mut full = vec![0u64; words];
        for p in 0..n {
            full[p / 64] |= 1 << (p % 64);
        }
        let masks = (0..v)
            .map(|w| {
                let row = oracle.row(w);
                let mut m = vec![0u64; words];
                for p in 0..n {
                    if row[p] != row[(p + 2) % n] {
                        m[p / 64] |= 1 << (p % 64);
                    }
                }
                m
            })
            .collect();
        Self { oracle, n, v, s, symmetry: opts.symmetry, prune: opts.prune, shift, masks, full }
    }

    /// Whether `x` may follow the sorted prefix `chosen`.
    fn step(&self, chosen: &[usize], x: usize) -> Step {
        if x + (self.s - chosen.len()) > self.v {
            return Step::Stop;
        }
        if !self.symmetry {
            return Step::Take;
        }
        let n = self.n;
        let Some(&first) = chosen.first() else {
            return match x {
                _ if x == 0 || x == n => Step::Take,
                _ if x > n => Step::Stop,
                _ if self.s == 1 => Step::Skip,
                _ => Step::Take,
            };
        };
        if first == 0 || chosen.contains(&n) {
            return Step::Take;
        }
        // the set must still pick up v_1
        match x.cmp(&n) {
            std::cmp::Ordering::Equal => Step::Take,
            std::cmp::Ordering::Greater => Step::Stop,
            std::cmp::Ordering::Less if chosen.len() + 1 == self.s => Step::Skip,
            std::cmp::Ordering::Less => Step::Take,
        }
    }

    fn prefixes(&self) -> Vec<Vec<usize>> {
        let depth = self.s.min(2);
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.collect_prefixes(depth, 0, &mut cur, &mut out);
        out
    }

    fn collect_prefixes(&self, depth: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == depth {
            out.push(cur.clone());
            return;
        }
        for x in from..self.v {
            match self.step(cur, x) {
                Step::Stop => break,
                Step::Skip => continue,
                Step::Take => {
                    cur.push(x);
                    self.collect_prefixes(depth, x + 1, cur, out);
                    cur.pop();
                }
            }
        }
    }

    fn state(&self) -> TaskState {
        TaskState {
            candidates: 0,
            keys: vec![vec![0; self.v]; self.s + 1],
            cover: vec![vec![0; self.full.len()]; self.s + 1],
            scratch: vec![0; self.v],
            chosen: Vec::with_capacity(self.s),
            aborted: false,
        }
    }

    fn push(&self, st: &mut TaskState, x: usize) {
        let d = st.chosen.len();
        st.chosen.push(x);
        let (lo, hi) = st.cover.split_at_mut(d + 1);
        for ((c, &p), &m) in hi[0].iter_mut().zip(&lo[d]).zip(&self.masks[x]) {
            *c = p | m;
        }
        if let Some(shift) = self.shift {
            let (lo, hi) = st.keys.split_at_mut(d + 1);
            let row = self.oracle.row(x);
            let sh = shift * d as u32;
            for ((k, &p), &r) in hi[0].iter_mut().zip(&lo[d]).zip(row) {
                *k = p | ((r as u64) << sh);
            }
        }
    }

    fn leaf_resolves(&self, st: &mut TaskState) -> bool {
        if self.prune && st.cover[self.s] != self.full {
            return false;
        }
        match self.shift {
            Some(_) => {
                st.scratch.copy_from_slice(&st.keys[self.s]);
                st.scratch.sort_unstable();
                st.scratch.windows(2).all(|p| p[0] != p[1])
            }
            None => {
                let w = LandmarkSet::from_linear(&st.chosen, self.n);
                is_resolving(self.oracle, &w).map(|r| r.is_resolving()).unwrap_or(false)
            }
        }
    }

    /// Depth-first lexicographic extension of `st.chosen`.
    fn extend(&self, st: &mut TaskState, from: usize, halt: &dyn Fn() -> bool) -> bool {
        if st.chosen.len() == self.s {
            st.candidates += 1;
            if st.candidates % 4096 == 0 && halt() {
                st.aborted = true;
                return false;
            }
            return self.leaf_resolves(st);
        }
        for x in from..self.v {
            match self.step(&st.chosen, x) {
                Step::Stop => break,
                Step::Skip => continue,
                Step::Take => {
                    self.push(st, x);
                    if self.extend(st, x + 1, halt) {
                        return true;
                    }
                    st.chosen.pop();
                    if st.aborted {
                        return false;
                    }
                }
            }
        }
        false
    }

    fn run_task(&self, prefix: &[usize], halt: &dyn Fn() -> bool) -> (u64, Option<Vec<usize>>) {
        let mut st = self.state();
        for &x in prefix {
            self.push(&mut st, x);
        }
        let from = prefix.last().map_or(0, |&x| x + 1);
        if self.extend(&mut st, from, halt) {
            (st.candidates, Some(st.chosen))
        } else {
            (st.candidates, None)
        }
    }

    fn run(&self) -> SearchVerdict {
        let tasks = self.prefixes();
        let best = AtomicUsize::new(usize::MAX);
        let results: Vec<(u64, Option<Vec<usize>>)> = tasks
            .par_iter()
            .enumerate()
            .map(|(t, prefix)| {
                let halt = || best.load(Ordering::Relaxed) < t;
                if halt() {
                    return (0, None);
                }
                let r = self.run_task(prefix, &halt);
                if r.1.is_some() {
                    best.fetch_min(t, Ordering::Relaxed);
                }
                r
            })
            .collect();
        // every task before the first success ran to completion
        match results.iter().find_map(|(_, f)| f.as_ref()) {
            Some(found) => SearchVerdict::Found(LandmarkSet::from_linear(found, self.n)),
            None => SearchVerdict::NoneExists { candidates: results.iter().map(|r| r.0).sum() },
        }
    }
}

fn with_pool<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match workers {
        Some(w) => match rayon::ThreadPoolBuilder::new().num_threads(w.max(1)).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        },
        None => f(),
    }
}

/// Decides whether a resolving set of size `s` exists.
pub fn exhaust_size(oracle: &DistanceOracle, s: usize, opts: &SearchOptions) -> Result<SearchVerdict> {
    let v = oracle.vertex_count();
    if s == 0 {
        return Err(Error::EmptyLandmarks);
    }
    if s > v {
        return Err(Error::SizeTooLarge { size: s, vertices: v });
    }
    let kernel = Kernel::new(oracle, s, opts);
    Ok(with_pool(opts.workers, || kernel.run()))
}

/// Smallest `s <= max_size` admitting a resolving set.
pub fn metric_dimension(oracle: &DistanceOracle, max_size: usize, opts: &SearchOptions) -> Result<DimensionResult> {
    let v = oracle.vertex_count();
    if max_size > v {
        return Err(Error::SizeTooLarge { size: max_size, vertices: v });
    }
    let p = oracle.params();
    let mut result = DimensionResult {
        n: p.n(),
        m: p.m(),
        dimension: None,
        witness: None,
        exhausted: Vec::new(),
        symmetry: opts.symmetry,
        max_size,
    };
    for s in 1..=max_size {
        match exhaust_size(oracle, s, opts)? {
            SearchVerdict::NoneExists { candidates } => result.exhausted.push(ExhaustedSize { size: s, candidates }),
            SearchVerdict::Found(w) => {
                result.dimension = Some(s);
                result.witness = Some(w);
                break;
            }
        }
    }
    Ok(result)
}
