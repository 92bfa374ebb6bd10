//! Exhaustive search over `k`-colorings of `K_N` for a monochromatic `C_n`.
//!
//! Edges are colored one at a time in a fixed order. A color may be used only
//! after all smaller colors have appeared, which removes the `k!` relabelings
//! of every coloring. Coloring edge `uv` with `c` is rejected as soon as color
//! `c` already holds a `u`-`v` path on `n` vertices, since that edge would
//! close a monochromatic `C_n`. A branch where every color is rejected is a
//! dead end; if every branch dies, every coloring contains a monochromatic
//! `C_n` and `R_k(C_n) <= N`.

use alloc::vec::Vec;
use core::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use crate::bitgraph::{self, bit};
use crate::coloring::EdgeColoring;
use crate::construct::verify_mono_cycle_free_exhaustive;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    /// Color choices rejected because they close a monochromatic `C_n`.
    pub cycle_prunes: u64,
    /// Color choices skipped by color-symmetry breaking.
    pub symmetry_prunes: u64,
}

impl SearchStats {
    pub fn merge(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        self.cycle_prunes += other.cycle_prunes;
        self.symmetry_prunes += other.symmetry_prunes;
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EdgeOrder {
    /// By `(min endpoint, max endpoint)`.
    #[default]
    Lexicographic,
    /// By `(max endpoint, min endpoint)`: completes `K_2, K_3, ...` in turn.
    VertexIncremental,
}

impl EdgeOrder {
    pub fn edges(self, vertices: usize) -> Vec<Edge> {
        let mut edges = Graph::complete(vertices).edges().to_vec();
        if self == EdgeOrder::VertexIncremental {
            edges.sort_unstable_by_key(|&(u, v)| (v, u));
        }
        edges
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SearchLimits<'a> {
    /// Maximum nodes before giving up with [`Error::BudgetExceeded`].
    pub node_budget: Option<u64>,
    pub order: EdgeOrder,
    /// Polled during the search; when set the search stops early.
    pub cancel: Option<&'a AtomicBool>,
    /// Node counter shared between concurrent searches, checked against the budget.
    pub shared_nodes: Option<&'a AtomicU64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Every coloring has a monochromatic `C_n`.
    AllContain,
    Counterexample(EdgeColoring),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub verdict: Verdict,
    pub stats: SearchStats,
}

/// Outcome of a subtree search, which may also be cut short by cancellation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubtreeOutcome {
    Exhausted,
    /// Colors `1..=k` for every edge, in search order.
    Counterexample(Vec<u8>),
    Cancelled,
}

/// A fixed `(k, n, N)` instance.
#[derive(Clone, Debug)]
pub struct RamseyProblem {
    pub k: usize,
    pub n: usize,
    pub vertices: usize,
    pub edges: Vec<Edge>,
}

impl RamseyProblem {
    pub fn new(k: usize, n: usize, vertices: usize, order: EdgeOrder) -> Result<Self> {
        if n < 3 {
            return Err(Error::CycleTooShort { length: n });
        }
        if k == 0 || k > u8::MAX as usize {
            return Err(Error::InvalidParams("k must lie in 1..=255"));
        }
        if vertices > bitgraph::MAX_VERTICES {
            return Err(Error::InvalidParams(
                "exact search supports at most 64 vertices",
            ));
        }
        Ok(RamseyProblem {
            k,
            n,
            vertices,
            edges: order.edges(vertices),
        })
    }

    /// Turns a full assignment in search order into an [`EdgeColoring`].
    pub fn coloring(&self, colors: &[u8]) -> Result<EdgeColoring> {
        EdgeColoring::from_triples(
            self.vertices,
            self.k,
            self.edges
                .iter()
                .zip(colors)
                .map(|(&(u, v), &c)| (u, v, c as usize)),
        )
    }

    /// All live prefixes of length `depth`, in search order.
    ///
    /// Exploring each returned prefix with [`RamseyProblem::search_subtree`]
    /// covers the whole search space.
    pub fn open_prefixes(&self, depth: usize) -> (Vec<Vec<u8>>, SearchStats) {
        let depth = depth.min(self.edges.len());
        let mut state = State::new(self);
        let mut out = Vec::new();
        state.collect_prefixes(depth, &mut out);
        (out, state.stats)
    }

    /// Searches every completion of `prefix` (colors `1..=k`).
    ///
    /// A prefix that is not itself live (it breaks symmetry ordering or already
    /// closes a monochromatic `C_n`) is reported as exhausted.
    pub fn search_subtree(
        &self,
        prefix: &[u8],
        limits: &SearchLimits<'_>,
    ) -> core::result::Result<(SubtreeOutcome, SearchStats), Error> {
        let mut state = State::new(self);
        state.budget = limits.node_budget;
        state.cancel = limits.cancel;
        state.shared = limits.shared_nodes;
        if !state.replay(prefix) {
            return Ok((SubtreeOutcome::Exhausted, state.stats));
        }
        let step = state.dfs();
        if let Some(counter) = state.shared {
            counter.fetch_add(state.unflushed, Ordering::Relaxed);
        }
        let outcome = match step {
            Step::Exhausted => SubtreeOutcome::Exhausted,
            Step::Found => SubtreeOutcome::Counterexample(state.colors.clone()),
            Step::Cancelled => SubtreeOutcome::Cancelled,
            Step::OverBudget => {
                return Err(Error::BudgetExceeded { stats: state.stats });
            }
        };
        Ok((outcome, state.stats))
    }
}

enum Step {
    Exhausted,
    Found,
    Cancelled,
    OverBudget,
}

const POLL_INTERVAL: u64 = 1 << 12;

struct State<'p, 'a> {
    problem: &'p RamseyProblem,
    /// `adj[c][v]`: neighbors of `v` in color `c` (0-based).
    adj: Vec<Vec<u64>>,
    /// 1-based colors of the edges assigned so far.
    colors: Vec<u8>,
    max_used: usize,
    stats: SearchStats,
    budget: Option<u64>,
    cancel: Option<&'a AtomicBool>,
    shared: Option<&'a AtomicU64>,
    unflushed: u64,
}

impl<'p, 'a> State<'p, 'a> {
    fn new(problem: &'p RamseyProblem) -> Self {
        State {
            problem,
            adj: alloc::vec![alloc::vec![0u64; problem.vertices]; problem.k],
            colors: Vec::with_capacity(problem.edges.len()),
            max_used: 0,
            stats: SearchStats::default(),
            budget: None,
            cancel: None,
            shared: None,
            unflushed: 0,
        }
    }

    #[inline]
    fn closes_cycle(&self, (u, v): Edge, c: usize) -> bool {
        bitgraph::has_path(&self.adj[c], u, v, self.problem.n - 1, 0)
    }

    #[inline]
    fn push(&mut self, c: usize) {
        let (u, v) = self.problem.edges[self.colors.len()];
        self.adj[c][u] |= bit(v);
        self.adj[c][v] |= bit(u);
        self.colors.push((c + 1) as u8);
    }

    #[inline]
    fn pop(&mut self) {
        let c = self.colors.pop().expect("non-empty") as usize - 1;
        let (u, v) = self.problem.edges[self.colors.len()];
        self.adj[c][u] &= !bit(v);
        self.adj[c][v] &= !bit(u);
    }

    /// Colors admissible for the next edge by symmetry breaking (0-based).
    #[inline]
    fn color_limit(&self) -> usize {
        (self.max_used + 1).min(self.problem.k)
    }

    fn replay(&mut self, prefix: &[u8]) -> bool {
        if prefix.len() > self.problem.edges.len() {
            return false;
        }
        for &c in prefix {
            let c = c as usize;
            if c == 0 || c > self.color_limit() {
                return false;
            }
            let e = self.problem.edges[self.colors.len()];
            if self.closes_cycle(e, c - 1) {
                return false;
            }
            self.push(c - 1);
            self.max_used = self.max_used.max(c);
        }
        true
    }

    fn tick(&mut self) -> Option<Step> {
        self.stats.nodes += 1;
        self.unflushed += 1;
        if self.unflushed < POLL_INTERVAL {
            if self.shared.is_none() {
                if let Some(b) = self.budget {
                    if self.stats.nodes > b {
                        return Some(Step::OverBudget);
                    }
                }
            }
            return None;
        }
        let total = match self.shared {
            Some(counter) => counter.fetch_add(self.unflushed, Ordering::Relaxed) + self.unflushed,
            None => self.stats.nodes,
        };
        self.unflushed = 0;
        if self.budget.is_some_and(|b| total > b) {
            return Some(Step::OverBudget);
        }
        if self.cancel.is_some_and(|f| f.load(Ordering::Relaxed)) {
            return Some(Step::Cancelled);
        }
        None
    }

    fn dfs(&mut self) -> Step {
        if let Some(stop) = self.tick() {
            return stop;
        }
        let idx = self.colors.len();
        if idx == self.problem.edges.len() {
            return Step::Found;
        }
        let e = self.problem.edges[idx];
        let limit = self.color_limit();
        self.stats.symmetry_prunes += (self.problem.k - limit) as u64;
        let saved = self.max_used;
        for c in 0..limit {
            if self.closes_cycle(e, c) {
                self.stats.cycle_prunes += 1;
                continue;
            }
            self.push(c);
            self.max_used = saved.max(c + 1);
            match self.dfs() {
                Step::Exhausted => {}
                other => return other,
            }
            self.pop();
            self.max_used = saved;
        }
        Step::Exhausted
    }

    fn collect_prefixes(&mut self, depth: usize, out: &mut Vec<Vec<u8>>) {
        self.stats.nodes += 1;
        let idx = self.colors.len();
        if idx == depth {
            out.push(self.colors.clone());
            return;
        }
        let e = self.problem.edges[idx];
        let limit = self.color_limit();
        self.stats.symmetry_prunes += (self.problem.k - limit) as u64;
        let saved = self.max_used;
        for c in 0..limit {
            if self.closes_cycle(e, c) {
                self.stats.cycle_prunes += 1;
                continue;
            }
            self.push(c);
            self.max_used = saved.max(c + 1);
            self.collect_prefixes(depth, out);
            self.pop();
            self.max_used = saved;
        }
    }
}

/// Decides whether every `k`-coloring of `K_N` has a monochromatic `C_n`.
///
/// Single-threaded and deterministic: the counterexample, when there is one,
/// is the first in search order.
pub fn ramsey_check(
    k: usize,
    n: usize,
    vertices: usize,
    limits: &SearchLimits<'_>,
) -> Result<SearchResult> {
    let problem = RamseyProblem::new(k, n, vertices, limits.order)?;
    let (outcome, stats) = problem.search_subtree(&[], limits)?;
    finish(&problem, outcome, stats)
}

/// Turns a subtree outcome into a verified [`SearchResult`].
pub fn finish(
    problem: &RamseyProblem,
    outcome: SubtreeOutcome,
    stats: SearchStats,
) -> Result<SearchResult> {
    let verdict = match outcome {
        SubtreeOutcome::Exhausted => Verdict::AllContain,
        SubtreeOutcome::Counterexample(colors) => {
            let col = problem.coloring(&colors)?;
            let check = verify_mono_cycle_free_exhaustive(&col, problem.n)?;
            assert!(
                check.is_free(),
                "search produced a coloring with a monochromatic C_{}",
                problem.n
            );
            Verdict::Counterexample(col)
        }
        SubtreeOutcome::Cancelled => return Err(Error::BudgetExceeded { stats }),
    };
    Ok(SearchResult { verdict, stats })
}

/// Greedily shrinks a mono-`C_n`-free coloring into a smaller certificate.
///
/// Unused colors are dropped, then pairs of colors are merged while the result
/// stays free of monochromatic `C_n`, then isolated vertices of the base graph
/// are removed. Vertices carrying edges are kept: dropping one would weaken
/// the certified lower bound.
pub fn counterexample_minimize(col: &EdgeColoring, n: usize) -> Result<EdgeColoring> {
    if !verify_mono_cycle_free_exhaustive(col, n)?.is_free() {
        return Err(Error::NotACounterexample { n });
    }
    let mut current = compact_colors(col)?;
    'merge: loop {
        let k = current.k();
        for target in 1..=k {
            for source in target + 1..=k {
                let merged = merge_colors(&current, source, target)?;
                if verify_mono_cycle_free_exhaustive(&merged, n)?.is_free() {
                    current = merged;
                    continue 'merge;
                }
            }
        }
        break;
    }
    let base = current.base();
    let busy: Vec<usize> = (0..base.vertex_count())
        .filter(|&v| base.degree(v) > 0)
        .collect();
    if busy.len() < base.vertex_count() {
        current = current.restrict(&busy)?.0;
    }
    Ok(current)
}

/// Relabels the colors that occur to `1..=k'` preserving their order.
fn compact_colors(col: &EdgeColoring) -> Result<EdgeColoring> {
    let sizes = col.class_sizes();
    let mut relabel = alloc::vec![0; col.k() + 1];
    let mut next = 0;
    for (i, &s) in sizes.iter().enumerate() {
        if s > 0 {
            next += 1;
            relabel[i + 1] = next;
        }
    }
    EdgeColoring::new(
        col.base().clone(),
        next.max(1),
        col.colors().iter().map(|&c| relabel[c]).collect(),
    )
}

fn merge_colors(col: &EdgeColoring, source: usize, target: usize) -> Result<EdgeColoring> {
    let recolored = EdgeColoring::new(
        col.base().clone(),
        col.k(),
        col.colors()
            .iter()
            .map(|&c| if c == source { target } else { c })
            .collect(),
    )?;
    compact_colors(&recolored)
}
