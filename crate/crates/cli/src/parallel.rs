//! Exhaustive search split into independent subtrees.
//!
//! The first `depth` edges are enumerated up front; each live prefix is then
//! searched on its own. Any counterexample decides the run. Subtrees cut short
//! by the node budget stay open and can be saved as a checkpoint.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use monocycle_core::search::{
    finish, RamseyProblem, SearchLimits, SearchStats, SubtreeOutcome, Verdict,
};
use monocycle_core::{EdgeColoring, Error};
use rayon::prelude::*;

#[derive(Clone, Debug)]
pub struct ParallelConfig {
    pub threads: usize,
    pub node_budget: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParallelVerdict {
    AllContain,
    Counterexample(EdgeColoring),
    /// Budget ran out; these prefixes were not finished.
    Indeterminate {
        open: Vec<Vec<u8>>,
    },
}

#[derive(Clone, Debug)]
pub struct ParallelOutcome {
    pub verdict: ParallelVerdict,
    pub stats: SearchStats,
    pub subtrees: usize,
    pub wall: Duration,
}

enum Slot {
    Done,
    Found(Vec<u8>),
    Open,
}

fn explore(
    problem: &RamseyProblem,
    prefix: &[u8],
    limits: &SearchLimits<'_>,
    cancel: &AtomicBool,
) -> (Slot, SearchStats) {
    match problem.search_subtree(prefix, limits) {
        Ok((SubtreeOutcome::Exhausted, s)) => (Slot::Done, s),
        Ok((SubtreeOutcome::Counterexample(colors), s)) => {
            cancel.store(true, Ordering::Relaxed);
            (Slot::Found(colors), s)
        }
        Ok((SubtreeOutcome::Cancelled, s)) => (Slot::Open, s),
        Err(Error::BudgetExceeded { stats }) => {
            cancel.store(true, Ordering::Relaxed);
            (Slot::Open, stats)
        }
        Err(e) => panic!("subtree search failed: {e}"),
    }
}

/// Searches every subtree below `prefixes`.
///
/// With one thread the subtrees run in order and the counterexample is the
/// first in search order. With more threads the verdict is the same but the
/// counterexample may differ.
pub fn search_prefixes(
    problem: &RamseyProblem,
    prefixes: &[Vec<u8>],
    config: &ParallelConfig,
) -> Result<ParallelOutcome, Error> {
    let start = Instant::now();
    let cancel = AtomicBool::new(false);
    let shared = AtomicU64::new(0);
    let limits = SearchLimits {
        node_budget: config.node_budget,
        order: Default::default(),
        cancel: Some(&cancel),
        shared_nodes: Some(&shared),
    };
    let slots: Vec<(Slot, SearchStats)> = if config.threads <= 1 {
        let mut out = Vec::with_capacity(prefixes.len());
        for p in prefixes {
            if cancel.load(Ordering::Relaxed) {
                out.push((Slot::Open, SearchStats::default()));
            } else {
                out.push(explore(problem, p, &limits, &cancel));
            }
        }
        out
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.threads)
            .build()
            .map_err(|_| Error::InvalidParams("could not start worker threads"))?;
        pool.install(|| {
            prefixes
                .par_iter()
                .map(|p| explore(problem, p, &limits, &cancel))
                .collect()
        })
    };

    let mut stats = SearchStats::default();
    for (_, s) in &slots {
        stats.merge(s);
    }
    let found = slots.iter().find_map(|(slot, _)| match slot {
        Slot::Found(colors) => Some(colors.clone()),
        _ => None,
    });
    let verdict = match found {
        Some(colors) => {
            match finish(problem, SubtreeOutcome::Counterexample(colors), stats)?.verdict {
                Verdict::Counterexample(col) => ParallelVerdict::Counterexample(col),
                Verdict::AllContain => unreachable!(),
            }
        }
        None => {
            let open: Vec<Vec<u8>> = prefixes
                .iter()
                .zip(&slots)
                .filter(|(_, (slot, _))| matches!(slot, Slot::Open))
                .map(|(p, _)| p.clone())
                .collect();
            if open.is_empty() {
                ParallelVerdict::AllContain
            } else {
                ParallelVerdict::Indeterminate { open }
            }
        }
    };
    Ok(ParallelOutcome {
        verdict,
        stats,
        subtrees: prefixes.len(),
        wall: start.elapsed(),
    })
}

/// Splits at `depth` and searches, counting the split itself in the stats.
pub fn parallel_search(
    problem: &RamseyProblem,
    depth: usize,
    config: &ParallelConfig,
) -> Result<ParallelOutcome, Error> {
    let (prefixes, split_stats) = problem.open_prefixes(depth);
    let mut outcome = search_prefixes(problem, &prefixes, config)?;
    outcome.stats.merge(&split_stats);
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use monocycle_core::search::{ramsey_check, EdgeOrder};

    fn problem(k: usize, n: usize, vertices: usize) -> RamseyProblem {
        RamseyProblem::new(k, n, vertices, EdgeOrder::Lexicographic).unwrap()
    }

    #[test]
    fn verdicts_agree_across_thread_counts() {
        for (k, n, v) in [(2, 4, 5), (2, 4, 6), (2, 5, 8), (2, 3, 6)] {
            let single = ramsey_check(k, n, v, &SearchLimits::default()).unwrap();
            for threads in [1, 2, 4] {
                let config = ParallelConfig {
                    threads,
                    node_budget: None,
                };
                let out = parallel_search(&problem(k, n, v), 6, &config).unwrap();
                match (&single.verdict, &out.verdict) {
                    (Verdict::AllContain, ParallelVerdict::AllContain) => {}
                    (Verdict::Counterexample(a), ParallelVerdict::Counterexample(b)) => {
                        if threads == 1 {
                            assert_eq!(a, b);
                        }
                    }
                    other => panic!("({k},{n},{v}) threads={threads}: {other:?}"),
                }
            }
        }
    }

    #[test]
    fn budget_leaves_open_prefixes() {
        let config = ParallelConfig {
            threads: 1,
            node_budget: Some(10_000),
        };
        let p = problem(2, 6, 8);
        let out = parallel_search(&p, 4, &config).unwrap();
        let ParallelVerdict::Indeterminate { open } = out.verdict else {
            panic!("expected an indeterminate run");
        };
        assert!(!open.is_empty());
        let rest = search_prefixes(
            &p,
            &open,
            &ParallelConfig {
                threads: 2,
                node_budget: None,
            },
        )
        .unwrap();
        assert_eq!(rest.verdict, ParallelVerdict::AllContain);
    }
}
