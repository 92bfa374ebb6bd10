//! Maximum-cardinality matching in general graphs (Edmonds' blossom search).

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use crate::graph::{normalize, Edge, Graph};

const NONE: usize = usize::MAX;

/// A set of pairwise vertex-disjoint edges.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MatchingCertificate {
    /// Normalized and sorted.
    pub edges: Vec<Edge>,
}

impl MatchingCertificate {
    #[inline]
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Every edge lies in `graph` and no two share an endpoint.
    pub fn is_valid_for(&self, graph: &Graph) -> bool {
        let mut used = alloc::vec![false; graph.vertex_count()];
        for &(u, v) in &self.edges {
            if !graph.has_edge(u, v) || used[u] || used[v] {
                return false;
            }
            used[u] = true;
            used[v] = true;
        }
        true
    }

    /// The first `size` edges, or `None` if there are fewer.
    pub fn truncated(&self, size: usize) -> Option<MatchingCertificate> {
        (size <= self.edges.len()).then(|| MatchingCertificate {
            edges: self.edges[..size].to_vec(),
        })
    }
}

/// Returns a maximum matching of `graph`.
pub fn max_matching(graph: &Graph) -> MatchingCertificate {
    let mut blossom = Blossom::new(graph);
    blossom.greedy();
    for root in 0..graph.vertex_count() {
        if blossom.mate[root] == NONE && graph.degree(root) > 0 {
            if let Some(end) = blossom.find_augmenting_path(root) {
                blossom.augment(end);
            }
        }
    }
    let mut edges: Vec<Edge> = (0..graph.vertex_count())
        .filter(|&v| blossom.mate[v] != NONE && v < blossom.mate[v])
        .map(|v| normalize(v, blossom.mate[v]))
        .collect();
    edges.sort_unstable();
    MatchingCertificate { edges }
}

/// Matching number of `graph`.
pub fn matching_number(graph: &Graph) -> usize {
    max_matching(graph).size()
}

struct Blossom<'a> {
    graph: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(graph: &'a Graph) -> Self {
        let n = graph.vertex_count();
        Blossom {
            graph,
            mate: alloc::vec![NONE; n],
            parent: alloc::vec![NONE; n],
            base: (0..n).collect(),
            used: alloc::vec![false; n],
            in_blossom: alloc::vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn greedy(&mut self) {
        for &(u, v) in self.graph.edges() {
            if self.mate[u] == NONE && self.mate[v] == NONE {
                self.mate[u] = v;
                self.mate[v] = u;
            }
        }
    }

    fn lowest_common_base(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = alloc::vec![false; self.graph.vertex_count()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, stem: usize, mut child: usize) {
        while self.base[v] != stem {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_augmenting_path(&mut self, root: usize) -> Option<usize> {
        let n = self.graph.vertex_count();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.graph.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // Odd cycle: contract it into a blossom.
                    let stem = self.lowest_common_base(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, stem, to);
                    self.mark_path(to, stem, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = stem;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}
