//! The bipartite/sparse decomposition `(V1, V2, V3)` and min-degree peeling.
//!
//! `V1`/`V2` is the bipartition of the union of the bipartite components and
//! `V3` (the sparse set) is the union of the non-bipartite components. When no
//! non-bipartite component has a matching of `ceil(n/2)` edges, every
//! component of `G[V3]` has no cycle longer than `n`, so the Erdős–Gallai
//! bound caps `e(G[V3])` at `n(|V3|-1)/2`.

use alloc::vec::Vec;

use crate::components::{component_partition, components, is_valid_bipartition};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{int, Rational};

/// Smallest matching size that counts as "at least n/2 edges".
#[inline]
pub fn half_matching_threshold(n: usize) -> usize {
    n.div_ceil(2)
}

/// Outcome of the independent re-check run on every decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecompositionChecks {
    pub partition: bool,
    /// No edge between `V1 ∪ V2` and `V3`.
    pub no_cross_edges: bool,
    /// `G[V1 ∪ V2]` is bipartite with sides `(V1, V2)`.
    pub bipartition: bool,
    pub sparse_components_nonbipartite: bool,
    /// Holds vacuously when the matching hypothesis fails.
    pub sparse_bound: bool,
}

impl DecompositionChecks {
    pub fn all(&self) -> bool {
        self.partition
            && self.no_cross_edges
            && self.bipartition
            && self.sparse_components_nonbipartite
            && self.sparse_bound
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlDecomposition {
    pub n: usize,
    pub v1: Vec<usize>,
    pub v2: Vec<usize>,
    /// The sparse set.
    pub v3: Vec<usize>,
    /// No non-bipartite component has a matching of `ceil(n/2)` edges.
    pub hypothesis_holds: bool,
    /// Largest matching number over the non-bipartite components.
    pub max_sparse_matching: usize,
    pub sparse_edge_count: usize,
    /// `n(|V3|-1)/2`, possibly half-integral.
    pub sparse_bound: Rational,
    pub checks: DecompositionChecks,
}

impl FlDecomposition {
    /// Per-vertex side: 1, 2 or 3.
    pub fn side_of(&self, vertex_count: usize) -> Vec<u8> {
        let mut side = alloc::vec![0u8; vertex_count];
        for (set, tag) in [(&self.v1, 1), (&self.v2, 2), (&self.v3, 3)] {
            for &v in set {
                side[v] = tag;
            }
        }
        side
    }

    /// Re-derives every structural condition from `graph` alone.
    pub fn validate(&self, graph: &Graph) -> DecompositionChecks {
        let nv = graph.vertex_count();
        let mut count = alloc::vec![0u8; nv];
        for &v in self.v1.iter().chain(&self.v2).chain(&self.v3) {
            if v < nv {
                count[v] += 1;
            }
        }
        let partition =
            count.iter().all(|&c| c == 1) && self.v1.len() + self.v2.len() + self.v3.len() == nv;
        let side = self.side_of(nv);
        let no_cross_edges = graph
            .edges()
            .iter()
            .all(|&(u, v)| (side[u] == 3) == (side[v] == 3));
        let bipartition = is_valid_bipartition(graph, &self.v1, &self.v2);
        let sparse = graph
            .induced_subgraph(&self.v3)
            .expect("V3 is in range")
            .graph;
        let sparse_components_nonbipartite = component_partition(&sparse)
            .components
            .iter()
            .all(|c| !c.is_bipartite());
        let sparse_bound = !self.hypothesis_holds
            || int(sparse.edge_count()) <= sparse_bound_for(self.n, self.v3.len());
        DecompositionChecks {
            partition,
            no_cross_edges,
            bipartition,
            sparse_components_nonbipartite,
            sparse_bound,
        }
    }
}

/// `n(m-1)/2` for a sparse set of `m` vertices (zero when `m` is zero).
pub fn sparse_bound_for(n: usize, m: usize) -> Rational {
    int(n * m.saturating_sub(1)) / int(2)
}

/// Splits `graph` into bipartite sides and the sparse set.
pub fn fl_decompose(graph: &Graph, n: usize) -> Result<FlDecomposition> {
    if n < 3 {
        return Err(Error::CycleTooShort { length: n });
    }
    let report = components(graph);
    let mut v1 = Vec::new();
    let mut v2 = Vec::new();
    let mut v3 = Vec::new();
    let mut max_sparse_matching = 0;
    for comp in &report.components {
        match &comp.bipartition {
            Some((a, b)) => {
                v1.extend_from_slice(a);
                v2.extend_from_slice(b);
            }
            None => {
                v3.extend_from_slice(&comp.vertices);
                max_sparse_matching = max_sparse_matching.max(comp.matching_size);
            }
        }
    }
    v1.sort_unstable();
    v2.sort_unstable();
    v3.sort_unstable();
    let mut in_v3 = alloc::vec![false; graph.vertex_count()];
    for &v in &v3 {
        in_v3[v] = true;
    }
    let mut out = FlDecomposition {
        n,
        hypothesis_holds: max_sparse_matching < half_matching_threshold(n),
        max_sparse_matching,
        sparse_edge_count: graph.edges_within(&in_v3),
        sparse_bound: sparse_bound_for(n, v3.len()),
        v1,
        v2,
        v3,
        checks: DecompositionChecks {
            partition: false,
            no_cross_edges: false,
            bipartition: false,
            sparse_components_nonbipartite: false,
            sparse_bound: false,
        },
    };
    out.checks = out.validate(graph);
    debug_assert!(out.checks.all(), "decomposition failed its own checks");
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelResult {
    pub graph: Graph,
    /// `kept[local]` is the input id of `local`.
    pub kept: Vec<usize>,
    pub log: Vec<PeelLogEntry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PeelLogEntry {
    pub vertex: usize,
    pub degree: usize,
    /// Edges and vertices just before the removal.
    pub edges_before: usize,
    pub vertices_before: usize,
}

impl PeelLogEntry {
    /// `degree <= 2e/v`, checked without division.
    pub fn at_most_average(&self) -> bool {
        self.degree * self.vertices_before <= 2 * self.edges_before
    }
}

/// Deletes minimum-degree vertices (smallest id on ties) until `target` remain.
pub fn min_degree_peel(graph: &Graph, target: usize) -> Result<PeelResult> {
    let nv = graph.vertex_count();
    if target > nv {
        return Err(Error::TargetTooLarge {
            target,
            vertex_count: nv,
        });
    }
    let mut degree: Vec<usize> = (0..nv).map(|v| graph.degree(v)).collect();
    let mut alive = alloc::vec![true; nv];
    let mut edges = graph.edge_count();
    let mut log = Vec::with_capacity(nv - target);
    for remaining in (target + 1..=nv).rev() {
        let victim = (0..nv)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (degree[v], v))
            .expect("a vertex remains");
        log.push(PeelLogEntry {
            vertex: victim,
            degree: degree[victim],
            edges_before: edges,
            vertices_before: remaining,
        });
        alive[victim] = false;
        edges -= degree[victim];
        for &w in graph.neighbors(victim) {
            if alive[w] {
                degree[w] -= 1;
            }
        }
    }
    let kept: Vec<usize> = (0..nv).filter(|&v| alive[v]).collect();
    let sub = graph.induced_subgraph(&kept)?;
    debug_assert_eq!(sub.graph.edge_count(), edges);
    Ok(PeelResult {
        graph: sub.graph,
        kept,
        log,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use alloc::vec;

    #[test]
    fn forest_has_empty_sparse_set() {
        let g = Graph::path(6);
        let d = fl_decompose(&g, 5).unwrap();
        assert!(d.v3.is_empty());
        assert!(d.hypothesis_holds);
        assert!(d.checks.all());
        assert_eq!(d.v1.len() + d.v2.len(), 6);
    }

    #[test]
    fn triangle_sits_on_the_boundary() {
        let d = fl_decompose(&Graph::complete(3), 3).unwrap();
        assert_eq!(d.v3, vec![0, 1, 2]);
        assert_eq!(d.max_sparse_matching, 1);
        assert!(d.hypothesis_holds);
        assert_eq!(d.sparse_edge_count, 3);
        assert_eq!(d.sparse_bound, int(3));
        assert!(d.checks.all());
    }

    #[test]
    fn k4_with_c6() {
        let g = Graph::complete(4).disjoint_union(&Graph::cycle(6).unwrap());
        let d = fl_decompose(&g, 7).unwrap();
        assert_eq!(d.v3, vec![0, 1, 2, 3]);
        assert_eq!(d.v1, vec![4, 6, 8]);
        assert_eq!(d.v2, vec![5, 7, 9]);
        assert!(d.hypothesis_holds);
        assert_eq!(d.sparse_edge_count, 6);
        assert_eq!(d.sparse_bound, ratio(21, 2));
    }

    #[test]
    fn hypothesis_can_fail() {
        // K_6 has a perfect matching of 3 >= ceil(5/2).
        let d = fl_decompose(&Graph::complete(6), 5).unwrap();
        assert!(!d.hypothesis_holds);
        assert_eq!(d.sparse_edge_count, 15);
        // 15 > 5*5/2, but (C) is only demanded under the hypothesis.
        assert!(d.checks.sparse_bound);
        assert_eq!(
            fl_decompose(&Graph::complete(6), 2),
            Err(Error::CycleTooShort { length: 2 })
        );
    }

    #[test]
    fn validate_catches_bad_sides() {
        let g = Graph::cycle(4).unwrap();
        let mut d = fl_decompose(&g, 3).unwrap();
        d.v1 = vec![0, 1];
        d.v2 = vec![2, 3];
        assert!(!d.validate(&g).bipartition);
        d.v3 = vec![0];
        assert!(!d.validate(&g).partition);
    }

    #[test]
    fn peel_complete() {
        let r = min_degree_peel(&Graph::complete(5), 3).unwrap();
        assert_eq!(r.graph, Graph::complete(3));
        assert_eq!(r.log.len(), 2);
        assert_eq!((r.log[0].vertex, r.log[0].degree), (0, 4));
        assert_eq!((r.log[1].vertex, r.log[1].degree), (1, 3));
    }

    #[test]
    fn peel_star_removes_leaves() {
        let star = Graph::new(6, (1..6).map(|v| (0, v))).unwrap();
        let r = min_degree_peel(&star, 3).unwrap();
        assert!(r.log.iter().all(|s| s.degree == 1 && s.vertex != 0));
        assert_eq!(r.kept, vec![0, 4, 5]);
        assert_eq!(r.graph, Graph::new(3, [(0, 1), (0, 2)]).unwrap());
        assert!(r.log.iter().all(PeelLogEntry::at_most_average));
    }

    #[test]
    fn peel_target_too_large() {
        assert_eq!(
            min_degree_peel(&Graph::complete(3), 4),
            Err(Error::TargetTooLarge {
                target: 4,
                vertex_count: 3
            })
        );
        let same = min_degree_peel(&Graph::cycle(4).unwrap(), 4).unwrap();
        assert!(same.log.is_empty());
    }
}
