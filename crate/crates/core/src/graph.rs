//! Simple undirected graphs on dense vertex ids `0..vertex_count`.
//!
//! A [`Graph`] keeps its edges twice: as a sorted list of `(u, v)` pairs with
//! `u < v`, and as sorted per-vertex neighbor lists. Both are built together
//! and never mutated, so they cannot drift apart.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Undirected edge with `lo < hi`.
pub type Edge = (usize, usize);

#[derive(Clone)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertex_count", &self.vertex_count)
            .field("edges", &self.edges)
            .finish()
    }
}

/// Orders an endpoint pair so the smaller id comes first.
#[inline]
pub fn normalize(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// Builds a graph from an edge list in any order and orientation.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::LoopEdge { vertex: u });
            }
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            list.push(normalize(u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge {
                u: w[0].0,
                v: w[0].1,
            });
        }
        Ok(Self::from_sorted_unchecked(vertex_count, list))
    }

    /// `edges` must already be sorted, normalized, deduplicated and in range.
    pub(crate) fn from_sorted_unchecked(vertex_count: usize, edges: Vec<Edge>) -> Self {
        let mut adjacency = alloc::vec![Vec::new(); vertex_count];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            vertex_count,
            edges,
            adjacency,
        }
    }

    pub fn empty(vertex_count: usize) -> Self {
        Self::from_sorted_unchecked(vertex_count, Vec::new())
    }

    /// The complete graph `K_N`.
    pub fn complete(vertex_count: usize) -> Self {
        let mut edges = Vec::with_capacity(vertex_count * vertex_count.saturating_sub(1) / 2);
        for u in 0..vertex_count {
            for v in u + 1..vertex_count {
                edges.push((u, v));
            }
        }
        Self::from_sorted_unchecked(vertex_count, edges)
    }

    /// The cycle `C_n` on `0, 1, ..., n-1` in that order.
    pub fn cycle(length: usize) -> Result<Self> {
        if length < 3 {
            return Err(Error::CycleTooShort { length });
        }
        Self::new(length, (0..length).map(|i| (i, (i + 1) % length)))
    }

    /// The path on `0, 1, ..., n-1`.
    pub fn path(vertex_count: usize) -> Self {
        let edges = (1..vertex_count).map(|i| (i - 1, i)).collect();
        Self::from_sorted_unchecked(vertex_count, edges)
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut edges = Vec::with_capacity(a * b);
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Self::from_sorted_unchecked(a + b, edges)
    }

    /// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Self::new(10, edges).expect("petersen edges are valid")
    }

    /// Places `other` after `self`, shifting its ids by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        Self::from_sorted_unchecked(self.vertex_count + other.vertex_count, edges)
    }

    /// Returns a copy with one more edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        Graph::new(
            self.vertex_count,
            self.edges.iter().copied().chain(core::iter::once((u, v))),
        )
    }

    /// Returns a copy with the edge `uv` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let e = normalize(u, v);
        let idx = self
            .edge_index(e.0, e.1)
            .ok_or(Error::EdgeNotInGraph { u, v })?;
        let mut edges = self.edges.clone();
        edges.remove(idx);
        Ok(Self::from_sorted_unchecked(self.vertex_count, edges))
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted, normalized edge list.
    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count
            && v < self.vertex_count
            && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Position of `uv` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&normalize(u, v)).ok()
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.vertex_count * self.vertex_count.saturating_sub(1) / 2
    }

    /// `G[W]`, relabeled to `0..|W|` in increasing order of parent id.
    ///
    /// Duplicates in `vertices` are ignored.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<InducedSubgraph> {
        let mut parent_ids = vertices.to_vec();
        parent_ids.sort_unstable();
        parent_ids.dedup();
        if let Some(&bad) = parent_ids.iter().find(|&&v| v >= self.vertex_count) {
            return Err(Error::VertexOutOfRange {
                vertex: bad,
                vertex_count: self.vertex_count,
            });
        }
        let mut local = alloc::vec![usize::MAX; self.vertex_count];
        for (i, &v) in parent_ids.iter().enumerate() {
            local[v] = i;
        }
        // Parent edges are sorted and the relabeling is monotone, so the
        // filtered list stays sorted.
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| local[u] != usize::MAX && local[v] != usize::MAX)
            .map(|&(u, v)| (local[u], local[v]))
            .collect();
        Ok(InducedSubgraph {
            graph: Self::from_sorted_unchecked(parent_ids.len(), edges),
            parent_ids,
        })
    }

    /// Number of edges with both ends in `vertices` (given as a membership mask).
    pub fn edges_within(&self, members: &[bool]) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| members[u] && members[v])
            .count()
    }
}

/// An induced subgraph together with the map back to parent ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `parent_ids[local]` is the parent id of local vertex `local`.
    pub parent_ids: Vec<usize>,
}

impl InducedSubgraph {
    #[inline]
    pub fn lift(&self, local: usize) -> usize {
        self.parent_ids[local]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn triangle_from_edges() {
        let g = Graph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g, Graph::complete(3));
        assert_eq!(g, Graph::cycle(3).unwrap());
    }

    #[test]
    fn build_errors() {
        assert_eq!(Graph::new(4, [(0, 0)]), Err(Error::LoopEdge { vertex: 0 }));
        assert_eq!(
            Graph::new(4, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge { u: 0, v: 1 })
        );
        assert_eq!(
            Graph::new(4, [(0, 4)]),
            Err(Error::VertexOutOfRange {
                vertex: 4,
                vertex_count: 4
            })
        );
    }

    #[test]
    fn edge_order_is_irrelevant() {
        let a = Graph::new(4, [(3, 2), (0, 1), (2, 0)]).unwrap();
        let b = Graph::new(4, [(0, 2), (2, 3), (1, 0)]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn cycle_constructor() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!((c5.vertex_count(), c5.edge_count()), (5, 5));
        assert!((0..5).all(|v| c5.degree(v) == 2));
        assert_eq!(Graph::cycle(2), Err(Error::CycleTooShort { length: 2 }));
    }

    #[test]
    fn complete_counts() {
        assert_eq!(Graph::complete(6).edge_count(), 15);
        assert_eq!(Graph::complete(0).edge_count(), 0);
        assert_eq!(Graph::complete_bipartite(4, 4).edge_count(), 16);
        assert_eq!(Graph::petersen().edge_count(), 15);
        assert!((0..10).all(|v| Graph::petersen().degree(v) == 3));
    }

    #[test]
    fn induced_cases() {
        let k4 = Graph::complete(4);
        let sub = k4.induced_subgraph(&[3, 0, 2]).unwrap();
        assert_eq!(sub.graph, Graph::complete(3));
        assert_eq!(sub.parent_ids, vec![0, 2, 3]);

        let c5 = Graph::cycle(5).unwrap();
        let path = c5.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(path.graph, Graph::path(3));

        let empty = c5.induced_subgraph(&[]).unwrap();
        assert_eq!(empty.graph, Graph::empty(0));

        assert!(matches!(
            c5.induced_subgraph(&[7]),
            Err(Error::VertexOutOfRange { vertex: 7, .. })
        ));

        let all: Vec<usize> = (0..5).collect();
        assert_eq!(c5.induced_subgraph(&all).unwrap().graph, c5);
    }

    #[test]
    fn edit_edges() {
        let c4 = Graph::cycle(4).unwrap();
        let chord = c4.with_edge(0, 2).unwrap();
        assert_eq!(chord.edge_count(), 5);
        assert!(chord.has_edge(2, 0));
        assert_eq!(chord.without_edge(2, 0).unwrap(), c4);
        assert!(c4.with_edge(1, 0).is_err());
    }
}
