//! Total edge colorings with colors `1..=k`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{normalize, Edge, Graph, InducedSubgraph};

/// A `k`-coloring of every edge of `base`.
///
/// `colors[i]` is the color of `base.edges()[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    base: Graph,
    k: usize,
    colors: Vec<usize>,
}

impl EdgeColoring {
    pub fn new(base: Graph, k: usize, colors: Vec<usize>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParams("a coloring needs at least one color"));
        }
        if colors.len() != base.edge_count() {
            return Err(Error::ColoringSizeMismatch {
                expected: base.edge_count(),
                found: colors.len(),
            });
        }
        if let Some(&color) = colors.iter().find(|&&c| c == 0 || c > k) {
            return Err(Error::ColorOutOfRange { color, k });
        }
        Ok(EdgeColoring { base, k, colors })
    }

    /// Colors each edge of `base` with `f(u, v)` (`u < v`).
    pub fn from_fn<F>(base: Graph, k: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> usize,
    {
        let colors = base.edges().iter().map(|&(u, v)| f(u, v)).collect();
        Self::new(base, k, colors)
    }

    /// Builds the base graph and coloring from `(u, v, color)` triples.
    pub fn from_triples<I>(vertex_count: usize, k: usize, triples: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize)>,
    {
        let mut triples: Vec<(Edge, usize)> =
            triples.into_iter().map(|(u, v, c)| ((u, v), c)).collect();
        let base = Graph::new(vertex_count, triples.iter().map(|&(e, _)| e))?;
        for t in &mut triples {
            t.0 = normalize(t.0 .0, t.0 .1);
        }
        triples.sort_unstable();
        Self::new(base, k, triples.into_iter().map(|(_, c)| c).collect())
    }

    /// Colors every edge of `base` with color 1.
    pub fn monochromatic(base: Graph, k: usize) -> Result<Self> {
        let m = base.edge_count();
        Self::new(base, k, alloc::vec![1; m])
    }

    #[inline]
    pub fn base(&self) -> &Graph {
        &self.base
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.base.vertex_count()
    }

    #[inline]
    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// `(u, v, color)` in the canonical edge order.
    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.base
            .edges()
            .iter()
            .zip(&self.colors)
            .map(|(&(u, v), &c)| (u, v, c))
    }

    pub fn color_of(&self, u: usize, v: usize) -> Option<usize> {
        self.base.edge_index(u, v).map(|i| self.colors[i])
    }

    /// The spanning subgraph `G_i` of color-`i` edges.
    pub fn color_class(&self, color: usize) -> Result<Graph> {
        if color == 0 || color > self.k {
            return Err(Error::ColorOutOfRange { color, k: self.k });
        }
        let edges = self
            .triples()
            .filter(|&(_, _, c)| c == color)
            .map(|(u, v, _)| (u, v))
            .collect();
        Ok(Graph::from_sorted_unchecked(
            self.base.vertex_count(),
            edges,
        ))
    }

    /// All color classes, index `i` holding color `i + 1`.
    pub fn color_classes(&self) -> Vec<Graph> {
        let mut buckets = alloc::vec![Vec::new(); self.k];
        for (u, v, c) in self.triples() {
            buckets[c - 1].push((u, v));
        }
        buckets
            .into_iter()
            .map(|edges| Graph::from_sorted_unchecked(self.base.vertex_count(), edges))
            .collect()
    }

    /// Edge counts per color, index `i` holding color `i + 1`.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = alloc::vec![0; self.k];
        for &c in &self.colors {
            sizes[c - 1] += 1;
        }
        sizes
    }

    /// Copy with edge `uv` recolored.
    pub fn recolor(&self, u: usize, v: usize, color: usize) -> Result<Self> {
        let idx = self
            .base
            .edge_index(u, v)
            .ok_or(Error::EdgeNotInGraph { u, v })?;
        if color == 0 || color > self.k {
            return Err(Error::ColorOutOfRange { color, k: self.k });
        }
        let mut colors = self.colors.clone();
        colors[idx] = color;
        Ok(EdgeColoring {
            base: self.base.clone(),
            k: self.k,
            colors,
        })
    }

    /// Same edges and colors, with the palette widened or narrowed to `k`.
    pub fn with_color_count(&self, k: usize) -> Result<Self> {
        Self::new(self.base.clone(), k, self.colors.clone())
    }

    /// The coloring restricted to `G[W]`, with the relabeling map.
    pub fn restrict(&self, vertices: &[usize]) -> Result<(EdgeColoring, Vec<usize>)> {
        let InducedSubgraph { graph, parent_ids } = self.base.induced_subgraph(vertices)?;
        let colors = graph
            .edges()
            .iter()
            .map(|&(u, v)| {
                self.color_of(parent_ids[u], parent_ids[v])
                    .expect("induced edge exists in parent")
            })
            .collect();
        Ok((
            EdgeColoring {
                base: graph,
                k: self.k,
                colors,
            },
            parent_ids,
        ))
    }
}
