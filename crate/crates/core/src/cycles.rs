//! Exact cycle queries for desk-scale graphs, and the Erdős–Gallai edge threshold.
//!
//! Both searches enumerate each cycle from its smallest vertex `s`, so only
//! vertices `>= s` are ever visited from that root.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Distinct vertices listed in cyclic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleCertificate {
    pub vertices: Vec<usize>,
}

impl CycleCertificate {
    #[inline]
    pub fn length(&self) -> usize {
        self.vertices.len()
    }

    /// At least three distinct vertices, cyclically adjacent in `graph`.
    pub fn is_valid_for(&self, graph: &Graph) -> bool {
        let len = self.vertices.len();
        if len < 3 {
            return false;
        }
        let mut seen = alloc::vec![false; graph.vertex_count()];
        for &v in &self.vertices {
            if v >= graph.vertex_count() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        (0..len).all(|i| graph.has_edge(self.vertices[i], self.vertices[(i + 1) % len]))
    }

    /// Consecutive cycle edges `(v0,v1), (v1,v2), ...`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let len = self.vertices.len();
        (0..len).map(move |i| (self.vertices[i], self.vertices[(i + 1) % len]))
    }

    /// Maps local ids through `parent_ids`.
    pub fn lifted(&self, parent_ids: &[usize]) -> CycleCertificate {
        CycleCertificate {
            vertices: self.vertices.iter().map(|&v| parent_ids[v]).collect(),
        }
    }
}

/// Minimum edge count that forces a cycle of length at least `n` on `v` vertices:
/// `floor((n-1)(v-1)/2) + 1`.
pub fn eg_threshold(n: usize, v: usize) -> usize {
    (n - 1) * v.saturating_sub(1) / 2 + 1
}

/// A cycle on exactly `n` vertices, if `graph` has one.
pub fn contains_cycle_of_length(graph: &Graph, n: usize) -> Result<Option<CycleCertificate>> {
    if n < 3 {
        return Err(Error::CycleTooShort { length: n });
    }
    let v = graph.vertex_count();
    if n > v || graph.edge_count() < n {
        return Ok(None);
    }
    let mut search = FixedLength {
        graph,
        target: n,
        root: 0,
        dist: alloc::vec![usize::MAX; v],
        on_path: alloc::vec![false; v],
        path: Vec::with_capacity(n),
    };
    for root in 0..=v - n {
        if graph.degree(root) < 2 {
            continue;
        }
        search.root = root;
        bfs_distances(graph, root, &mut search.dist);
        search.path.clear();
        search.path.push(root);
        search.on_path[root] = true;
        let found = search.extend(root);
        search.on_path[root] = false;
        if found {
            return Ok(Some(CycleCertificate {
                vertices: search.path.clone(),
            }));
        }
    }
    Ok(None)
}

/// BFS from `root` over vertices `>= root`.
fn bfs_distances(graph: &Graph, root: usize, dist: &mut [usize]) {
    dist.iter_mut().for_each(|d| *d = usize::MAX);
    let mut queue = VecDeque::new();
    dist[root] = 0;
    queue.push_back(root);
    while let Some(x) = queue.pop_front() {
        for &y in graph.neighbors(x) {
            if y > root && dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
}

struct FixedLength<'a> {
    graph: &'a Graph,
    target: usize,
    root: usize,
    dist: Vec<usize>,
    on_path: Vec<bool>,
    path: Vec<usize>,
}

impl FixedLength<'_> {
    fn extend(&mut self, tip: usize) -> bool {
        let len = self.path.len();
        if len == self.target {
            return self.graph.has_edge(tip, self.root);
        }
        // After stepping to `next` the path has len+1 vertices and needs
        // target-len-1 more plus the closing edge.
        let budget = self.target - len;
        for &next in self.graph.neighbors(tip) {
            if next <= self.root || self.on_path[next] || self.dist[next] > budget {
                continue;
            }
            self.on_path[next] = true;
            self.path.push(next);
            if self.extend(next) {
                return true;
            }
            self.path.pop();
            self.on_path[next] = false;
        }
        false
    }
}

/// A longest cycle, or `None` for a forest.
pub fn longest_cycle(graph: &Graph) -> Option<CycleCertificate> {
    let v = graph.vertex_count();
    let mut search = Longest {
        graph,
        root: 0,
        on_path: alloc::vec![false; v],
        path: Vec::new(),
        best: Vec::new(),
        stamp: alloc::vec![0; v],
        epoch: 0,
        stack: Vec::new(),
    };
    for root in 0..v {
        // Every cycle rooted here lives in root..v.
        if v - root <= search.best.len() {
            break;
        }
        if graph.degree(root) < 2 {
            continue;
        }
        search.root = root;
        search.path.clear();
        search.path.push(root);
        search.on_path[root] = true;
        search.extend(root);
        search.on_path[root] = false;
        if search.best.len() == v {
            break;
        }
    }
    (!search.best.is_empty()).then_some(CycleCertificate {
        vertices: search.best,
    })
}

struct Longest<'a> {
    graph: &'a Graph,
    root: usize,
    on_path: Vec<bool>,
    path: Vec<usize>,
    best: Vec<usize>,
    stamp: Vec<u64>,
    epoch: u64,
    stack: Vec<usize>,
}

impl Longest<'_> {
    /// Vertices reachable from `tip` through admissible off-path vertices.
    fn reachable_off_path(&mut self, tip: usize) -> usize {
        self.epoch += 1;
        let epoch = self.epoch;
        self.stack.clear();
        self.stack.push(tip);
        let mut count = 0;
        while let Some(x) = self.stack.pop() {
            for &y in self.graph.neighbors(x) {
                if y > self.root && !self.on_path[y] && self.stamp[y] != epoch {
                    self.stamp[y] = epoch;
                    count += 1;
                    self.stack.push(y);
                }
            }
        }
        count
    }

    fn extend(&mut self, tip: usize) {
        let len = self.path.len();
        if len >= 3 && len > self.best.len() && self.graph.has_edge(tip, self.root) {
            self.best.clone_from(&self.path);
        }
        if len + self.reachable_off_path(tip) <= self.best.len() {
            return;
        }
        for i in 0..self.graph.degree(tip) {
            let next = self.graph.neighbors(tip)[i];
            if next <= self.root || self.on_path[next] {
                continue;
            }
            self.on_path[next] = true;
            self.path.push(next);
            self.extend(next);
            self.path.pop();
            self.on_path[next] = false;
            if self.best.len() == self.graph.vertex_count() - self.root {
                return;
            }
        }
    }
}
