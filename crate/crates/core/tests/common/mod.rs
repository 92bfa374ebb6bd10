//! Brute-force oracles and random instance generators shared by the suites.
//!
//! Nothing here calls into the matching, cycle or search code under test.

#![allow(dead_code)]

use monocycle_core::{EdgeColoring, Graph};
use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> SmallRng {
    SmallRng::seed_from_u64(seed)
}

/// Adjacency matrix as bitmasks.
pub fn masks(g: &Graph) -> Vec<u64> {
    let mut adj = vec![0u64; g.vertex_count()];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

/// Matching number by enumerating every matching: the lowest free vertex is
/// either left unmatched or matched to each free neighbor in turn.
pub fn brute_matching_number(g: &Graph) -> usize {
    fn go(adj: &[u64], free: u64) -> usize {
        if free == 0 {
            return 0;
        }
        let v = free.trailing_zeros() as usize;
        let rest = free & !(1 << v);
        let mut best = go(adj, rest);
        let mut nbrs = adj[v] & rest;
        while nbrs != 0 {
            let u = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            best = best.max(1 + go(adj, rest & !(1 << u)));
        }
        best
    }
    let n = g.vertex_count();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    go(&masks(g), all)
}

/// Whether `g` has a cycle on exactly `len` vertices, by trying every
/// ordering of every vertex subset with a fixed first element.
pub fn brute_has_cycle(g: &Graph, len: usize) -> bool {
    let n = g.vertex_count();
    if len < 3 || len > n {
        return false;
    }
    let adj = masks(g);
    let mut subset: Vec<usize> = Vec::with_capacity(len);
    fn choose(adj: &[u64], n: usize, len: usize, start: usize, subset: &mut Vec<usize>) -> bool {
        if subset.len() == len {
            return permutations_close(adj, subset);
        }
        for v in start..n {
            subset.push(v);
            if choose(adj, n, len, v + 1, subset) {
                return true;
            }
            subset.pop();
        }
        false
    }
    choose(&adj, n, len, 0, &mut subset)
}

fn permutations_close(adj: &[u64], set: &[usize]) -> bool {
    // Heap's algorithm over set[1..]; set[0] anchors the rotation.
    let mut order: Vec<usize> = set.to_vec();
    let m = order.len() - 1;
    let mut c = vec![0usize; m];
    let closes = |o: &[usize]| (0..o.len()).all(|i| adj[o[i]] & (1 << o[(i + 1) % o.len()]) != 0);
    if closes(&order) {
        return true;
    }
    let mut i = 0;
    while i < m {
        if c[i] < i {
            if i % 2 == 0 {
                order.swap(1, 1 + i);
            } else {
                order.swap(1 + c[i], 1 + i);
            }
            if closes(&order) {
                return true;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    false
}

/// Circumference by brute force, 0 for forests.
pub fn brute_longest_cycle(g: &Graph) -> usize {
    (3..=g.vertex_count())
        .rev()
        .find(|&l| brute_has_cycle(g, l))
        .unwrap_or(0)
}

/// The labeled graph on `n` vertices whose edge `i` (canonical order) is
/// present iff bit `i` of `code` is set.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let all = Graph::complete(n);
    let edges = all
        .edges()
        .iter()
        .enumerate()
        .filter(|(i, _)| code >> i & 1 == 1)
        .map(|(_, &e)| e);
    Graph::new(n, edges).unwrap()
}

/// G(n, p) with `p = num / 1000`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, permille: u32) -> Graph {
    let edges: Vec<_> = Graph::complete(n)
        .edges()
        .iter()
        .copied()
        .filter(|_| rng.gen_range(0..1000) < permille)
        .collect();
    Graph::new(n, edges).unwrap()
}

pub fn random_coloring<R: Rng>(rng: &mut R, base: Graph, k: usize) -> EdgeColoring {
    let colors = (0..base.edge_count())
        .map(|_| rng.gen_range(1..=k))
        .collect();
    EdgeColoring::new(base, k, colors).unwrap()
}

/// Whether some color class contains `C_len`, by brute force.
pub fn brute_has_mono_cycle(col: &EdgeColoring, len: usize) -> bool {
    col.color_classes().iter().any(|g| brute_has_cycle(g, len))
}
