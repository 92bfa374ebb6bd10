//! Adjacency bitmasks for graphs on at most 64 vertices.

pub(crate) const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Is there a path `from -> to` with exactly `edges` edges on distinct
/// vertices, avoiding `blocked`? `from` and `to` must not be in `blocked`.
pub(crate) fn has_path(adj: &[u64], from: usize, to: usize, edges: usize, blocked: u64) -> bool {
    if edges == 1 {
        return adj[from] & bit(to) != 0;
    }
    let blocked = blocked | bit(from);
    let mut frontier = adj[from] & !blocked & !bit(to);
    if edges == 2 {
        return frontier & adj[to] != 0;
    }
    while frontier != 0 {
        let w = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        if has_path(adj, w, to, edges - 1, blocked) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn masks(n: usize, edges: &[(usize, usize)]) -> Vec<u64> {
        let mut adj = alloc::vec![0u64; n];
        for &(u, v) in edges {
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        adj
    }

    #[test]
    fn paths_in_c5() {
        let adj = masks(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert!(has_path(&adj, 0, 1, 1, 0));
        assert!(has_path(&adj, 0, 1, 4, 0));
        assert!(!has_path(&adj, 0, 1, 2, 0));
        assert!(!has_path(&adj, 0, 1, 3, 0));
        assert!(!has_path(&adj, 0, 1, 4, bit(3)));
    }
}
