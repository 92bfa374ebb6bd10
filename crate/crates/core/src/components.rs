//! Connected components, bipartiteness and odd-cycle certificates.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use crate::cycles::CycleCertificate;
use crate::graph::Graph;
use crate::matching::max_matching;

/// One connected component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    /// Sorted parent-graph ids.
    pub vertices: Vec<usize>,
    /// `(A, B)` sides of a proper 2-coloring when the component is bipartite.
    pub bipartition: Option<(Vec<usize>, Vec<usize>)>,
    pub matching_size: usize,
}

impl Component {
    #[inline]
    pub fn is_bipartite(&self) -> bool {
        self.bipartition.is_some()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.vertices.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentReport {
    /// `component_of[v]` indexes into `components`.
    pub component_of: Vec<usize>,
    /// Ordered by smallest vertex.
    pub components: Vec<Component>,
}

/// Connectivity, BFS 2-coloring, and the matching number of each component.
pub fn components(graph: &Graph) -> ComponentReport {
    let mut report = component_partition(graph);
    for comp in &mut report.components {
        comp.matching_size = if comp.vertices.len() < 2 {
            0
        } else {
            let sub = graph
                .induced_subgraph(&comp.vertices)
                .expect("component vertices are in range");
            max_matching(&sub.graph).size()
        };
    }
    report
}

/// Like [`components`] but leaves `matching_size` at zero.
pub fn component_partition(graph: &Graph) -> ComponentReport {
    let n = graph.vertex_count();
    let mut component_of = alloc::vec![usize::MAX; n];
    let mut side = alloc::vec![0u8; n];
    let mut components = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if component_of[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut vertices = Vec::new();
        let mut bipartite = true;
        component_of[start] = id;
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            vertices.push(v);
            for &w in graph.neighbors(v) {
                if component_of[w] == usize::MAX {
                    component_of[w] = id;
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if side[w] == side[v] {
                    bipartite = false;
                }
            }
        }
        vertices.sort_unstable();
        let bipartition = bipartite.then(|| {
            vertices
                .iter()
                .partition::<Vec<usize>, _>(|&&v| side[v] == 0)
        });
        components.push(Component {
            vertices,
            bipartition,
            matching_size: 0,
        });
    }
    ComponentReport {
        component_of,
        components,
    }
}

/// Whether `graph` has no odd cycle.
pub fn is_bipartite(graph: &Graph) -> bool {
    component_partition(graph)
        .components
        .iter()
        .all(Component::is_bipartite)
}

/// Checks that `(a, b)` is a proper 2-coloring of `G[a ∪ b]`.
pub fn is_valid_bipartition(graph: &Graph, a: &[usize], b: &[usize]) -> bool {
    let mut side = alloc::vec![0u8; graph.vertex_count()];
    for &v in a {
        side[v] |= 1;
    }
    for &v in b {
        side[v] |= 2;
    }
    if side.contains(&3) {
        return false;
    }
    graph
        .edges()
        .iter()
        .all(|&(u, v)| side[u] == 0 || side[v] == 0 || side[u] != side[v])
}

/// An odd cycle through the component containing `start`, if it has one.
pub fn find_odd_cycle(graph: &Graph, start: usize) -> Option<CycleCertificate> {
    let n = graph.vertex_count();
    let mut parent = alloc::vec![usize::MAX; n];
    let mut depth = alloc::vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    depth[start] = 0;
    parent[start] = start;
    queue.push_back(start);
    while let Some(v) = queue.pop_front() {
        for &w in graph.neighbors(v) {
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                parent[w] = v;
                queue.push_back(w);
            } else if depth[w] == depth[v] {
                // Equal BFS depths: tree paths to the common ancestor plus vw
                // close an odd cycle.
                let (mut a, mut b) = (v, w);
                let mut left = Vec::new();
                let mut right = Vec::new();
                while a != b {
                    left.push(a);
                    right.push(b);
                    a = parent[a];
                    b = parent[b];
                }
                left.push(a);
                left.extend(right.into_iter().rev());
                return Some(CycleCertificate { vertices: left });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn k4_plus_c6() {
        let g = Graph::complete(4).disjoint_union(&Graph::cycle(6).unwrap());
        let report = components(&g);
        assert_eq!(report.components.len(), 2);
        let k4 = &report.components[0];
        let c6 = &report.components[1];
        assert!(!k4.is_bipartite());
        assert_eq!(k4.matching_size, 2);
        let (a, b) = c6.bipartition.as_ref().unwrap();
        assert_eq!((a.len(), b.len()), (3, 3));
        assert!(is_valid_bipartition(&g, a, b));
        assert_eq!(c6.matching_size, 3);
        assert_eq!(report.component_of[7], 1);
    }

    #[test]
    fn empty_graph_singletons() {
        let report = components(&Graph::empty(5));
        assert_eq!(report.components.len(), 5);
        for c in &report.components {
            assert!(c.is_bipartite());
            assert_eq!(c.matching_size, 0);
            assert_eq!(c.order(), 1);
        }
    }

    #[test]
    fn petersen_one_nonbipartite_component() {
        let report = components(&Graph::petersen());
        assert_eq!(report.components.len(), 1);
        assert!(!report.components[0].is_bipartite());
        assert_eq!(report.components[0].matching_size, 5);
    }

    #[test]
    fn odd_cycle_certificates() {
        let g = Graph::petersen();
        let cyc = find_odd_cycle(&g, 3).unwrap();
        assert!(cyc.is_valid_for(&g));
        assert_eq!(cyc.length() % 2, 1);
        assert!(find_odd_cycle(&Graph::complete_bipartite(3, 3), 0).is_none());
        let tri = find_odd_cycle(&Graph::complete(3), 0).unwrap();
        assert_eq!(tri.length(), 3);
    }

    #[test]
    fn bipartition_validation() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(is_valid_bipartition(&c4, &[0, 2], &[1, 3]));
        assert!(!is_valid_bipartition(&c4, &[0, 1], &[2, 3]));
        assert!(!is_valid_bipartition(&c4, &[0, 2], &[2, 3]));
        assert!(is_bipartite(&c4));
        assert!(!is_bipartite(&Graph::cycle(5).unwrap()));
        assert_eq!(
            component_partition(&c4).components[0].bipartition,
            Some((vec![0, 2], vec![1, 3]))
        );
    }
}
