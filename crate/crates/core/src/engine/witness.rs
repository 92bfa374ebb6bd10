use alloc::vec::Vec;

use crate::coloring::EdgeColoring;
use crate::components::{components, find_odd_cycle};
use crate::cycles::CycleCertificate;
use crate::decompose::half_matching_threshold;
use crate::graph::Graph;
use crate::matching::{max_matching, MatchingCertificate};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    /// Non-bipartite component with a matching of `(n+1)/2` edges.
    Odd,
    /// Any component with a matching of `n/2` edges.
    Even,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    MonoCycle,
    NonbipartiteComponentMatching,
    ComponentMatching,
}

/// A monochromatic structure found in one color class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureWitness {
    pub kind: WitnessKind,
    pub color: usize,
    /// Sorted vertex set of the component the witness lives in.
    pub component: Vec<usize>,
    pub matching: Option<MatchingCertificate>,
    pub cycle: Option<CycleCertificate>,
    /// Proof of non-bipartiteness for [`WitnessKind::NonbipartiteComponentMatching`].
    pub odd_cycle: Option<CycleCertificate>,
}

impl StructureWitness {
    /// Re-checks the witness against `col` from scratch.
    pub fn verify(&self, col: &EdgeColoring, n: usize) -> bool {
        let Ok(class) = col.color_class(self.color) else {
            return false;
        };
        let Ok(sub) = class.induced_subgraph(&self.component) else {
            return false;
        };
        // The component must be connected in the class.
        let in_component = |v: usize| self.component.binary_search(&v).is_ok();
        if components(&sub.graph).components.len() != 1 && !self.component.is_empty() {
            return false;
        }
        let matching_ok = |need: usize| {
            self.matching.as_ref().is_some_and(|m| {
                m.size() >= need
                    && m.is_valid_for(&class)
                    && m.edges
                        .iter()
                        .all(|&(u, v)| in_component(u) && in_component(v))
            })
        };
        let cycle_ok = |c: &Option<CycleCertificate>| {
            c.as_ref().is_some_and(|c| {
                c.is_valid_for(&class) && c.vertices.iter().all(|&v| in_component(v))
            })
        };
        match self.kind {
            WitnessKind::MonoCycle => {
                cycle_ok(&self.cycle) && self.cycle.as_ref().is_some_and(|c| c.length() == n)
            }
            WitnessKind::NonbipartiteComponentMatching => {
                matching_ok(half_matching_threshold(n))
                    && cycle_ok(&self.odd_cycle)
                    && self.odd_cycle.as_ref().is_some_and(|c| c.length() % 2 == 1)
            }
            WitnessKind::ComponentMatching => matching_ok(n / 2),
        }
    }
}

/// Matching number threshold for `parity`.
pub fn required_matching(n: usize, parity: Parity) -> usize {
    match parity {
        Parity::Odd => half_matching_threshold(n),
        Parity::Even => n / 2,
    }
}

/// Maximum matching of `class[component]` in parent ids, cut to `size` edges.
pub(crate) fn component_matching(
    class: &Graph,
    component: &[usize],
    size: usize,
) -> Option<MatchingCertificate> {
    let sub = class.induced_subgraph(component).ok()?;
    let m = max_matching(&sub.graph);
    let mut edges: Vec<_> = m
        .edges
        .iter()
        .map(|&(u, v)| (sub.lift(u), sub.lift(v)))
        .collect();
    edges.sort_unstable();
    MatchingCertificate { edges }.truncated(size)
}

/// Scans all color classes for the structure `parity` asks for.
///
/// Colors are scanned in order and components by smallest vertex, so the
/// first hit is reported.
pub fn pk_witness_search(col: &EdgeColoring, n: usize, parity: Parity) -> Option<StructureWitness> {
    let need = required_matching(n, parity);
    for (i, class) in col.color_classes().iter().enumerate() {
        let report = components(class);
        for comp in &report.components {
            if comp.matching_size < need.max(1) {
                continue;
            }
            if parity == Parity::Odd && comp.is_bipartite() {
                continue;
            }
            let matching = component_matching(class, &comp.vertices, need.max(1));
            let (kind, odd_cycle) = match parity {
                Parity::Odd => (
                    WitnessKind::NonbipartiteComponentMatching,
                    find_odd_cycle(class, comp.vertices[0]),
                ),
                Parity::Even => (WitnessKind::ComponentMatching, None),
            };
            return Some(StructureWitness {
                kind,
                color: i + 1,
                component: comp.vertices.clone(),
                matching,
                cycle: None,
                odd_cycle,
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::bondy_erdos_coloring;

    #[test]
    fn k9_monochromatic() {
        let col = EdgeColoring::monochromatic(Graph::complete(9), 2).unwrap();
        let w = pk_witness_search(&col, 5, Parity::Odd).unwrap();
        assert_eq!(w.kind, WitnessKind::NonbipartiteComponentMatching);
        assert_eq!(w.color, 1);
        assert_eq!(w.component.len(), 9);
        assert_eq!(w.matching.as_ref().unwrap().size(), 3);
        assert!(w.verify(&col, 5));
        // K_9 has matching number 4 >= 3.
        assert_eq!(
            components(&Graph::complete(9)).components[0].matching_size,
            4
        );
    }

    #[test]
    fn bondy_erdos_has_none() {
        let col = bondy_erdos_coloring(2, 5).unwrap();
        assert_eq!(pk_witness_search(&col, 5, Parity::Odd), None);
    }

    #[test]
    fn even_mode_accepts_bipartite() {
        let col = EdgeColoring::from_fn(Graph::complete(7), 2, |u, v| {
            if (u < 3) != (v < 3) {
                1
            } else {
                2
            }
        })
        .unwrap();
        let w = pk_witness_search(&col, 6, Parity::Even).unwrap();
        assert_eq!(w.kind, WitnessKind::ComponentMatching);
        assert_eq!(w.color, 1);
        assert_eq!(w.matching.as_ref().unwrap().size(), 3);
        assert!(w.verify(&col, 6));
        // Odd mode with n = 5 must skip the bipartite K_{3,4} but the K_4 in
        // color 2 has matching 2 < 3.
        assert_eq!(pk_witness_search(&col, 5, Parity::Odd), None);
    }

    #[test]
    fn tampered_witness_fails() {
        let col = EdgeColoring::monochromatic(Graph::complete(9), 2).unwrap();
        let mut w = pk_witness_search(&col, 5, Parity::Odd).unwrap();
        w.color = 2;
        assert!(!w.verify(&col, 5));
    }
}
