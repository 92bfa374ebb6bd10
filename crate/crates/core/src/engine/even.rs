//! Even cycles: majority color, Erdős–Gallai, and a matching along the cycle.

use alloc::vec::Vec;

use num_traits::One;

use crate::coloring::EdgeColoring;
use crate::components::component_partition;
use crate::cycles::{eg_threshold, longest_cycle, CycleCertificate};
use crate::engine::witness::{StructureWitness, WitnessKind};
use crate::error::{Error, Result};
use crate::graph::normalize;
use crate::matching::MatchingCertificate;
use crate::rational::{int, pairs, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenReport {
    pub n: usize,
    pub k: usize,
    pub epsilon: Rational,
    pub order: usize,
    pub edges: usize,
    /// `v > (1+ε) n k`.
    pub order_ok: bool,
    /// `e >= (1-ε/3) binom(v,2)`.
    pub density_ok: bool,
    pub majority_color: usize,
    pub majority_edges: usize,
    /// `(1/k)(1-ε/3) binom(v,2)`.
    pub pigeonhole_lhs: Rational,
    /// `n(v-1)/2 + 1`.
    pub pigeonhole_rhs: Rational,
    pub pigeonhole_holds: bool,
    /// `eg_threshold(n+1, v)`.
    pub threshold: usize,
    pub threshold_met: bool,
    pub cycle: Option<CycleCertificate>,
    pub witness: Option<StructureWitness>,
}

impl EvenReport {
    pub fn preconditions_met(&self) -> bool {
        self.order_ok && self.density_ok
    }
}

/// Follows the even-cycle pigeonhole on `col`.
///
/// The witness is a matching of exactly `n/2` edges taken every other edge
/// along a monochromatic cycle of length at least `n+1`.
pub fn even_engine(col: &EdgeColoring, n: usize, epsilon: &Rational) -> Result<EvenReport> {
    if n % 2 == 1 {
        return Err(Error::OddCycleLength { n });
    }
    if n < 4 {
        return Err(Error::CycleTooShort { length: n });
    }
    let k = col.k();
    let v = col.vertex_count();
    let edges = col.base().edge_count();
    let third = epsilon / int(3);
    let keep = Rational::one() - &third;
    let order_ok = int(v) > (Rational::one() + epsilon) * int(n) * int(k);
    let density_ok = int(edges) >= &keep * pairs(v);

    let sizes = col.class_sizes();
    let (majority_color, majority_edges) = sizes
        .iter()
        .enumerate()
        .map(|(i, &s)| (i + 1, s))
        .min_by_key(|&(c, s)| (core::cmp::Reverse(s), c))
        .expect("k >= 1");
    let pigeonhole_lhs = &keep * pairs(v) / int(k);
    let pigeonhole_rhs = int(n) * int(v.saturating_sub(1)) / int(2) + int(1);
    let pigeonhole_holds = pigeonhole_lhs > pigeonhole_rhs;
    let threshold = eg_threshold(n + 1, v);
    let threshold_met = majority_edges >= threshold;

    let mut cycle = None;
    let mut witness = None;
    if threshold_met {
        let class = col.color_class(majority_color)?;
        if let Some(c) = longest_cycle(&class).filter(|c| c.length() > n) {
            let matching = MatchingCertificate {
                edges: {
                    let mut m: Vec<_> = c
                        .edges()
                        .step_by(2)
                        .take(n / 2)
                        .map(|(a, b)| normalize(a, b))
                        .collect();
                    m.sort_unstable();
                    m
                },
            };
            let parts = component_partition(&class);
            let component = parts.components[parts.component_of[c.vertices[0]]]
                .vertices
                .clone();
            witness = Some(StructureWitness {
                kind: WitnessKind::ComponentMatching,
                color: majority_color,
                component,
                matching: Some(matching),
                cycle: Some(c.clone()),
                odd_cycle: None,
            });
            cycle = Some(c);
        }
    }
    Ok(EvenReport {
        n,
        k,
        epsilon: epsilon.clone(),
        order: v,
        edges,
        order_ok,
        density_ok,
        majority_color,
        majority_edges,
        pigeonhole_lhs,
        pigeonhole_rhs,
        pigeonhole_holds,
        threshold,
        threshold_met,
        cycle,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::rational::ratio;

    #[test]
    fn monochromatic_k8() {
        let col = EdgeColoring::monochromatic(Graph::complete(8), 1).unwrap();
        let r = even_engine(&col, 6, &ratio(1, 12)).unwrap();
        assert_eq!(r.majority_edges, 28);
        assert_eq!(r.threshold, 22);
        let w = r.witness.unwrap();
        assert_eq!(w.matching.as_ref().unwrap().size(), 3);
        assert!(w.verify(&col, 6));
    }

    #[test]
    fn balanced_split_of_k8_fails() {
        // 14 edges per color: alternate along the canonical edge order.
        let base = Graph::complete(8);
        let colors = (0..base.edge_count()).map(|i| 1 + i % 2).collect();
        let col = EdgeColoring::new(base, 2, colors).unwrap();
        assert_eq!(col.class_sizes(), alloc::vec![14, 14]);
        let r = even_engine(&col, 8, &ratio(1, 12)).unwrap();
        assert_eq!(r.majority_edges, 14);
        assert_eq!(r.threshold, 29);
        assert!(!r.threshold_met);
        assert!(!r.pigeonhole_holds);
        assert!(r.witness.is_none());
        assert!(!r.preconditions_met());
    }

    #[test]
    fn odd_length_rejected() {
        let col = EdgeColoring::monochromatic(Graph::complete(4), 1).unwrap();
        assert_eq!(
            even_engine(&col, 5, &ratio(1, 2)),
            Err(Error::OddCycleLength { n: 5 })
        );
    }
}
