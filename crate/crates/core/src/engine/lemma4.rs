//! The odd-cycle pigeonhole argument, executed on a concrete coloring.
//!
//! Given a `k`-coloring with no monochromatic non-bipartite component carrying
//! a matching of `(n+1)/2` edges, the engine peels the host to `N` vertices,
//! decomposes every color class, splits the vertices into the `2^k` cells
//! `X_1^{j_1} ∩ ... ∩ X_k^{j_k}` (with `X_i^1 = V_i^1` and
//! `X_i^2 = V_i^2 ∪ V_i^3`), and confronts the edge count of a largest cell
//! with the upper bound `kn(|X|-1)/2` and the density lower bound
//! `binom(|X|,2) - δ binom(N,2)`. On a genuine instance something has to
//! give; the trace records which.

use alloc::boxed::Box;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::coloring::EdgeColoring;
use crate::decompose::{fl_decompose, min_degree_peel, FlDecomposition, PeelLogEntry};
use crate::engine::witness::{pk_witness_search, Parity, StructureWitness};
use crate::error::{Error, Result};
use crate::rational::{ceil_usize, int, pairs, pow2, Rational};

/// Largest `k` for which the `2^k` cell table is materialized.
pub const MAX_CELL_COLORS: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PkParameters {
    pub k: usize,
    pub n: usize,
    /// Density coefficient `c`.
    pub c: Rational,
    pub epsilon: Rational,
    pub delta: Rational,
    /// Host order `N`.
    pub order: usize,
}

impl PkParameters {
    /// `c = k 2^k`, `δ = ε / 2^(2k+4)`, `N = ceil((1+ε) c n)`.
    pub fn lemma4(k: usize, n: usize, epsilon: Rational) -> Result<Self> {
        if epsilon <= Rational::zero() {
            return Err(Error::ParamOutOfRange("epsilon must be positive"));
        }
        if k == 0 || k > 60 {
            return Err(Error::ParamOutOfRange("k must lie in 1..=60"));
        }
        let c = int(k) * pow2(k as u32);
        let delta = &epsilon / pow2(2 * k as u32 + 4);
        let order = ceil_usize(&((Rational::one() + &epsilon) * &c * int(n)));
        Ok(PkParameters {
            k,
            n,
            c,
            epsilon,
            delta,
            order,
        })
    }

    /// `δ` matches `ε / 2^(2k+4)` and `N >= (1+ε) c n`.
    pub fn is_consistent(&self) -> bool {
        self.delta == &self.epsilon / pow2(2 * self.k as u32 + 4)
            && int(self.order) >= (Rational::one() + &self.epsilon) * &self.c * int(self.n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FailedCheck {
    /// `v(G) < N`.
    HostOrder,
    /// `e(G) < (1-δ) binom(v(G), 2)`.
    HostDensity,
    /// The coloring's palette differs from `k`.
    ColorCount,
    /// Peeled graph fell below `(1-δ) binom(N, 2)`.
    PeeledDensity,
    /// `e(G[X]) > kn(|X|-1)/2`.
    UpperBound,
    /// `e(G[X]) < binom(|X|,2) - δ binom(N,2)`.
    LowerBound,
    /// `|X| < (1+ε) kn`.
    CellSize,
    /// `δ N(N-1)/(|X|-1) > εkn/2`.
    Chain,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lemma4Verdict {
    /// All bounds hold at once and force `(1+ε)kn <= |X| <= kn + εkn/2`.
    ContradictionEstablished,
    /// The finite instance escapes the argument through these checks.
    Fails(Vec<FailedCheck>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    /// `j_1 .. j_k`, each 1 or 2.
    pub signature: Vec<u8>,
    /// Vertex ids in the peeled graph.
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma4Trace {
    pub params: PkParameters,
    pub host_order: usize,
    pub host_edges: usize,
    /// `(1-δ) binom(v(G), 2)`.
    pub host_density_bound: Rational,
    pub failed_preconditions: Vec<FailedCheck>,
    pub peel_log: Vec<PeelLogEntry>,
    /// `kept[local]` is the host id of peeled vertex `local`.
    pub kept: Vec<usize>,
    pub peeled_edges: usize,
    pub peeled_density_bound: Rational,
    pub decompositions: Vec<FlDecomposition>,
    /// All `2^k` cells, signatures in lexicographic order.
    pub cells: Vec<Cell>,
    pub chosen: usize,
    pub x_size: usize,
    /// `N' / 2^k` with `N'` the peeled order.
    pub pigeonhole_floor: Rational,
    pub color_edges_in_x: Vec<usize>,
    /// `n(|X|-1)/2`, the per-color cap.
    pub per_color_bound: Rational,
    pub edges_in_x: usize,
    /// `kn(|X|-1)/2`.
    pub upper_bound: Rational,
    /// `binom(|X|,2) - δ binom(N',2)`.
    pub lower_bound: Rational,
    /// `δ N'(N'-1)/(|X|-1)`, absent when `|X| <= 1`.
    pub chain_term: Option<Rational>,
    /// `εkn/2`.
    pub epsilon_term: Rational,
    /// `(1+ε) kn`.
    pub cell_target: Rational,
    pub verdict: Lemma4Verdict,
}

impl Lemma4Trace {
    pub fn chosen_cell(&self) -> &Cell {
        &self.cells[self.chosen]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lemma4Outcome {
    Witness(StructureWitness),
    Trace(Box<Lemma4Trace>),
}

/// Runs the argument on `col`, reporting instead of aborting on bad inputs.
pub fn lemma4_execute(col: &EdgeColoring, params: &PkParameters) -> Result<Lemma4Outcome> {
    let n = params.n;
    if n < 3 {
        return Err(Error::CycleTooShort { length: n });
    }
    if let Some(w) = pk_witness_search(col, n, Parity::Odd) {
        return Ok(Lemma4Outcome::Witness(w));
    }
    let k = col.k();
    if k > MAX_CELL_COLORS {
        return Err(Error::InvalidParams("too many colors for the cell table"));
    }
    let delta = &params.delta;
    let keep = Rational::one() - delta;

    let host_order = col.vertex_count();
    let host_edges = col.base().edge_count();
    let host_density_bound = &keep * pairs(host_order);
    let mut failed_preconditions = Vec::new();
    if host_order < params.order {
        failed_preconditions.push(FailedCheck::HostOrder);
    }
    if int(host_edges) < host_density_bound {
        failed_preconditions.push(FailedCheck::HostDensity);
    }
    if k != params.k {
        failed_preconditions.push(FailedCheck::ColorCount);
    }

    // Peel only when there is room; a short host is analyzed as is.
    let target = params.order.min(host_order);
    let peel = min_degree_peel(col.base(), target)?;
    let (peeled, kept) = col.restrict(&peel.kept)?;
    let order = peeled.vertex_count();
    let peeled_edges = peeled.base().edge_count();
    let peeled_density_bound = &keep * pairs(order);
    let mut failed = failed_preconditions.clone();
    if int(peeled_edges) < peeled_density_bound {
        failed.push(FailedCheck::PeeledDensity);
    }

    let decompositions = peeled
        .color_classes()
        .iter()
        .map(|class| fl_decompose(class, n))
        .collect::<Result<Vec<_>>>()?;

    // Cell index: bit (k-1-i) set when vertex lies in X_{i+1}^2, so index
    // order is lexicographic signature order.
    let mut cell_of = alloc::vec![0usize; order];
    for (i, d) in decompositions.iter().enumerate() {
        let side = d.side_of(order);
        for (v, s) in side.iter().enumerate() {
            if *s != 1 {
                cell_of[v] |= 1 << (k - 1 - i);
            }
        }
    }
    let mut cells: Vec<Cell> = (0..1usize << k)
        .map(|idx| Cell {
            signature: (0..k)
                .map(|i| 1 + ((idx >> (k - 1 - i)) & 1) as u8)
                .collect(),
            vertices: Vec::new(),
        })
        .collect();
    for (v, &idx) in cell_of.iter().enumerate() {
        cells[idx].vertices.push(v);
    }
    // First maximum wins: lexicographically smallest signature.
    let chosen = (0..cells.len())
        .rev()
        .max_by_key(|&i| cells[i].vertices.len())
        .expect("at least one cell");
    let x = &cells[chosen].vertices;
    let x_size = x.len();

    let mut member = alloc::vec![false; order];
    for &v in x {
        member[v] = true;
    }
    let mut color_edges_in_x = alloc::vec![0usize; k];
    for (u, v, c) in peeled.triples() {
        if member[u] && member[v] {
            color_edges_in_x[c - 1] += 1;
        }
    }
    let edges_in_x: usize = color_edges_in_x.iter().sum();

    let nk = int(n) * int(k);
    let x_minus_one = int(x_size.saturating_sub(1));
    let per_color_bound = int(n) * &x_minus_one / int(2);
    let upper_bound = &nk * &x_minus_one / int(2);
    let lower_bound = pairs(x_size) - delta * pairs(order);
    let chain_term = (x_size > 1).then(|| delta * int(order) * int(order - 1) / &x_minus_one);
    let epsilon_term = &params.epsilon * &nk / int(2);
    let cell_target = (Rational::one() + &params.epsilon) * &nk;
    let pigeonhole_floor = int(order) / pow2(k as u32);

    if int(edges_in_x) > upper_bound {
        failed.push(FailedCheck::UpperBound);
    }
    if int(edges_in_x) < lower_bound {
        failed.push(FailedCheck::LowerBound);
    }
    if int(x_size) < cell_target {
        failed.push(FailedCheck::CellSize);
    }
    if chain_term.as_ref().is_none_or(|t| *t > epsilon_term) {
        failed.push(FailedCheck::Chain);
    }
    let verdict = if failed.is_empty() {
        Lemma4Verdict::ContradictionEstablished
    } else {
        Lemma4Verdict::Fails(failed)
    };

    Ok(Lemma4Outcome::Trace(Box::new(Lemma4Trace {
        params: params.clone(),
        host_order,
        host_edges,
        host_density_bound,
        failed_preconditions,
        peel_log: peel.log,
        kept,
        peeled_edges,
        peeled_density_bound,
        decompositions,
        cells,
        chosen,
        x_size,
        pigeonhole_floor,
        color_edges_in_x,
        per_color_bound,
        edges_in_x,
        upper_bound,
        lower_bound,
        chain_term,
        epsilon_term,
        cell_target,
        verdict,
    })))
}

/// The chain `δN(N-1)/(|X|-1) <= 2δN²/|X| <= 2δ(k2^(k+1)n)²/(kn) <= εkn/2`
/// evaluated at one cell size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainEvaluation {
    pub x_size: usize,
    pub first: Rational,
    pub second: Rational,
    pub third: Rational,
    pub fourth: Rational,
    pub links: [bool; 3],
}

impl ChainEvaluation {
    pub fn holds(&self) -> bool {
        self.links.iter().all(|&l| l)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalityReport {
    pub k: usize,
    pub n: usize,
    pub epsilon: Rational,
    pub delta: Rational,
    pub order: usize,
    /// `k 2^(k+1) n`, which bounds `N` because `ε < 1`.
    pub order_cap: usize,
    pub order_within_cap: bool,
    /// At `|X| = kn + 1`, the weakest case allowed by `|X| > kn`.
    pub at_minimum: ChainEvaluation,
    /// At `|X| = ceil(N / 2^k)`, the pigeonhole guarantee.
    pub at_pigeonhole: ChainEvaluation,
    /// Coefficients of `n` in the third and fourth chain terms.
    pub third_coefficient: Rational,
    pub fourth_coefficient: Rational,
    /// `(1+ε) kn`.
    pub lower: Rational,
    /// `kn + εkn/2`.
    pub upper: Rational,
    pub contradiction: bool,
}

impl InequalityReport {
    pub fn holds(&self) -> bool {
        self.order_within_cap
            && self.at_minimum.holds()
            && self.at_pigeonhole.holds()
            && self.third_coefficient <= self.fourth_coefficient
            && self.contradiction
    }
}

fn evaluate_chain(
    delta: &Rational,
    order: usize,
    order_cap: usize,
    nk: &Rational,
    epsilon: &Rational,
    x_size: usize,
) -> ChainEvaluation {
    let big = int(order);
    let x = int(x_size);
    let first = delta * &big * (&big - int(1)) / (&x - int(1));
    let second = int(2) * delta * &big * &big / &x;
    let cap = int(order_cap);
    let third = int(2) * delta * &cap * &cap / nk;
    let fourth = epsilon * nk / int(2);
    let links = [first <= second, second <= third, third <= fourth];
    ChainEvaluation {
        x_size,
        first,
        second,
        third,
        fourth,
        links,
    }
}

/// Verifies the closing arithmetic of the odd-cycle argument in exact rationals.
pub fn lemma4_inequality_check(k: usize, epsilon: &Rational, n: usize) -> Result<InequalityReport> {
    if k < 4 {
        return Err(Error::ParamOutOfRange("k must be at least 4"));
    }
    if *epsilon <= Rational::zero() || *epsilon >= Rational::one() {
        return Err(Error::ParamOutOfRange(
            "epsilon must lie strictly between 0 and 1",
        ));
    }
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::ParamOutOfRange("n must be odd and at least 3"));
    }
    let params = PkParameters::lemma4(k, n, epsilon.clone())?;
    let nk = int(n * k);
    let order_cap = k * (1usize << (k + 1)) * n;
    let x_min = n * k + 1;
    let x_pigeon = ceil_usize(&(int(params.order) / pow2(k as u32)));
    let eval = |x| evaluate_chain(&params.delta, params.order, order_cap, &nk, epsilon, x);
    let cap_per_n = int(k) * pow2(k as u32 + 1);
    let third_coefficient = int(2) * &params.delta * &cap_per_n * &cap_per_n / int(k);
    let fourth_coefficient = epsilon * int(k) / int(2);
    let lower = (Rational::one() + epsilon) * &nk;
    let upper = &nk + epsilon * &nk / int(2);
    Ok(InequalityReport {
        k,
        n,
        epsilon: epsilon.clone(),
        delta: params.delta.clone(),
        order: params.order,
        order_cap,
        order_within_cap: params.order <= order_cap,
        at_minimum: eval(x_min),
        at_pigeonhole: eval(x_pigeon),
        third_coefficient,
        fourth_coefficient,
        contradiction: lower > upper,
        lower,
        upper,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::bondy_erdos_coloring;
    use crate::graph::Graph;
    use crate::rational::ratio;
    use alloc::vec;

    #[test]
    fn parameters_for_k4() {
        let p = PkParameters::lemma4(4, 5, ratio(1, 2)).unwrap();
        assert_eq!(p.c, int(64));
        assert_eq!(p.delta, ratio(1, 8192));
        assert_eq!(p.order, 96 * 5);
        assert!(p.is_consistent());
        assert!(PkParameters::lemma4(4, 5, int(0)).is_err());
    }

    #[test]
    fn witness_short_circuits() {
        let col = EdgeColoring::monochromatic(Graph::complete(12), 1).unwrap();
        let p = PkParameters::lemma4(1, 5, int(1)).unwrap();
        assert!(matches!(
            lemma4_execute(&col, &p).unwrap(),
            Lemma4Outcome::Witness(_)
        ));
    }

    #[test]
    fn diagnostic_trace_on_bondy_erdos() {
        let col = bondy_erdos_coloring(2, 5).unwrap();
        let p = PkParameters::lemma4(2, 5, int(1)).unwrap();
        assert_eq!(p.order, 80);
        let Lemma4Outcome::Trace(t) = lemma4_execute(&col, &p).unwrap() else {
            panic!("no witness expected");
        };
        assert_eq!(t.failed_preconditions, vec![FailedCheck::HostOrder]);
        assert!(t.peel_log.is_empty());
        assert_eq!(t.decompositions[0].v3.len(), 8);
        assert_eq!(t.decompositions[1].v1.len(), 4);
        assert_eq!(t.decompositions[1].v2.len(), 4);
        let sizes: Vec<usize> = t.cells.iter().map(|c| c.vertices.len()).collect();
        assert_eq!(sizes, vec![0, 0, 4, 4]);
        assert_eq!(t.chosen_cell().signature, vec![2, 1]);
        // X = V_2^1 = {0, 1, 2, 3}, one colour-1 clique.
        assert_eq!(t.color_edges_in_x, vec![6, 0]);
        assert!(
            matches!(t.verdict, Lemma4Verdict::Fails(ref f) if f.contains(&FailedCheck::CellSize))
        );
    }

    #[test]
    fn inequality_k4_half() {
        let r = lemma4_inequality_check(4, &ratio(1, 2), 5).unwrap();
        assert!(r.holds());
        assert_eq!(r.lower, int(30));
        assert_eq!(r.upper, int(25));
        assert_eq!(r.order, 480);
        assert_eq!(r.third_coefficient, r.fourth_coefficient);
    }

    #[test]
    fn inequality_param_errors() {
        assert!(matches!(
            lemma4_inequality_check(4, &int(1), 5),
            Err(Error::ParamOutOfRange(_))
        ));
        assert!(lemma4_inequality_check(3, &ratio(1, 2), 5).is_err());
        assert!(lemma4_inequality_check(4, &ratio(1, 2), 6).is_err());
        assert!(lemma4_inequality_check(5, &ratio(1, 4), 7).unwrap().holds());
    }
}
