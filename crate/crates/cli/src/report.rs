//! Reports as ordered key/value records, printed as text lines or JSON.
//!
//! Text layout: the first line is the report kind, then one `key value` line
//! per field. Scalar lists are comma-joined, pairs are written `u-v`, and a
//! list of records becomes one `key a=.. b=..` line per record. In JSON mode
//! the same record is one object per line with `"report"` holding the kind.

use monocycle_core::construct::{ComponentTag, StructuralCertificate};
use monocycle_core::cycles::CycleCertificate;
use monocycle_core::decompose::{FlDecomposition, PeelLogEntry, PeelResult};
use monocycle_core::engine::{
    ChainEvaluation, EvenReport, FailedCheck, InequalityReport, Lemma4Trace, Lemma4Verdict,
    StructureWitness, WitnessKind,
};
use monocycle_core::matching::MatchingCertificate;
use monocycle_core::rational::format_rational;
use monocycle_core::search::SearchStats;
use monocycle_core::Rational;
use serde_json::{json, Map, Value};

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub kind: &'static str,
    pub fields: Vec<(&'static str, Value)>,
}

impl Report {
    pub fn new(kind: &'static str) -> Self {
        Report {
            kind,
            fields: Vec::new(),
        }
    }

    pub fn field(mut self, key: &'static str, value: impl Into<Value>) -> Self {
        self.fields.push((key, value.into()));
        self
    }

    pub fn push(&mut self, key: &'static str, value: impl Into<Value>) {
        self.fields.push((key, value.into()));
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(self.kind);
        out.push('\n');
        for (key, value) in &self.fields {
            match value {
                Value::Array(items) if items.iter().any(Value::is_object) => {
                    for item in items {
                        out.push_str(key);
                        out.push(' ');
                        out.push_str(&inline(item));
                        out.push('\n');
                    }
                }
                _ => {
                    out.push_str(key);
                    out.push(' ');
                    out.push_str(&inline(value));
                    out.push('\n');
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut map = Map::new();
        map.insert("report".into(), Value::from(self.kind));
        for (key, value) in &self.fields {
            map.insert((*key).into(), value.clone());
        }
        let mut line = Value::Object(map).to_string();
        line.push('\n');
        line
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            self.to_json()
        } else {
            self.to_text()
        }
    }
}

fn scalar(value: &Value) -> String {
    match value {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn inline(value: &Value) -> String {
    match value {
        Value::Array(items) if items.is_empty() => "-".into(),
        Value::Array(items) if items.iter().all(Value::is_array) => items
            .iter()
            .map(|pair| match pair {
                Value::Array(xs) => xs.iter().map(scalar).collect::<Vec<_>>().join("-"),
                _ => unreachable!(),
            })
            .collect::<Vec<_>>()
            .join(" "),
        Value::Array(items) => items.iter().map(scalar).collect::<Vec<_>>().join(","),
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}={}", inline(v)))
            .collect::<Vec<_>>()
            .join(" "),
        other => scalar(other),
    }
}

fn record(pairs: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    for (k, v) in pairs {
        map.insert(k.into(), v);
    }
    Value::Object(map)
}

pub fn rational(q: &Rational) -> Value {
    Value::from(format_rational(q))
}

fn pairs(edges: &[(usize, usize)]) -> Value {
    edges.iter().map(|&(u, v)| json!([u, v])).collect()
}

fn cycle(c: &Option<CycleCertificate>) -> Value {
    c.as_ref().map_or(Value::Null, |c| json!(c.vertices))
}

fn matching(m: &Option<MatchingCertificate>) -> Value {
    m.as_ref().map_or(Value::Null, |m| pairs(&m.edges))
}

pub fn stats(report: &mut Report, stats: &SearchStats) {
    report.push("nodes", stats.nodes);
    report.push("cycle_prunes", stats.cycle_prunes);
    report.push("symmetry_prunes", stats.symmetry_prunes);
}

pub fn witness(w: &StructureWitness) -> Report {
    let kind = match w.kind {
        WitnessKind::MonoCycle => "MONO_CYCLE",
        WitnessKind::NonbipartiteComponentMatching => "NONBIPARTITE_COMPONENT_MATCHING",
        WitnessKind::ComponentMatching => "COMPONENT_MATCHING",
    };
    Report::new("witness")
        .field("kind", kind)
        .field("color", w.color)
        .field("component", json!(w.component))
        .field("matching", matching(&w.matching))
        .field("cycle", cycle(&w.cycle))
        .field("odd_cycle", cycle(&w.odd_cycle))
}

pub fn decomposition(color: Option<usize>, d: &FlDecomposition) -> Report {
    let mut r = Report::new("decomposition");
    if let Some(c) = color {
        r.push("color", c);
    }
    r.field("n", d.n)
        .field("v1", json!(d.v1))
        .field("v2", json!(d.v2))
        .field("v3", json!(d.v3))
        .field("hypothesis_holds", d.hypothesis_holds)
        .field("max_sparse_matching", d.max_sparse_matching)
        .field("sparse_edge_count", d.sparse_edge_count)
        .field("sparse_bound", rational(&d.sparse_bound))
        .field(
            "checks",
            record(vec![
                ("partition", d.checks.partition.into()),
                ("no_cross_edges", d.checks.no_cross_edges.into()),
                ("bipartition", d.checks.bipartition.into()),
                (
                    "sparse_components_nonbipartite",
                    d.checks.sparse_components_nonbipartite.into(),
                ),
                ("sparse_bound", d.checks.sparse_bound.into()),
            ]),
        )
}

fn peel_steps(log: &[PeelLogEntry]) -> Value {
    log.iter()
        .map(|e| {
            record(vec![
                ("vertex", e.vertex.into()),
                ("degree", e.degree.into()),
                ("edges_before", e.edges_before.into()),
                ("vertices_before", e.vertices_before.into()),
            ])
        })
        .collect()
}

pub fn peel(p: &PeelResult) -> Report {
    Report::new("peel")
        .field("removed", p.log.len())
        .field("step", peel_steps(&p.log))
        .field("kept", json!(p.kept))
        .field("vertices", p.graph.vertex_count())
        .field("edges", p.graph.edge_count())
}

pub fn structural(cert: &StructuralCertificate) -> Report {
    let mut rows = Vec::new();
    for (i, comps) in cert.classes.iter().enumerate() {
        for comp in comps {
            let tag = match comp.tag {
                ComponentTag::Small => "SMALL",
                ComponentTag::Bipartite { .. } => "BIPARTITE",
                ComponentTag::Untagged => "UNTAGGED",
            };
            rows.push(record(vec![
                ("color", (i + 1).into()),
                ("tag", tag.into()),
                ("size", comp.vertices.len().into()),
                ("vertices", json!(comp.vertices)),
            ]));
        }
    }
    Report::new("structural_certificate")
        .field("n", cert.n)
        .field("component", rows)
        .field("all_tagged", cert.all_tagged())
}

fn failed_check(c: &FailedCheck) -> &'static str {
    match c {
        FailedCheck::HostOrder => "HOST_ORDER",
        FailedCheck::HostDensity => "HOST_DENSITY",
        FailedCheck::ColorCount => "COLOR_COUNT",
        FailedCheck::PeeledDensity => "PEELED_DENSITY",
        FailedCheck::UpperBound => "UPPER_BOUND",
        FailedCheck::LowerBound => "LOWER_BOUND",
        FailedCheck::CellSize => "CELL_SIZE",
        FailedCheck::Chain => "CHAIN",
    }
}

fn checks(list: &[FailedCheck]) -> Value {
    list.iter().map(failed_check).collect()
}

pub fn lemma4_trace(t: &Lemma4Trace) -> Report {
    let p = &t.params;
    let cells: Vec<Value> = t
        .cells
        .iter()
        .map(|c| {
            record(vec![
                ("signature", json!(c.signature)),
                ("size", c.vertices.len().into()),
                ("vertices", json!(c.vertices)),
            ])
        })
        .collect();
    let decomps: Vec<Value> = t
        .decompositions
        .iter()
        .enumerate()
        .map(|(i, d)| {
            record(vec![
                ("color", (i + 1).into()),
                ("v1", d.v1.len().into()),
                ("v2", d.v2.len().into()),
                ("v3", d.v3.len().into()),
                ("hypothesis_holds", d.hypothesis_holds.into()),
                ("sparse_edge_count", d.sparse_edge_count.into()),
                ("sparse_bound", rational(&d.sparse_bound)),
            ])
        })
        .collect();
    let (verdict, failed) = match &t.verdict {
        Lemma4Verdict::ContradictionEstablished => {
            ("CONTRADICTION_ESTABLISHED", Value::Array(vec![]))
        }
        Lemma4Verdict::Fails(list) => ("FAILS", checks(list)),
    };
    Report::new("lemma4_trace")
        .field("k", p.k)
        .field("n", p.n)
        .field("c", rational(&p.c))
        .field("epsilon", rational(&p.epsilon))
        .field("delta", rational(&p.delta))
        .field("order", p.order)
        .field("host_order", t.host_order)
        .field("host_edges", t.host_edges)
        .field("host_density_bound", rational(&t.host_density_bound))
        .field("failed_preconditions", checks(&t.failed_preconditions))
        .field("peel", peel_steps(&t.peel_log))
        .field("kept", json!(t.kept))
        .field("peeled_edges", t.peeled_edges)
        .field("peeled_density_bound", rational(&t.peeled_density_bound))
        .field("decomposition", decomps)
        .field("cell", cells)
        .field("chosen_signature", json!(t.chosen_cell().signature))
        .field("x_size", t.x_size)
        .field("pigeonhole_floor", rational(&t.pigeonhole_floor))
        .field("color_edges_in_x", json!(t.color_edges_in_x))
        .field("per_color_bound", rational(&t.per_color_bound))
        .field("edges_in_x", t.edges_in_x)
        .field("upper_bound", rational(&t.upper_bound))
        .field("lower_bound", rational(&t.lower_bound))
        .field(
            "chain_term",
            t.chain_term.as_ref().map_or(Value::Null, rational),
        )
        .field("epsilon_term", rational(&t.epsilon_term))
        .field("cell_target", rational(&t.cell_target))
        .field("verdict", verdict)
        .field("failed", failed)
}

fn chain(e: &ChainEvaluation) -> Value {
    record(vec![
        ("x_size", e.x_size.into()),
        ("first", rational(&e.first)),
        ("second", rational(&e.second)),
        ("third", rational(&e.third)),
        ("fourth", rational(&e.fourth)),
        ("links", json!(e.links)),
    ])
}

pub fn inequality(r: &InequalityReport) -> Report {
    Report::new("inequality")
        .field("k", r.k)
        .field("n", r.n)
        .field("epsilon", rational(&r.epsilon))
        .field("delta", rational(&r.delta))
        .field("order", r.order)
        .field("order_cap", r.order_cap)
        .field("order_within_cap", r.order_within_cap)
        .field("at_minimum", chain(&r.at_minimum))
        .field("at_pigeonhole", chain(&r.at_pigeonhole))
        .field("third_coefficient", rational(&r.third_coefficient))
        .field("fourth_coefficient", rational(&r.fourth_coefficient))
        .field("lower", rational(&r.lower))
        .field("upper", rational(&r.upper))
        .field("contradiction", r.contradiction)
        .field("holds", r.holds())
}

pub fn even(r: &EvenReport) -> Report {
    Report::new("even_engine")
        .field("n", r.n)
        .field("k", r.k)
        .field("epsilon", rational(&r.epsilon))
        .field("order", r.order)
        .field("edges", r.edges)
        .field("order_ok", r.order_ok)
        .field("density_ok", r.density_ok)
        .field("preconditions_met", r.preconditions_met())
        .field("majority_color", r.majority_color)
        .field("majority_edges", r.majority_edges)
        .field("pigeonhole_lhs", rational(&r.pigeonhole_lhs))
        .field("pigeonhole_rhs", rational(&r.pigeonhole_rhs))
        .field("pigeonhole_holds", r.pigeonhole_holds)
        .field("threshold", r.threshold)
        .field("threshold_met", r.threshold_met)
        .field("cycle", cycle(&r.cycle))
        .field("witness_found", r.witness.is_some())
}
