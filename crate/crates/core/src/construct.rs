//! Extremal lower-bound colorings and monochromatic-cycle verification.
//!
//! The Bondy–Erdős coloring lives on `2^(k-1) (n-1)` vertices split into
//! `2^(k-1)` consecutive blocks of size `n-1`. Pairs inside a block get color 1.
//! Pairs in blocks `a != b` get color `2 + msb(a xor b)`, which is the
//! iterated doubling written out by index arithmetic: at doubling step `i` the
//! two copies differ exactly in bit `i - 2` of the block id.

use alloc::vec::Vec;

use rand::Rng;

use crate::bitgraph::{self, bit};
use crate::coloring::EdgeColoring;
use crate::components::{component_partition, Component};
use crate::cycles::{contains_cycle_of_length, CycleCertificate};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::search::{ramsey_check, SearchLimits, Verdict};

/// The recursive Bondy–Erdős `k`-coloring of `K_{2^(k-1)(n-1)}`.
pub fn bondy_erdos_coloring(k: usize, n: usize) -> Result<EdgeColoring> {
    if k < 2 {
        return Err(Error::InvalidParams("need k >= 2"));
    }
    if n < 4 {
        return Err(Error::InvalidParams("need n >= 4"));
    }
    if k > 24 {
        return Err(Error::InvalidParams("k too large to materialize"));
    }
    let block = n - 1;
    let vertices = (1usize << (k - 1)) * block;
    EdgeColoring::from_fn(Graph::complete(vertices), k, |u, v| {
        let diff = (u / block) ^ (v / block);
        if diff == 0 {
            1
        } else {
            2 + (usize::BITS - 1 - diff.leading_zeros()) as usize
        }
    })
}

/// Vertex count of [`bondy_erdos_coloring`]: `2^(k-1) (n-1)`.
pub fn bondy_erdos_order(k: usize, n: usize) -> usize {
    (1usize << (k - 1)) * (n - 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComponentTag {
    /// At most `n - 1` vertices.
    Small,
    Bipartite {
        sides: (Vec<usize>, Vec<usize>),
    },
    Untagged,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaggedComponent {
    pub vertices: Vec<usize>,
    pub tag: ComponentTag,
}

/// Component inventory of every color class with SMALL/BIPARTITE tags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralCertificate {
    pub n: usize,
    /// Index `i` holds color `i + 1`.
    pub classes: Vec<Vec<TaggedComponent>>,
}

impl StructuralCertificate {
    /// Sound for odd `n`: every component is too small or has no odd cycle.
    pub fn all_tagged(&self) -> bool {
        self.untagged().next().is_none()
    }

    /// `(color, component)` pairs without a tag.
    pub fn untagged(&self) -> impl Iterator<Item = (usize, &TaggedComponent)> + '_ {
        self.classes.iter().enumerate().flat_map(|(i, comps)| {
            comps
                .iter()
                .filter(|c| c.tag == ComponentTag::Untagged)
                .map(move |c| (i + 1, c))
        })
    }
}

fn tag_component(comp: Component, n: usize) -> TaggedComponent {
    let tag = match comp.bipartition {
        Some(sides) => ComponentTag::Bipartite { sides },
        None if comp.vertices.len() < n => ComponentTag::Small,
        None => ComponentTag::Untagged,
    };
    TaggedComponent {
        vertices: comp.vertices,
        tag,
    }
}

/// Tags each monochromatic component. Only meaningful for odd `n`.
pub fn structural_certificate(col: &EdgeColoring, n: usize) -> Result<StructuralCertificate> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenCycleLength { n });
    }
    if n < 3 {
        return Err(Error::CycleTooShort { length: n });
    }
    let classes = col
        .color_classes()
        .iter()
        .map(|class| {
            component_partition(class)
                .components
                .into_iter()
                .map(|c| tag_component(c, n))
                .collect()
        })
        .collect();
    Ok(StructuralCertificate { n, classes })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonoCycleVerdict {
    Free,
    Cycle {
        color: usize,
        cycle: CycleCertificate,
    },
}

impl MonoCycleVerdict {
    #[inline]
    pub fn is_free(&self) -> bool {
        matches!(self, MonoCycleVerdict::Free)
    }
}

/// Exact search for `C_n` inside one component of a color class.
fn cycle_in_component(
    class: &Graph,
    vertices: &[usize],
    n: usize,
) -> Result<Option<CycleCertificate>> {
    if vertices.len() < n {
        return Ok(None);
    }
    let sub = class.induced_subgraph(vertices)?;
    Ok(contains_cycle_of_length(&sub.graph, n)?.map(|c| c.lifted(&sub.parent_ids)))
}

/// Decides whether some color class contains `C_n`.
///
/// For odd `n` the structural certificate settles every SMALL or BIPARTITE
/// component and only the untagged ones are searched.
pub fn verify_mono_cycle_free(col: &EdgeColoring, n: usize) -> Result<MonoCycleVerdict> {
    if n < 3 {
        return Err(Error::CycleTooShort { length: n });
    }
    if n.is_multiple_of(2) {
        return verify_mono_cycle_free_exhaustive(col, n);
    }
    let cert = structural_certificate(col, n)?;
    let classes = col.color_classes();
    for (color, comp) in cert.untagged() {
        if let Some(cycle) = cycle_in_component(&classes[color - 1], &comp.vertices, n)? {
            return Ok(MonoCycleVerdict::Cycle { color, cycle });
        }
    }
    Ok(MonoCycleVerdict::Free)
}

/// Searches every component of every color class, ignoring structure.
pub fn verify_mono_cycle_free_exhaustive(col: &EdgeColoring, n: usize) -> Result<MonoCycleVerdict> {
    if n < 3 {
        return Err(Error::CycleTooShort { length: n });
    }
    for (i, class) in col.color_classes().iter().enumerate() {
        for comp in component_partition(class).components {
            if let Some(cycle) = cycle_in_component(class, &comp.vertices, n)? {
                return Ok(MonoCycleVerdict::Cycle {
                    color: i + 1,
                    cycle,
                });
            }
        }
    }
    Ok(MonoCycleVerdict::Free)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessSearchMode {
    /// Complete: `Exhausted` proves no such coloring exists.
    Exhaustive { node_budget: Option<u64> },
    /// Min-conflicts local search; `Exhausted` only means the steps ran out.
    LocalSearch { max_steps: u64, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessSearchOutcome {
    Found(EdgeColoring),
    /// Conclusive only in exhaustive mode.
    Exhausted {
        conclusive: bool,
    },
}

/// Looks for a `k`-coloring of `K_N` with no monochromatic `C_n`.
pub fn lower_bound_witness_search(
    k: usize,
    n: usize,
    vertices: usize,
    mode: WitnessSearchMode,
) -> Result<WitnessSearchOutcome> {
    match mode {
        WitnessSearchMode::Exhaustive { node_budget } => {
            let limits = SearchLimits {
                node_budget,
                ..SearchLimits::default()
            };
            let result = ramsey_check(k, n, vertices, &limits)?;
            Ok(match result.verdict {
                Verdict::Counterexample(col) => WitnessSearchOutcome::Found(col),
                Verdict::AllContain => WitnessSearchOutcome::Exhausted { conclusive: true },
            })
        }
        WitnessSearchMode::LocalSearch { max_steps, seed } => {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            local_search(k, n, vertices, max_steps, &mut rng)
        }
    }
}

fn local_search<R: Rng>(
    k: usize,
    n: usize,
    vertices: usize,
    max_steps: u64,
    rng: &mut R,
) -> Result<WitnessSearchOutcome> {
    if n < 3 {
        return Err(Error::CycleTooShort { length: n });
    }
    if k == 0 || vertices > bitgraph::MAX_VERTICES {
        return Err(Error::InvalidParams(
            "local search needs k >= 1 and N <= 64",
        ));
    }
    let base = Graph::complete(vertices);
    let edges = base.edges().to_vec();
    let mut colors: Vec<usize> = edges.iter().map(|_| rng.gen_range(0..k)).collect();
    let mut adj = alloc::vec![alloc::vec![0u64; vertices]; k];
    for (&(u, v), &c) in edges.iter().zip(&colors) {
        adj[c][u] |= bit(v);
        adj[c][v] |= bit(u);
    }
    let on_mono_cycle = |adj: &[Vec<u64>], (u, v): (usize, usize), c: usize| {
        bitgraph::has_path(&adj[c], u, v, n - 1, 0)
    };
    let conflicts = |adj: &[Vec<u64>], colors: &[usize]| -> Vec<usize> {
        (0..edges.len())
            .filter(|&i| on_mono_cycle(adj, edges[i], colors[i]))
            .collect()
    };
    for _ in 0..max_steps {
        let bad = conflicts(&adj, &colors);
        if bad.is_empty() {
            let col = EdgeColoring::new(base, k, colors.iter().map(|c| c + 1).collect())?;
            debug_assert!(verify_mono_cycle_free_exhaustive(&col, n)?.is_free());
            return Ok(WitnessSearchOutcome::Found(col));
        }
        let i = bad[rng.gen_range(0..bad.len())];
        let (u, v) = edges[i];
        let old = colors[i];
        adj[old][u] &= !bit(v);
        adj[old][v] &= !bit(u);
        let choice = if k == 1 {
            old
        } else if rng.gen_bool(0.1) {
            rng.gen_range(0..k)
        } else {
            // Color minimizing the conflict count, ties broken at random.
            let mut best = (usize::MAX, Vec::new());
            for c in (0..k).filter(|&c| c != old) {
                adj[c][u] |= bit(v);
                adj[c][v] |= bit(u);
                colors[i] = c;
                let score = conflicts(&adj, &colors).len();
                adj[c][u] &= !bit(v);
                adj[c][v] &= !bit(u);
                if score < best.0 {
                    best = (score, alloc::vec![c]);
                } else if score == best.0 {
                    best.1.push(c);
                }
            }
            best.1[rng.gen_range(0..best.1.len())]
        };
        colors[i] = choice;
        adj[choice][u] |= bit(v);
        adj[choice][v] |= bit(u);
    }
    Ok(WitnessSearchOutcome::Exhausted { conclusive: false })
}
