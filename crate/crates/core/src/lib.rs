//! Monochromatic cycles in edge-colored graphs.
//!
//! Exact structural queries (components, maximum matchings, fixed-length and
//! longest cycles), the bipartite/sparse decomposition of a color class, the
//! Bondy–Erdős extremal coloring, finite executions of the odd and even
//! pigeonhole arguments for multicolor cycle Ramsey numbers, and an
//! exhaustive search that certifies small values of `R_k(C_n)`.
//!
//! The crate is `no_std` and needs only `alloc`. Every comparison that feeds a
//! verdict is done in integers or exact rationals.

#![no_std]

extern crate alloc;

mod bitgraph;
pub mod coloring;
pub mod components;
pub mod construct;
pub mod cycles;
pub mod decompose;
pub mod engine;
pub mod error;
pub mod graph;
pub mod matching;
pub mod rational;
pub mod search;

pub use coloring::EdgeColoring;
pub use components::{components, ComponentReport};
pub use construct::{
    bondy_erdos_coloring, lower_bound_witness_search, structural_certificate,
    verify_mono_cycle_free, verify_mono_cycle_free_exhaustive, MonoCycleVerdict,
    StructuralCertificate,
};
pub use cycles::{contains_cycle_of_length, eg_threshold, longest_cycle, CycleCertificate};
pub use decompose::{fl_decompose, min_degree_peel, FlDecomposition, PeelResult};
pub use engine::{
    even_engine, lemma4_execute, lemma4_inequality_check, pk_witness_search, Parity, PkParameters,
    StructureWitness,
};
pub use error::{Error, Result};
pub use graph::Graph;
pub use matching::{max_matching, MatchingCertificate};
pub use rational::Rational;
pub use search::{counterexample_minimize, ramsey_check, SearchLimits, SearchResult, Verdict};
