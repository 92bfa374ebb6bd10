use thiserror::Error;

use crate::search::SearchStats;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge at vertex {vertex}")]
    LoopEdge { vertex: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("a cycle needs at least 3 vertices, got {length}")]
    CycleTooShort { length: usize },
    #[error("color {color} outside 1..={k}")]
    ColorOutOfRange { color: usize, k: usize },
    #[error("coloring assigns {found} colors to a graph with {expected} edges")]
    ColoringSizeMismatch { expected: usize, found: usize },
    #[error("edge ({u}, {v}) is not in the graph")]
    EdgeNotInGraph { u: usize, v: usize },
    #[error("cannot peel to {target} vertices, graph has only {vertex_count}")]
    TargetTooLarge { target: usize, vertex_count: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(&'static str),
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(&'static str),
    #[error("cycle length {n} is even; this check needs an odd length")]
    EvenCycleLength { n: usize },
    #[error("cycle length {n} is odd; this check needs an even length")]
    OddCycleLength { n: usize },
    #[error("coloring contains a monochromatic C_{n}")]
    NotACounterexample { n: usize },
    #[error("search budget exceeded after {} nodes", stats.nodes)]
    BudgetExceeded { stats: SearchStats },
}

pub type Result<T> = core::result::Result<T, Error>;
