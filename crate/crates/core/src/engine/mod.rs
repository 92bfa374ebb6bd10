//! Finite executions of the odd and even pigeonhole arguments.

mod even;
mod lemma4;
mod witness;

pub use even::{even_engine, EvenReport};
pub use lemma4::{
    lemma4_execute, lemma4_inequality_check, Cell, ChainEvaluation, FailedCheck, InequalityReport,
    Lemma4Outcome, Lemma4Trace, Lemma4Verdict, PkParameters, MAX_CELL_COLORS,
};
pub use witness::{pk_witness_search, required_matching, Parity, StructureWitness, WitnessKind};
