//! Contraction engine and degeneration networks for low-dimensional real
//! Lie algebras: singular basis-change families with exact rational-function
//! limits, and the transitively closed transition graphs of the three- and
//! four-dimensional varieties with their oriented (handed) variants.

pub mod contract;
pub mod graph;
pub mod ratfun;

pub use contract::{
    contract_limit, small_iw_splits, verify_transition_witness, ContractionFamily,
    TransitionError, WitnessOutcome,
};
pub use graph::{
    boundary_tensor, build_graph, Edge, EdgeEvidence, EdgeKind, GraphError, Handed, Node,
    PairTopology, SubsetFilter, TransitionGraph,
};
pub use ratfun::RatFun;
