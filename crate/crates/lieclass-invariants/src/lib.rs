//! Algebraic invariants of structure-constant tensors: central/derived
//! series, unimodularity, the dimension-3 symmetric-matrix/vector split,
//! codimension-1 ideals, the radical, and direct-sum decomposition with
//! essential dimension. All computations are exact.

pub mod behr;
pub mod decompose;
pub mod ideals;
pub mod killing;
pub mod radical;
pub mod series;
pub mod signature;
pub mod subspace;

pub use behr::{behr_form, BehrForm};
pub use decompose::{decompose_direct_sum, DirectSumDecomposition, Factor};
pub use ideals::{codim1_ideals, Codim1Ideals};
pub use killing::{killing_matrix, killing_signature};
pub use radical::radical;
pub use series::{series_profile, SeriesProfile};
pub use signature::{invariant_signature, BehrSignature, InvariantSignature};
pub use subspace::{center, centralizer, derived_subspace, Subspace};
