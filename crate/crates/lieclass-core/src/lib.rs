//! Exact-rational representation of real Lie algebras by structure
//! constants: tensor storage, Lie axiom validation, GL(n) basis changes with
//! orientation signs, adjoint matrices, and the trace/vector decomposition.
//!
//! All arithmetic is exact; floating-point values only appear as derived
//! approximate views. Every value is immutable after construction and every
//! operation is a pure function.

pub mod json;
pub mod matrix;
pub mod scalar;
pub mod tensor;

pub use matrix::Mat;
pub use scalar::{format_q, parse_q, qi, qr, Q};
pub use tensor::{BasisChange, StructureConstants, TensorError, TraceDecomposition, Violation};
