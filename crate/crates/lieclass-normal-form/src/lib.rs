//! Exact real Jordan normal forms of restricted adjoint operators, their
//! scale normalization, and the resulting equivalence test. All eigenvalue
//! data is kept in exact arithmetic: rationals, quadratic/cubic algebraic
//! reals with isolating intervals, and complex conjugate pairs.

pub mod algebraic;
pub mod jordan;
pub mod njnf;
pub mod poly;

pub use algebraic::{rational_sqrt, real_roots_of_irreducible, ExactReal, RealAlgebraic};
pub use jordan::{real_jordan_form, Eigenvalue, JordanBlock, NormalFormError};
pub use njnf::{njnf, njnf_equivalent, normalize, restricted_adjoint, Njnf};
