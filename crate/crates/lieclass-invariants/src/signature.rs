//! Basis-change-invariant fingerprint of an algebra, used as a fast
//! classification discriminator.

use crate::behr::behr_form;
use crate::killing::{killing_signature, signature};
use crate::series::series_profile;
use crate::subspace::{center, derived_subspace};
use lieclass_core::StructureConstants;
use num::Zero;

/// Behr data reduced to its invariant content: the signature of the
/// symmetric matrix up to overall sign, and whether the vector vanishes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BehrSignature {
    /// (max, min, zero) of the positive/negative counts; the overall sign of
    /// the symmetric matrix is basis-dependent, the unordered pair is not.
    pub n_signs: (usize, usize, usize),
    pub a_nonzero: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantSignature {
    pub dim: usize,
    pub derived_dim: usize,
    pub center_dim: usize,
    pub unimodular: bool,
    pub nilpotent: bool,
    pub solvable: bool,
    pub killing_signature: (usize, usize, usize),
    /// Present only for dimension 3.
    pub behr: Option<BehrSignature>,
}

pub fn invariant_signature(sc: &StructureConstants) -> InvariantSignature {
    let p = series_profile(sc);
    let behr = (sc.dim() == 3).then(|| {
        let b = behr_form(sc).expect("dimension checked");
        let (pos, neg, zero) = signature(&b.n);
        BehrSignature {
            n_signs: (pos.max(neg), pos.min(neg), zero),
            a_nonzero: b.a.iter().any(|x| !x.is_zero()),
        }
    });
    InvariantSignature {
        dim: sc.dim(),
        derived_dim: derived_subspace(sc).dim(),
        center_dim: center(sc).dim(),
        unimodular: sc.is_unimodular(),
        nilpotent: p.nilpotent,
        solvable: p.solvable,
        killing_signature: killing_signature(sc),
        behr,
    }
}
