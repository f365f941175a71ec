//! Singular basis-change families and their limits: given a curve of
//! invertible matrices A_t that degenerates at t = 0, transport the structure
//! constants along the curve and take the exact limit, then classify it.

use crate::ratfun::{fmat_from_q, fmat_inverse, fmat_mul, FMat, RatFun};
use lieclass_classifier::{classify, Classification, ClassifyError};
use lieclass_core::matrix::Mat;
use lieclass_core::scalar::{qi, qr, Q};
use lieclass_core::tensor::BasisChange;
use lieclass_core::StructureConstants;
use lieclass_invariants::Subspace;
use num::Zero;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TransitionError {
    #[error("family dimension {got} does not match tensor dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("family matrix is singular as a function of t")]
    SingularFamily,
    #[error("family matrix is singular at the sample point t = {0}")]
    SingularSample(String),
    #[error("subalgebra size {m} is not strictly between 0 and {n}")]
    BadSplit { m: usize, n: usize },
    #[error("the limit tensor violates the Jacobi identity")]
    InvalidLimit,
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}

/// A one-parameter family of basis changes A_t, invertible for t in (0, 1]
/// and singular (or divergent) at t = 0.
#[derive(Debug, Clone)]
pub enum ContractionFamily {
    /// A_t = P · diag(E_m, t·E_{n−m}): the first m columns of P are kept,
    /// the rest are crushed. The limit exists iff those m columns span a
    /// subalgebra and the crushed complement generates an ideal-like tail.
    InonuWigner { basis: BasisChange, m: usize },
    /// Affine pencil A_t = U + t·V with singular U.
    Saletan { u: Mat, v: Mat },
    /// Arbitrary matrix of rational functions of t.
    General { entries: FMat },
}

impl ContractionFamily {
    /// Trivial family t·E: scales every bracket by t, so every algebra
    /// contracts to the abelian one.
    pub fn scaling(n: usize) -> ContractionFamily {
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { RatFun::t() } else { RatFun::zero() })
                    .collect()
            })
            .collect();
        ContractionFamily::General { entries }
    }

    /// Coordinate split diag(E_m, t·E_{n−m}).
    pub fn coordinate_split(n: usize, m: usize) -> Result<ContractionFamily, TransitionError> {
        if m == 0 || m >= n {
            return Err(TransitionError::BadSplit { m, n });
        }
        Ok(ContractionFamily::InonuWigner {
            basis: BasisChange::identity(n),
            m,
        })
    }

    pub fn dim(&self) -> usize {
        match self {
            ContractionFamily::InonuWigner { basis, .. } => basis.dim(),
            ContractionFamily::Saletan { u, .. } => u.rows(),
            ContractionFamily::General { entries } => entries.len(),
        }
    }

    /// The family as a matrix of rational functions of t.
    pub fn matrix(&self) -> FMat {
        match self {
            ContractionFamily::InonuWigner { basis, m } => {
                let n = basis.dim();
                let p = fmat_from_q(basis.matrix());
                let d: FMat = (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| {
                                if i != j {
                                    RatFun::zero()
                                } else if i < *m {
                                    RatFun::one()
                                } else {
                                    RatFun::t()
                                }
                            })
                            .collect()
                    })
                    .collect();
                fmat_mul(&p, &d)
            }
            ContractionFamily::Saletan { u, v } => (0..u.rows())
                .map(|i| {
                    (0..u.cols())
                        .map(|j| {
                            RatFun::from_poly(vec![u[(i, j)].clone(), v[(i, j)].clone()])
                        })
                        .collect()
                })
                .collect(),
            ContractionFamily::General { entries } => entries.clone(),
        }
    }

    /// Exact value A_t at a rational t, when every entry is finite there.
    pub fn at(&self, t: &Q) -> Option<Mat> {
        let m = self.matrix();
        let n = self.dim();
        let mut out = Mat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = m[i][j].eval(t)?;
            }
        }
        Some(out)
    }

    /// Structural checks: square of dimension n, invertible at the sample
    /// points t ∈ {1, 1/2, 1/4}, and singular at t = 0 for the split and
    /// pencil forms.
    pub fn check(&self, n: usize) -> Result<(), TransitionError> {
        if self.dim() != n {
            return Err(TransitionError::DimensionMismatch {
                expected: n,
                got: self.dim(),
            });
        }
        match self {
            ContractionFamily::InonuWigner { m, .. } => {
                if *m == 0 || *m >= n {
                    return Err(TransitionError::BadSplit { m: *m, n });
                }
            }
            ContractionFamily::Saletan { u, v } => {
                if !u.is_square() || u.rows() != v.rows() || u.cols() != v.cols() {
                    return Err(TransitionError::DimensionMismatch {
                        expected: n,
                        got: v.rows(),
                    });
                }
                if !u.det().is_zero() {
                    return Err(TransitionError::SingularSample("0".into()));
                }
            }
            ContractionFamily::General { .. } => {}
        }
        for t in [qi(1), qr(1, 2), qr(1, 4)] {
            let a = self
                .at(&t)
                .ok_or_else(|| TransitionError::SingularSample(lieclass_core::format_q(&t)))?;
            if a.det().is_zero() {
                return Err(TransitionError::SingularSample(lieclass_core::format_q(&t)));
            }
        }
        Ok(())
    }
}

/// Transport `sc` along the family and take the exact entrywise limit at
/// t = 0. `Ok(None)` means some transported entry diverges (the curve leaves
/// the space of tensors), not a malformed family.
pub fn contract_limit(
    sc: &StructureConstants,
    fam: &ContractionFamily,
) -> Result<Option<StructureConstants>, TransitionError> {
    let n = sc.dim();
    fam.check(n)?;
    if let ContractionFamily::InonuWigner { basis, m } = fam {
        return iw_limit(sc, basis, *m);
    }
    let a = fam.matrix();
    let a_inv = fmat_inverse(&a).ok_or(TransitionError::SingularFamily)?;
    // C'^k_ij(t) = Σ_{h,f,g} (A⁻¹)^k_h C^h_fg A^f_i A^g_j.
    let mut out = StructureConstants::new(n).map_err(|_| TransitionError::InvalidLimit)?;
    for i in 0..n {
        for j in (i + 1)..n {
            // Bracket of columns i and j of A, as functions of t.
            let mut br = vec![RatFun::zero(); n];
            for f in 0..n {
                for g in 0..n {
                    if f == g {
                        continue;
                    }
                    let fg = a[f][i].mul(&a[g][j]);
                    if fg.is_zero() {
                        continue;
                    }
                    for (h, cell) in br.iter_mut().enumerate() {
                        let c = sc.get(f + 1, g + 1, h + 1);
                        if !c.is_zero() {
                            *cell = cell.add(&fg.mul(&RatFun::constant(c)));
                        }
                    }
                }
            }
            for k in 0..n {
                let mut entry = RatFun::zero();
                for (h, b) in br.iter().enumerate() {
                    if !b.is_zero() {
                        entry = entry.add(&a_inv[k][h].mul(b));
                    }
                }
                let Some(v) = entry.limit_at_zero() else {
                    return Ok(None);
                };
                if !v.is_zero() {
                    out.set(i + 1, j + 1, k + 1, v)
                        .map_err(|_| TransitionError::InvalidLimit)?;
                }
            }
        }
    }
    if !out.is_valid() {
        return Err(TransitionError::InvalidLimit);
    }
    Ok(Some(out))
}

/// Fast split-form limit: after moving to the P basis, entry (i,j,k) scales
/// by t^{w_i + w_j − w_k} with weight 0 on the kept block and 1 on the
/// crushed block. Negative exponents on nonzero entries mean divergence.
fn iw_limit(
    sc: &StructureConstants,
    basis: &BasisChange,
    m: usize,
) -> Result<Option<StructureConstants>, TransitionError> {
    let n = sc.dim();
    let moved = sc
        .apply_basis_change(basis)
        .map_err(|_| TransitionError::InvalidLimit)?;
    let w = |i: usize| usize::from(i > m);
    let mut out = StructureConstants::new(n).map_err(|_| TransitionError::InvalidLimit)?;
    for (&(i, j, k), c) in moved.canonical_entries() {
        match (w(i) + w(j)).checked_sub(w(k)) {
            None => return Ok(None),
            Some(0) => out
                .set(i, j, k, c.clone())
                .map_err(|_| TransitionError::InvalidLimit)?,
            Some(_) => {}
        }
    }
    if !out.is_valid() {
        return Err(TransitionError::InvalidLimit);
    }
    Ok(Some(out))
}

/// Result of checking a claimed transition witness.
#[derive(Debug, Clone)]
pub enum WitnessOutcome {
    /// The limit exists and lands in a different class.
    Limit(Classification),
    /// The limit exists but stays in the source class.
    Improper(Classification),
    /// Some transported entry diverges at t = 0.
    NoLimit,
}

impl WitnessOutcome {
    pub fn limit_class(&self) -> Option<&Classification> {
        match self {
            WitnessOutcome::Limit(c) | WitnessOutcome::Improper(c) => Some(c),
            WitnessOutcome::NoLimit => None,
        }
    }
}

/// Transport, take the limit, and classify both ends.
pub fn verify_transition_witness(
    sc: &StructureConstants,
    fam: &ContractionFamily,
) -> Result<WitnessOutcome, TransitionError> {
    let Some(limit) = contract_limit(sc, fam)? else {
        return Ok(WitnessOutcome::NoLimit);
    };
    let source = classify(sc)?;
    let target = classify(&limit)?;
    if source.same_as(&target) {
        Ok(WitnessOutcome::Improper(target))
    } else {
        Ok(WitnessOutcome::Limit(target))
    }
}

/// All split families P·diag(E_m, t·E_{n−m}) whose kept block is a
/// subalgebra spanned by vectors with entries in {−1, 0, 1}, one family per
/// distinct subspace and 1 ≤ m < n.
pub fn small_iw_splits(sc: &StructureConstants) -> Vec<ContractionFamily> {
    let n = sc.dim();
    let mut pool: Vec<Vec<Q>> = Vec::new();
    let mut v = vec![0i64; n];
    loop {
        // Odometer over {−1,0,1}^n, keeping one vector per sign class.
        let mut i = 0;
        while i < n {
            if v[i] < 1 {
                v[i] += 1;
                break;
            }
            v[i] = -1;
            i += 1;
        }
        if i == n {
            break;
        }
        if v.iter().find(|&&x| x != 0).is_none_or(|&x| x < 0) {
            continue;
        }
        pool.push(v.iter().map(|&x| qi(x)).collect());
    }
    let mut seen: Vec<Vec<Vec<Q>>> = Vec::new();
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    collect_splits(sc, &pool, &mut stack, 0, &mut seen, &mut out);
    out
}

fn collect_splits(
    sc: &StructureConstants,
    pool: &[Vec<Q>],
    chosen: &mut Vec<usize>,
    from: usize,
    seen: &mut Vec<Vec<Vec<Q>>>,
    out: &mut Vec<ContractionFamily>,
) {
    let n = sc.dim();
    if !chosen.is_empty() && chosen.len() < n {
        let vecs: Vec<Vec<Q>> = chosen.iter().map(|&i| pool[i].clone()).collect();
        let sub = Subspace::span(n, &vecs);
        if sub.dim() == chosen.len() && !seen.contains(&sub.basis().to_vec()) {
            seen.push(sub.basis().to_vec());
            if sub.is_subalgebra(sc) {
                let full = sub.extend_to_full_basis();
                let p = Mat::from_rows(full).transpose();
                out.push(ContractionFamily::InonuWigner {
                    basis: BasisChange::new(p).expect("extended basis is invertible"),
                    m: sub.dim(),
                });
            }
        }
    }
    if chosen.len() + 1 >= n {
        return;
    }
    for i in from..pool.len() {
        chosen.push(i);
        collect_splits(sc, pool, chosen, i + 1, seen, out);
        chosen.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lieclass_catalog::Catalog;

    fn sample(id: &str, params: &[Q]) -> StructureConstants {
        Catalog::bundled().instantiate(id, params).unwrap().tensor
    }

    #[test]
    fn scaling_family_contracts_everything_to_abelian() {
        for id in ["A_{3,9}", "A_{4,12}", "A_1+A_{3,5}"] {
            let params: Vec<Q> = if id.contains("3,5") { vec![qr(-1, 2)] } else { vec![] };
            let sc = sample(id, &params);
            let fam = ContractionFamily::scaling(sc.dim());
            let lim = contract_limit(&sc, &fam).unwrap().unwrap();
            assert!(lim.is_abelian(), "{id}");
        }
    }

    #[test]
    fn compact_simple_contracts_along_its_rotation_subalgebra() {
        // Keeping a line and crushing the transverse plane turns the compact
        // simple bracket into the fixed-rotation one.
        let sc = sample("A_{3,9}", &[]);
        let m = Mat::from_rows(vec![
            vec![qi(0), qi(1), qi(0)],
            vec![qi(0), qi(0), qi(1)],
            vec![qi(1), qi(0), qi(0)],
        ])
        .transpose();
        let fam = ContractionFamily::InonuWigner {
            basis: BasisChange::new(m).unwrap(),
            m: 1,
        };
        match verify_transition_witness(&sc, &fam).unwrap() {
            WitnessOutcome::Limit(c) => assert_eq!(c.id, "A_{3,6}"),
            other => panic!("expected a proper limit, got {other:?}"),
        }
    }

    #[test]
    fn split_without_subalgebra_diverges() {
        // span(e1, e2) is not closed under the compact simple bracket, so
        // the corresponding split has no limit.
        let sc = sample("A_{3,9}", &[]);
        let fam = ContractionFamily::coordinate_split(3, 2).unwrap();
        assert!(matches!(
            verify_transition_witness(&sc, &fam).unwrap(),
            WitnessOutcome::NoLimit
        ));
    }

    #[test]
    fn pencil_family_with_invertible_start_is_rejected() {
        let sc = sample("A_{3,9}", &[]);
        let fam = ContractionFamily::Saletan {
            u: Mat::identity(3),
            v: Mat::zero(3, 3),
        };
        assert!(matches!(
            contract_limit(&sc, &fam),
            Err(TransitionError::SingularSample(_))
        ));
    }

    #[test]
    fn small_split_enumeration_finds_coordinate_subalgebras() {
        let sc = sample("A_{3,1}", &[]);
        let fams = small_iw_splits(&sc);
        assert!(!fams.is_empty());
        for fam in &fams {
            // Every enumerated split keeps a genuine subalgebra, so the
            // limit always exists.
            assert!(contract_limit(&sc, fam).unwrap().is_some());
        }
    }
}
