//! Direct-sum decomposition and essential dimension.
//!
//! Central directions that avoid the derived subspace split off as
//! 1-dimensional abelian factors: the remaining part always closes because
//! its bracket lands in the derived subspace. The only further splitting
//! needed for dimension ≤ 4 is the pairing of two 2-dimensional non-abelian
//! factors, which is detected through the eigen-lines of the adjoint action
//! on the derived subspace.

use crate::subspace::{center, derived_subspace, Subspace};
use lieclass_core::scalar::{qi, Q};
use lieclass_core::StructureConstants;
use num::Zero;

/// One factor: the subspace it lives on and its restricted tensor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub subspace: Subspace,
    pub tensor: StructureConstants,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectSumDecomposition {
    /// Pairwise-commuting factors spanning the whole space.
    pub factors: Vec<Factor>,
    /// Dimension of the part left after splitting off all abelian
    /// 1-dimensional factors; 0 for abelian algebras.
    pub essential_dimension: usize,
}

pub fn decompose_direct_sum(sc: &StructureConstants) -> DirectSumDecomposition {
    let n = sc.dim();
    let derived = derived_subspace(sc);
    let z = center(sc);

    // Split central directions outside the derived subspace as ℝ factors.
    let mut abelian_factors: Vec<Vec<Q>> = Vec::new();
    let mut core_span = derived.clone();
    for v in z.basis() {
        let mut trial = core_span.basis().to_vec();
        trial.extend(abelian_factors.iter().cloned());
        if !Subspace::span(n, &trial).contains(v) {
            abelian_factors.push(v.clone());
        }
    }
    // Core: any complement of the split directions containing the derived
    // subspace; it is an ideal since its bracket lies in the derived part.
    let split = Subspace::span(n, &abelian_factors);
    let mut core_vecs = core_span.basis().to_vec();
    for i in 0..n {
        let mut e = vec![Q::zero(); n];
        e[i] = qi(1);
        let mut trial = core_vecs.clone();
        trial.push(e.clone());
        let grown = Subspace::span(n, &trial);
        let mut with_split = grown.basis().to_vec();
        with_split.extend(split.basis().iter().cloned());
        if grown.dim() > Subspace::span(n, &core_vecs).dim()
            && Subspace::span(n, &with_split).dim() == grown.dim() + split.dim()
        {
            core_vecs = grown.basis().to_vec();
        }
    }
    core_span = Subspace::span(n, &core_vecs);
    debug_assert_eq!(core_span.dim() + split.dim(), n);

    let mut factors: Vec<Factor> = Vec::new();
    for v in abelian_factors {
        let s = Subspace::span(n, &[v]);
        let t = s.restricted(sc).expect("central line closes");
        factors.push(Factor {
            subspace: s,
            tensor: t,
        });
    }

    // Try to split the core into two commuting non-abelian halves (the
    // two-plane-pair case in dimension 4).
    let core_tensor = core_span.restricted(sc).expect("core closes");
    match split_core(sc, &core_span) {
        Some((a, b)) => {
            for s in [a, b] {
                let t = s.restricted(sc).expect("factor closes");
                factors.push(Factor {
                    subspace: s,
                    tensor: t,
                });
            }
        }
        None => {
            if core_span.dim() > 0 {
                factors.push(Factor {
                    subspace: core_span.clone(),
                    tensor: core_tensor,
                });
            }
        }
    }

    let essential_dimension = if core_span.dim() == 0 || core_span.restricted(sc).map(|t| t.is_abelian()).unwrap_or(false)
    {
        0
    } else {
        core_span.dim()
    };
    DirectSumDecomposition {
        factors,
        essential_dimension,
    }
}

/// Splits a centerless 4-dimensional core with 2-dimensional abelian derived
/// subspace into two commuting 2-dimensional factors, when possible.
fn split_core(sc: &StructureConstants, core: &Subspace) -> Option<(Subspace, Subspace)> {
    let n = sc.dim();
    if core.dim() != 4 {
        return None;
    }
    let t = core.restricted(sc)?;
    let derived = derived_subspace(&t);
    if derived.dim() != 2 || !derived.is_abelian_subspace(&t) || !center(&t).is_zero() {
        return None;
    }
    // Find two eigen-lines of the adjoint action on the derived plane by
    // scanning a fixed pool of elements.
    let pool: Vec<Vec<Q>> = {
        let mut p: Vec<Vec<Q>> = (0..4)
            .map(|i| {
                let mut e = vec![Q::zero(); 4];
                e[i] = qi(1);
                e
            })
            .collect();
        for i in 0..4 {
            for j in (i + 1)..4 {
                let mut e = vec![Q::zero(); 4];
                e[i] = qi(1);
                e[j] = qi(1);
                p.push(e);
            }
        }
        p
    };
    for x in &pool {
        let ad = t.ad_of_vector(x);
        // Restrict to the derived plane and split into eigen-lines.
        let basis = derived.basis();
        let mut m = lieclass_core::matrix::Mat::zero(2, 2);
        let bmat = lieclass_core::matrix::Mat::from_rows(basis.to_vec()).transpose();
        let mut ok = true;
        for (c, b) in basis.iter().enumerate() {
            let img = ad.mul_vec(b);
            match bmat.solve(&img) {
                Some(coords) => {
                    for r in 0..2 {
                        m[(r, c)] = coords[r].clone();
                    }
                }
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        // Two distinct rational eigenvalues give the two eigen-lines.
        let tr = m.trace();
        let det = m.det();
        let disc = &tr * &tr - qi(4) * det;
        let Some(sq) = rational_sqrt(&disc) else {
            continue;
        };
        if sq.is_zero() {
            continue;
        }
        let mut lines: Vec<Subspace> = Vec::new();
        for sign in [qi(1), qi(-1)] {
            let lam = (&tr + sign * &sq) / qi(2);
            let shifted = lieclass_core::matrix::Mat::from_fn(2, 2, |r, c| {
                if r == c {
                    &m[(r, c)] - &lam
                } else {
                    m[(r, c)].clone()
                }
            });
            for k in shifted.kernel() {
                let mut v = vec![Q::zero(); 4];
                for (idx, coef) in k.iter().enumerate() {
                    for r in 0..4 {
                        v[r] += coef * &basis[idx][r];
                    }
                }
                let line = Subspace::span(4, &[v]);
                if line.dim() == 1 && !lines.contains(&line) {
                    lines.push(line);
                }
            }
        }
        if lines.len() != 2 {
            continue;
        }
        // For each eigen-line d_i, the matching factor is
        // {y : [y, d_other] = 0 and [y, core] ⊆ span(d_i)}.
        let d1 = &lines[0];
        let d2 = &lines[1];
        let (Some(f1), Some(f2)) = (factor_around(&t, d1, d2), factor_around(&t, d2, d1)) else {
            continue;
        };
        if f1.dim() != 2 || f2.dim() != 2 {
            continue;
        }
        if !f1.intersect(&f2).is_zero() || f1.sum(&f2).dim() != 4 {
            continue;
        }
        if !Subspace::bracket_span(&t, &f1, &f2).is_zero() {
            continue;
        }
        // Lift back to the ambient space.
        let lift = |s: &Subspace| {
            let vs: Vec<Vec<Q>> = s
                .basis()
                .iter()
                .map(|v| {
                    let mut out = vec![Q::zero(); n];
                    for (idx, coef) in v.iter().enumerate() {
                        for r in 0..n {
                            out[r] += coef * &core.basis()[idx][r];
                        }
                    }
                    out
                })
                .collect();
            Subspace::span(n, &vs)
        };
        return Some((lift(&f1), lift(&f2)));
    }
    None
}

fn factor_around(
    t: &StructureConstants,
    own: &Subspace,
    other: &Subspace,
) -> Option<Subspace> {
    // Solve for {y : [y, other] = 0 and [y, e_b] ∈ own for all b}. Both
    // conditions are linear in y; the second uses functionals annihilating
    // the own line.
    let n = t.dim();
    let ann = lieclass_core::matrix::Mat::from_rows(own.basis().to_vec()).kernel();
    let mut rows: Vec<Vec<Q>> = Vec::new();
    // [y, d] = 0 for the other line.
    for d in other.basis() {
        for k in 0..n {
            let mut row = vec![Q::zero(); n];
            for (i, cell) in row.iter_mut().enumerate() {
                let mut e = vec![Q::zero(); n];
                e[i] = qi(1);
                *cell = t.bracket(&e, d)[k].clone();
            }
            rows.push(row);
        }
    }
    // φ([y, e_b]) = 0 for each annihilating functional φ of the own line.
    for b in 0..n {
        let mut eb = vec![Q::zero(); n];
        eb[b] = qi(1);
        for phi in &ann {
            let mut row = vec![Q::zero(); n];
            for (i, cell) in row.iter_mut().enumerate() {
                let mut e = vec![Q::zero(); n];
                e[i] = qi(1);
                let br = t.bracket(&e, &eb);
                *cell = br
                    .iter()
                    .zip(phi)
                    .map(|(x, p)| x * p)
                    .fold(Q::zero(), |acc, v| acc + v);
            }
            rows.push(row);
        }
    }
    let m = lieclass_core::matrix::Mat::from_rows(rows);
    Some(Subspace::span(n, &m.kernel()))
}

fn rational_sqrt(x: &Q) -> Option<Q> {
    use num::bigint::BigInt;
    if x < &Q::zero() {
        return None;
    }
    if x.is_zero() {
        return Some(Q::zero());
    }
    let isqrt = |v: &BigInt| -> Option<BigInt> {
        let r = v.sqrt();
        if &(&r * &r) == v {
            Some(r)
        } else {
            None
        }
    };
    let n = isqrt(x.numer())?;
    let d = isqrt(x.denom())?;
    Some(Q::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use lieclass_core::scalar::qi;

    fn mk(dim: usize, brs: &[(usize, usize, usize, i64)]) -> StructureConstants {
        let mut t = StructureConstants::new(dim).unwrap();
        for &(i, j, k, c) in brs {
            t.set(i, j, k, qi(c)).unwrap();
        }
        t
    }

    #[test]
    fn heisenberg_plus_line_splits() {
        let sc = mk(4, &[(2, 3, 1, 1)]);
        let d = decompose_direct_sum(&sc);
        assert_eq!(d.essential_dimension, 3);
        assert_eq!(d.factors.len(), 2);
        let dims: Vec<usize> = d.factors.iter().map(|f| f.subspace.dim()).collect();
        assert!(dims.contains(&1) && dims.contains(&3));
    }

    #[test]
    fn abelian_splits_into_lines() {
        let sc = mk(4, &[]);
        let d = decompose_direct_sum(&sc);
        assert_eq!(d.essential_dimension, 0);
        assert_eq!(d.factors.len(), 4);
    }

    #[test]
    fn two_plane_pair_splits() {
        // [e1,e2]=e1, [e3,e4]=e3.
        let sc = mk(4, &[(1, 2, 1, 1), (3, 4, 3, 1)]);
        let d = decompose_direct_sum(&sc);
        assert_eq!(d.essential_dimension, 4);
        assert_eq!(d.factors.len(), 2);
        for f in &d.factors {
            assert_eq!(f.subspace.dim(), 2);
            assert!(!f.tensor.is_abelian());
        }
    }

    #[test]
    fn plane_pair_survives_conjugation() {
        use lieclass_core::matrix::Mat;
        use lieclass_core::tensor::BasisChange;
        let sc = mk(4, &[(1, 2, 1, 1), (3, 4, 3, 1)]);
        let m = BasisChange::new(Mat::from_rows(vec![
            vec![qi(1), qi(1), qi(0), qi(2)],
            vec![qi(0), qi(1), qi(1), qi(0)],
            vec![qi(1), qi(0), qi(1), qi(1)],
            vec![qi(0), qi(0), qi(1), qi(1)],
        ]))
        .unwrap();
        let moved = sc.apply_basis_change(&m).unwrap();
        let d = decompose_direct_sum(&moved);
        assert_eq!(d.factors.len(), 2);
        for f in &d.factors {
            assert_eq!(f.subspace.dim(), 2);
        }
    }

    #[test]
    fn indecomposable_comes_back_whole() {
        // [e2,e3]=e1, [e1,e4]=2e1, [e2,e4]=e2, [e3,e4]=e2+e3.
        let sc = mk(
            4,
            &[
                (2, 3, 1, 1),
                (1, 4, 1, 2),
                (2, 4, 2, 1),
                (3, 4, 2, 1),
                (3, 4, 3, 1),
            ],
        );
        let d = decompose_direct_sum(&sc);
        assert_eq!(d.factors.len(), 1);
        assert_eq!(d.essential_dimension, 4);
    }

    #[test]
    fn simple_summand_with_central_line() {
        let sc = mk(4, &[(1, 2, 3, 1), (2, 3, 1, 1), (3, 1, 2, 1)]);
        let d = decompose_direct_sum(&sc);
        assert_eq!(d.factors.len(), 2);
        assert_eq!(d.essential_dimension, 3);
    }
}
