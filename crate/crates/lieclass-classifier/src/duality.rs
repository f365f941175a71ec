//! Selfduality: an algebra is selfdual when some orientation-reversing
//! basis change maps its structure tensor to itself. A backtracking search
//! over signed permutations finds such a witness when one exists in that
//! form; otherwise the verdict falls back to the classification table for
//! dimensions at most 4.

use crate::{classify, ClassifyError};
use lieclass_core::matrix::Mat;
use lieclass_core::scalar::Q;
use lieclass_core::tensor::BasisChange;
use lieclass_core::StructureConstants;
use lieclass_catalog::Catalog;
use num::Zero;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictMethod {
    /// An explicit signed-permutation witness was found.
    SignedPermWitness,
    /// No witness in signed-permutation form; the verdict comes from the
    /// classification table.
    CatalogFlag,
    /// Above the classified dimensions the search result alone is reported;
    /// it is conclusive only for bases adapted to the bracket structure.
    SearchOnly,
}

#[derive(Debug, Clone)]
pub struct DualityVerdict {
    pub selfdual: bool,
    pub witness: Option<BasisChange>,
    pub method: VerdictMethod,
}

/// Exhaustive (pruned) search for an automorphism of the form
/// e_i ↦ s_i · e_{p(i)} with negative determinant.
pub fn signed_perm_automorphism(sc: &StructureConstants) -> Option<BasisChange> {
    let n = sc.dim();
    // Full antisymmetric bracket table.
    let mut br = vec![vec![Vec::<Q>::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut ei = vec![Q::zero(); n];
            let mut ej = vec![Q::zero(); n];
            ei[i] = Q::from_integer(1.into());
            ej[j] = Q::from_integer(1.into());
            br[i][j] = sc.bracket(&ei, &ej);
        }
    }
    // Indices must map to indices with the same bracket participation
    // counts: as an argument and as an output coordinate.
    let mut deg = vec![(0usize, 0usize); n];
    for i in 0..n {
        for j in (i + 1)..n {
            if br[i][j].iter().any(|c| !c.is_zero()) {
                deg[i].0 += 1;
                deg[j].0 += 1;
                for (k, c) in br[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        deg[k].1 += 1;
                    }
                }
            }
        }
    }
    // Assign the most constrained positions first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(deg[i].0 + deg[i].1));

    let mut target: Vec<Option<usize>> = vec![None; n];
    let mut sign: Vec<i8> = vec![1; n];
    let mut used = vec![false; n];
    let found = dfs(
        sc, &br, &deg, &order, 0, &mut target, &mut sign, &mut used,
    );
    found.map(|(perm, signs)| {
        let mut m = Mat::zero(n, n);
        for (i, &p) in perm.iter().enumerate() {
            m[(p, i)] = Q::from_integer(i64::from(signs[i]).into());
        }
        BasisChange::new(m).expect("signed permutation matrices are invertible")
    })
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    sc: &StructureConstants,
    br: &[Vec<Vec<Q>>],
    deg: &[(usize, usize)],
    order: &[usize],
    depth: usize,
    target: &mut Vec<Option<usize>>,
    sign: &mut Vec<i8>,
    used: &mut Vec<bool>,
) -> Option<(Vec<usize>, Vec<i8>)> {
    let n = br.len();
    if depth == n {
        let perm: Vec<usize> = target.iter().map(|t| t.unwrap()).collect();
        let det_sign = perm_parity(&perm) * sign.iter().product::<i8>();
        if det_sign >= 0 {
            return None;
        }
        let mut m = Mat::zero(n, n);
        for (i, &p) in perm.iter().enumerate() {
            m[(p, i)] = Q::from_integer(i64::from(sign[i]).into());
        }
        let bc = BasisChange::new(m).ok()?;
        if sc.apply_basis_change(&bc).ok()? == *sc {
            return Some((perm, sign.clone()));
        }
        return None;
    }
    let pos = order[depth];
    for t in 0..n {
        if used[t] || deg[pos] != deg[t] {
            continue;
        }
        for s in [1i8, -1] {
            target[pos] = Some(t);
            sign[pos] = s;
            used[t] = true;
            if consistent(br, target, sign, used) {
                if let Some(hit) = dfs(sc, br, deg, order, depth + 1, target, sign, used) {
                    return Some(hit);
                }
            }
            used[t] = false;
            target[pos] = None;
        }
    }
    None
}

/// Partial check: every bracket between two already-assigned positions must
/// agree with the image bracket wherever enough of the map is known.
fn consistent(br: &[Vec<Vec<Q>>], target: &[Option<usize>], sign: &[i8], used: &[bool]) -> bool {
    let n = br.len();
    for a in 0..n {
        let Some(pa) = target[a] else { continue };
        for b in (a + 1)..n {
            let Some(pb) = target[b] else { continue };
            let ss = i64::from(sign[a] * sign[b]);
            // Leftover = s_a s_b [e_{p_a}, e_{p_b}] − Σ_k C^k_ab s_k e_{p_k}.
            let mut leftover: Vec<Q> = br[pa][pb]
                .iter()
                .map(|c| c * Q::from_integer(ss.into()))
                .collect();
            let mut incomplete = false;
            for (k, c) in br[a][b].iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                match target[k] {
                    Some(pk) => {
                        leftover[pk] -= c * Q::from_integer(i64::from(sign[k]).into());
                    }
                    None => incomplete = true,
                }
            }
            for (m, v) in leftover.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                // A nonzero residue at a coordinate already claimed can
                // never be matched later; neither can any residue once all
                // output coordinates are assigned.
                if used[m] || !incomplete {
                    return false;
                }
            }
        }
    }
    true
}

fn perm_parity(perm: &[usize]) -> i8 {
    let mut seen = vec![false; perm.len()];
    let mut parity = 1i8;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut at = start;
        while !seen[at] {
            seen[at] = true;
            at = perm[at];
            len += 1;
        }
        if len % 2 == 0 {
            parity = -parity;
        }
    }
    parity
}

/// Decide selfduality, with an explicit witness when one exists in
/// signed-permutation form.
pub fn duality_verdict(sc: &StructureConstants) -> Result<DualityVerdict, ClassifyError> {
    if let Some(w) = signed_perm_automorphism(sc) {
        return Ok(DualityVerdict {
            selfdual: true,
            witness: Some(w),
            method: VerdictMethod::SignedPermWitness,
        });
    }
    if sc.dim() <= 4 {
        let c = classify(sc)?;
        let class = Catalog::bundled().get(&c.id).ok_or_else(|| {
            ClassifyError::Unrecognized(format!("class {} missing from the table", c.id))
        })?;
        return Ok(DualityVerdict {
            selfdual: class.selfdual,
            witness: None,
            method: VerdictMethod::CatalogFlag,
        });
    }
    Ok(DualityVerdict {
        selfdual: false,
        witness: None,
        method: VerdictMethod::SearchOnly,
    })
}
