//! Enumeration of codimension-1 ideals.
//!
//! Every codimension-1 ideal contains the derived subspace D = [A, A]
//! (the quotient by such an ideal is 1-dimensional, hence abelian), and
//! conversely every hyperplane containing D is an ideal because
//! [A, H] ⊆ [A, A] = D ⊆ H. Enumeration therefore reduces to hyperplanes of
//! the quotient A/D. When that quotient has dimension ≥ 2 the family is
//! infinite; a finite set of representatives sufficient for classification is
//! returned, built from canonical subspaces: the centralizer of D (abelian
//! representatives) and the locus where the adjoint acts on D as a scalar
//! (pure-scaling representatives), plus echelon coordinate hyperplanes.

use crate::subspace::{centralizer, derived_subspace, Subspace};
use lieclass_core::matrix::Mat;
use lieclass_core::scalar::{qi, Q};
use lieclass_core::StructureConstants;
use num::Zero;

/// Result of the enumeration. `unique` is true when the algebra has exactly
/// one codimension-1 ideal; otherwise `ideals` holds finitely many
/// representatives of the (possibly infinite) family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codim1Ideals {
    pub ideals: Vec<Subspace>,
    pub unique: bool,
}

pub fn codim1_ideals(sc: &StructureConstants) -> Codim1Ideals {
    let n = sc.dim();
    let derived = derived_subspace(sc);
    let d = derived.dim();
    if d == n {
        // Perfect algebra: no codimension-1 ideal exists.
        return Codim1Ideals {
            ideals: Vec::new(),
            unique: true,
        };
    }
    if d == n - 1 {
        return Codim1Ideals {
            ideals: vec![derived],
            unique: true,
        };
    }
    let q = n - d;
    let mut candidates: Vec<Subspace> = Vec::new();
    let complement = complement_directions(&derived);

    // Echelon coordinate hyperplanes: D plus all but one complement direction.
    for drop in 0..complement.len() {
        let mut vs = derived.basis().to_vec();
        for (idx, v) in complement.iter().enumerate() {
            if idx != drop {
                vs.push(v.clone());
            }
        }
        candidates.push(Subspace::span(n, &vs));
    }

    // Abelian representatives: directions inside the centralizer of D give
    // abelian hyperplanes when D itself is abelian.
    if derived.is_abelian_subspace(sc) {
        let z = centralizer(sc, &derived);
        let s = z.sum(&derived);
        if s.dim() >= n - 1 {
            candidates.extend(abelian_hyperplanes(sc, &derived, &z, q));
        }
    }

    // Pure-scaling representatives: w with ad w acting on D as a scalar.
    if d > 0 {
        for w in scalar_action_directions(sc, &derived) {
            let mut vs = derived.basis().to_vec();
            vs.push(w);
            let h = Subspace::span(n, &vs);
            if h.dim() == n - 1 {
                candidates.push(h);
            }
        }
    }

    let mut ideals: Vec<Subspace> = Vec::new();
    for c in candidates {
        if c.dim() == n - 1 && c.is_ideal(sc) && !ideals.contains(&c) {
            ideals.push(c);
        }
    }
    Codim1Ideals {
        ideals,
        unique: false,
    }
}

/// Standard directions completing `sub` to the whole space.
fn complement_directions(sub: &Subspace) -> Vec<Vec<Q>> {
    let full = sub.extend_to_full_basis();
    full[sub.dim()..].to_vec()
}

/// Hyperplanes H ⊇ D with all brackets inside H vanishing, drawn from the
/// centralizer of D. Covers the quotient dimensions arising for n ≤ 4.
fn abelian_hyperplanes(
    sc: &StructureConstants,
    derived: &Subspace,
    z: &Subspace,
    q: usize,
) -> Vec<Subspace> {
    let n = sc.dim();
    let s = z.sum(derived);
    let mut out = Vec::new();
    if q == 2 {
        // One extra direction from the centralizer suffices.
        for w in complement_in(&s, derived) {
            let mut vs = derived.basis().to_vec();
            vs.push(w);
            out.push(Subspace::span(n, &vs));
        }
    } else {
        // Need q−1 pairwise-commuting directions. Candidates: subsets of the
        // centralizer complement plus the center-of-centralizer directions.
        let dirs = complement_in(&s, derived);
        let zz = centralizer(sc, z).intersect(z);
        let preferred = complement_in(&zz.sum(derived), derived);
        let mut pool = preferred;
        pool.extend(dirs);
        let subsets = subsets_of_size(pool.len(), q - 1);
        for idxs in subsets {
            let mut vs = derived.basis().to_vec();
            for &i in &idxs {
                vs.push(pool[i].clone());
            }
            let h = Subspace::span(n, &vs);
            if h.dim() == n - 1 && h.is_abelian_subspace(sc) {
                out.push(h);
            }
        }
    }
    out
}

fn complement_in(big: &Subspace, small: &Subspace) -> Vec<Vec<Q>> {
    let mut acc = small.basis().to_vec();
    let mut out = Vec::new();
    for v in big.basis() {
        let mut trial = acc.clone();
        trial.push(v.clone());
        if Subspace::span(small.ambient(), &trial).dim() > Subspace::span(small.ambient(), &acc).dim()
        {
            acc.push(v.clone());
            out.push(v.clone());
        }
    }
    out
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Directions w (mod D) such that ad w restricted to D is a scalar multiple
/// of the identity: solutions of the linear system ad w|_D − λ·Id = 0 in the
/// unknowns (w, λ).
fn scalar_action_directions(sc: &StructureConstants, derived: &Subspace) -> Vec<Vec<Q>> {
    let n = sc.dim();
    let dbasis = derived.basis();
    let d = dbasis.len();
    if d == 0 {
        return Vec::new();
    }
    // Unknowns: w_1..w_n, λ. Equations: [w, d_a] − λ d_a = 0 expressed in the
    // coordinates of D (ambient components suffice and are linear).
    let rows = d * n;
    let mut m = Mat::zero(rows, n + 1);
    for (a, da) in dbasis.iter().enumerate() {
        for i in 0..n {
            let mut e = vec![Q::zero(); n];
            e[i] = qi(1);
            let b = sc.bracket(&e, da);
            for (k, v) in b.into_iter().enumerate() {
                m[(a * n + k, i)] = v;
            }
        }
        for k in 0..n {
            m[(a * n + k, n)] = -da[k].clone();
        }
    }
    m.kernel()
        .into_iter()
        .map(|mut v| {
            v.truncate(n);
            v
        })
        .filter(|w| w.iter().any(|c| !c.is_zero()) && !derived.contains(w))
        .collect()
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
    fn simple_algebra_has_no_codim1_ideal() {
        let sc = mk(3, &[(1, 2, 3, 1), (2, 3, 1, 1), (3, 1, 2, 1)]);
        let r = codim1_ideals(&sc);
        assert!(r.ideals.is_empty());
        assert!(r.unique);
    }

    #[test]
    fn solvable_dim3_contains_abelian_plane() {
        for brs in [
            vec![(1, 3, 1, 1), (2, 3, 2, 1)],            // diag(1,1)
            vec![(1, 3, 1, 1), (2, 3, 1, 1), (2, 3, 2, 1)], // Jordan block
            vec![(1, 3, 2, -1), (2, 3, 1, 1)],           // rotation type
        ] {
            let sc = mk(3, &brs);
            let r = codim1_ideals(&sc);
            assert!(!r.ideals.is_empty());
            assert!(r
                .ideals
                .iter()
                .any(|j| j.is_abelian_subspace(&sc)));
        }
    }

    #[test]
    fn heisenberg_family_reports_non_unique_with_abelian_member() {
        let sc = mk(3, &[(2, 3, 1, 1)]);
        let r = codim1_ideals(&sc);
        assert!(!r.unique);
        assert!(r.ideals.iter().any(|j| j.is_abelian_subspace(&sc)));
        for j in &r.ideals {
            assert!(j.is_ideal(&sc));
            assert_eq!(j.dim(), 2);
        }
    }

    #[test]
    fn nilpotent_dim4_has_abelian_ideal() {
        // [e2,e4]=e1, [e3,e4]=e2.
        let sc = mk(4, &[(2, 4, 1, 1), (3, 4, 2, 1)]);
        let r = codim1_ideals(&sc);
        assert!(r.ideals.iter().any(|j| j.is_abelian_subspace(&sc)));
    }

    #[test]
    fn heisenberg_ideal_inside_dim4() {
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
        let r = codim1_ideals(&sc);
        assert!(r.unique);
        assert_eq!(r.ideals.len(), 1);
        let j = &r.ideals[0];
        assert_eq!(j.dim(), 3);
        assert!(!j.is_abelian_subspace(&sc));
        let restricted = j.restricted(&sc).unwrap();
        // The restriction is the Heisenberg algebra: nilpotent, derived dim 1.
        let p = crate::series::series_profile(&restricted);
        assert!(p.nilpotent);
    }

    #[test]
    fn scaling_ideal_found_when_no_abelian_plane_exists() {
        // [e1,e3]=e1, [e2,e3]=e2, [e1,e4]=-e2, [e2,e4]=e1.
        let sc = mk(
            4,
            &[(1, 3, 1, 1), (2, 3, 2, 1), (1, 4, 2, -1), (2, 4, 1, 1)],
        );
        let r = codim1_ideals(&sc);
        assert!(!r.ideals.is_empty());
        // Some representative restricts to the pure scaling algebra: the
        // adjoint of the complement direction acts as the identity.
        let found = r.ideals.iter().any(|j| {
            !j.is_abelian_subspace(&sc) && j.dim() == 3
        });
        assert!(found);
    }

    #[test]
    fn abelian_algebra_returns_representatives() {
        let sc = mk(4, &[]);
        let r = codim1_ideals(&sc);
        assert!(!r.unique);
        assert!(!r.ideals.is_empty());
        for j in &r.ideals {
            assert_eq!(j.dim(), 3);
        }
    }
}
