//! Every invariant must be unchanged under arbitrary invertible basis
//! changes; the dimension-3 split must recombine exactly and satisfy its
//! compatibility relation.

use lieclass_core::matrix::Mat;
use lieclass_core::scalar::{qr, Q};
use lieclass_core::tensor::{BasisChange, StructureConstants};
use lieclass_invariants::{
    behr_form, codim1_ideals, decompose_direct_sum, invariant_signature, radical, series_profile,
};
use num::Zero;
use proptest::prelude::*;

fn templates() -> Vec<StructureConstants> {
    let mk = |dim: usize, brs: &[(usize, usize, usize, i64, i64)]| {
        let mut t = StructureConstants::new(dim).unwrap();
        for &(i, j, k, p, q) in brs {
            t.set(i, j, k, qr(p, q)).unwrap();
        }
        t
    };
    vec![
        mk(3, &[]),
        mk(3, &[(2, 3, 1, 1, 1)]),
        mk(3, &[(1, 3, 1, 1, 1), (2, 3, 2, 1, 1)]),
        mk(3, &[(1, 3, 1, 1, 1), (2, 3, 2, -1, 1)]),
        mk(3, &[(1, 3, 2, -1, 1), (2, 3, 1, 1, 1)]),
        mk(3, &[(1, 2, 3, 1, 1), (2, 3, 1, 1, 1), (3, 1, 2, 1, 1)]),
        mk(3, &[(1, 2, 3, -1, 1), (2, 3, 1, 1, 1), (3, 1, 2, 1, 1)]),
        mk(4, &[(2, 4, 1, 1, 1), (3, 4, 2, 1, 1)]),
        mk(4, &[(1, 2, 1, 1, 1), (3, 4, 3, 1, 1)]),
        mk(
            4,
            &[
                (2, 3, 1, 1, 1),
                (1, 4, 1, 2, 1),
                (2, 4, 2, 1, 1),
                (3, 4, 2, 1, 1),
                (3, 4, 3, 1, 1),
            ],
        ),
    ]
}

fn small_q() -> impl Strategy<Value = Q> {
    (-3i64..=3, 1i64..=2).prop_map(|(p, q)| qr(p, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn signature_is_conjugation_invariant(
        ti in 0..templates().len(),
        raw in prop::collection::vec(small_q(), 16),
    ) {
        let sc = &templates()[ti];
        let n = sc.dim();
        let Some(m) = BasisChange::new(Mat::from_fn(n, n, |i, j| raw[i * n + j].clone())).ok()
        else {
            return Ok(());
        };
        let moved = sc.apply_basis_change(&m).unwrap();
        prop_assert_eq!(invariant_signature(&moved), invariant_signature(sc));
    }

    #[test]
    fn series_profile_is_conjugation_invariant(
        ti in 0..templates().len(),
        raw in prop::collection::vec(small_q(), 16),
    ) {
        let sc = &templates()[ti];
        let n = sc.dim();
        let Some(m) = BasisChange::new(Mat::from_fn(n, n, |i, j| raw[i * n + j].clone())).ok()
        else {
            return Ok(());
        };
        let moved = sc.apply_basis_change(&m).unwrap();
        prop_assert_eq!(series_profile(&moved), series_profile(sc));
    }

    #[test]
    fn behr_split_recombines_and_satisfies_constraint(
        ti in 0..5usize,
        raw in prop::collection::vec(small_q(), 9),
    ) {
        let sc = &templates()[ti];
        let Some(m) = BasisChange::new(Mat::from_fn(3, 3, |i, j| raw[i * 3 + j].clone())).ok()
        else {
            return Ok(());
        };
        let moved = sc.apply_basis_change(&m).unwrap();
        let b = behr_form(&moved).unwrap();
        prop_assert_eq!(b.recombine(), moved);
        prop_assert!(b.constraint_residual().iter().all(Zero::is_zero));
    }

    #[test]
    fn codim1_representatives_are_verified_ideals(
        ti in 0..templates().len(),
        raw in prop::collection::vec(small_q(), 16),
    ) {
        let sc = &templates()[ti];
        let n = sc.dim();
        let Some(m) = BasisChange::new(Mat::from_fn(n, n, |i, j| raw[i * n + j].clone())).ok()
        else {
            return Ok(());
        };
        let moved = sc.apply_basis_change(&m).unwrap();
        let r = codim1_ideals(&moved);
        for j in &r.ideals {
            prop_assert_eq!(j.dim(), n - 1);
            prop_assert!(j.is_ideal(&moved));
        }
    }

    #[test]
    fn radical_is_solvable_ideal_of_invariant_dim(
        ti in 0..templates().len(),
        raw in prop::collection::vec(small_q(), 16),
    ) {
        let sc = &templates()[ti];
        let n = sc.dim();
        let Some(m) = BasisChange::new(Mat::from_fn(n, n, |i, j| raw[i * n + j].clone())).ok()
        else {
            return Ok(());
        };
        let moved = sc.apply_basis_change(&m).unwrap();
        let r = radical(&moved);
        prop_assert_eq!(r.dim(), radical(sc).dim());
        prop_assert!(r.is_ideal(&moved));
        if let Some(t) = r.restricted(&moved) {
            prop_assert!(series_profile(&t).solvable);
        }
    }

    #[test]
    fn decomposition_factors_commute_and_span(
        ti in 0..templates().len(),
        raw in prop::collection::vec(small_q(), 16),
    ) {
        let sc = &templates()[ti];
        let n = sc.dim();
        let Some(m) = BasisChange::new(Mat::from_fn(n, n, |i, j| raw[i * n + j].clone())).ok()
        else {
            return Ok(());
        };
        let moved = sc.apply_basis_change(&m).unwrap();
        let d = decompose_direct_sum(&moved);
        prop_assert_eq!(d.essential_dimension, decompose_direct_sum(sc).essential_dimension);
        let total: usize = d.factors.iter().map(|f| f.subspace.dim()).sum();
        prop_assert_eq!(total, n);
        for a in 0..d.factors.len() {
            for b in (a + 1)..d.factors.len() {
                let fa = &d.factors[a].subspace;
                let fb = &d.factors[b].subspace;
                prop_assert!(fa.intersect(fb).is_zero());
                prop_assert!(
                    lieclass_invariants::Subspace::bracket_span(&moved, fa, fb).is_zero()
                );
            }
        }
    }
}
