//! Properties of the Jordan decomposition and its scale normalization:
//! structural faithfulness against the input matrix, idempotence, rescale
//! invariance, independence from the choice of complement vector, and
//! agreement with a similarity-witness oracle on 2×2 matrices.

use lieclass_core::matrix::Mat;
use lieclass_core::scalar::{qi, qr, Q};
use lieclass_core::StructureConstants;
use lieclass_normal_form::poly::{degree, monic, mul, Poly};
use lieclass_normal_form::{
    njnf, normalize, real_jordan_form, restricted_adjoint, Eigenvalue, JordanBlock,
};
use lieclass_invariants::Subspace;
use num::{One, Zero};
use proptest::prelude::*;

fn small_q() -> impl Strategy<Value = Q> {
    (-4i64..=4, 1i64..=3).prop_map(|(p, q)| qr(p, q))
}

fn rand_mat(n: usize) -> impl Strategy<Value = Mat> {
    prop::collection::vec(small_q(), n * n)
        .prop_map(move |v| Mat::from_fn(n, n, |i, j| v[i * n + j].clone()))
}

/// Characteristic polynomial reconstructed from a block list, grouping
/// Galois-conjugate blocks so each irreducible factor is counted once.
fn char_poly_of_blocks(blocks: &[JordanBlock]) -> Poly {
    let mut acc: Poly = vec![Q::one()];
    let mut algebraic_degree_budget: Vec<(Poly, usize)> = Vec::new();
    for b in blocks {
        match &b.eigenvalue {
            Eigenvalue::Rational(l) => {
                let factor = vec![-l.clone(), Q::one()];
                for _ in 0..b.size {
                    acc = mul(&acc, &factor);
                }
            }
            Eigenvalue::ComplexPair { re, im_sq } => {
                let factor = vec![re * re + im_sq, qi(-2) * re, Q::one()];
                for _ in 0..b.size {
                    acc = mul(&acc, &factor);
                }
            }
            Eigenvalue::Algebraic(a) => {
                algebraic_degree_budget.push((a.minpoly.clone(), b.size));
            }
            Eigenvalue::CubicPair { minpoly } => {
                algebraic_degree_budget.push((minpoly.clone(), 2 * b.size));
            }
        }
    }
    // Conjugate blocks of one irreducible factor f of degree d appear with
    // identical sizes; together every layer of total size s contributes
    // f^s where d·s equals the pooled degree budget.
    while let Some((f, _)) = algebraic_degree_budget.first().cloned() {
        let d = degree(&f);
        let total: usize = algebraic_degree_budget
            .iter()
            .filter(|(g, _)| g == &f)
            .map(|(_, s)| *s)
            .sum();
        algebraic_degree_budget.retain(|(g, _)| g != &f);
        assert_eq!(total % d, 0, "conjugate blocks must balance");
        for _ in 0..(total / d) {
            acc = mul(&acc, &f);
        }
    }
    monic(&acc)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn blocks_reproduce_characteristic_polynomial(m in rand_mat(3)) {
        let blocks = real_jordan_form(&m).unwrap();
        prop_assert_eq!(char_poly_of_blocks(&blocks), monic(&m.char_poly()));
    }

    #[test]
    fn rational_rank_sequences_match(m in rand_mat(3)) {
        let n = m.rows();
        let blocks = real_jordan_form(&m).unwrap();
        let mut rats: Vec<Q> = Vec::new();
        for b in &blocks {
            if let Eigenvalue::Rational(l) = &b.eigenvalue {
                if !rats.contains(l) {
                    rats.push(l.clone());
                }
            }
        }
        for l in rats {
            let mut shifted = m.clone();
            for i in 0..n {
                shifted[(i, i)] -= &l;
            }
            let mut pw = Mat::identity(n);
            for k in 1..=n {
                pw = pw.mul(&shifted);
                let nullity = n - pw.rank();
                let predicted: usize = blocks
                    .iter()
                    .filter(|b| b.eigenvalue == Eigenvalue::Rational(l.clone()))
                    .map(|b| b.size.min(k))
                    .sum();
                prop_assert_eq!(nullity, predicted);
            }
        }
    }

    #[test]
    fn normalize_is_idempotent(m in rand_mat(3)) {
        let n1 = normalize(real_jordan_form(&m).unwrap()).unwrap();
        let n2 = normalize(n1.blocks().to_vec()).unwrap();
        prop_assert_eq!(n1, n2);
    }

    #[test]
    fn normalize_is_scale_invariant(m in rand_mat(3), pick in 0usize..5) {
        let c = [qr(-1, 3), qi(2), qi(-7), qr(1, 3), qi(7)][pick].clone();
        let n0 = normalize(real_jordan_form(&m).unwrap()).unwrap();
        let n1 = normalize(real_jordan_form(&m.scale(&c)).unwrap()).unwrap();
        prop_assert_eq!(n0, n1);
    }

    #[test]
    fn conjugation_preserves_njnf(m in rand_mat(2), p in rand_mat(2)) {
        let Some(pinv) = p.inverse() else { return Ok(()) };
        let conj = p.mul(&m).mul(&pinv);
        let a = normalize(real_jordan_form(&m).unwrap()).unwrap();
        let b = normalize(real_jordan_form(&conj).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn oracle_witness_implies_equal_njnf(
        m in rand_mat(2),
        p in rand_mat(2),
        num in -5i64..=5,
        den in 1i64..=4,
    ) {
        // Constructed witness: b = c · p m p⁻¹.
        prop_assume!(num != 0);
        let Some(pinv) = p.inverse() else { return Ok(()) };
        let c = qr(num, den);
        let b = p.mul(&m).mul(&pinv).scale(&c);
        let na = normalize(real_jordan_form(&m).unwrap()).unwrap();
        let nb = normalize(real_jordan_form(&b).unwrap()).unwrap();
        prop_assert_eq!(na, nb);
    }

    #[test]
    fn distinct_eigenvalue_ratios_are_inequivalent(
        a in 1i64..=6, b in 1i64..=6, c in 1i64..=6, d in 1i64..=6,
    ) {
        // diag(a, b) vs diag(c, d): equivalent iff ratio multisets agree.
        let m1 = Mat::diagonal(&[qi(a), qi(b)]);
        let m2 = Mat::diagonal(&[qi(c), qi(d)]);
        let r1 = (qr(a, b), qr(b, a));
        let r2 = (qr(c, d), qr(d, c));
        let same = r1 == r2 || (r1.0 == r2.1 && r1.1 == r2.0);
        let n1 = normalize(real_jordan_form(&m1).unwrap()).unwrap();
        let n2 = normalize(real_jordan_form(&m2).unwrap()).unwrap();
        prop_assert_eq!(n1 == n2, same);
    }
}

fn mk(dim: usize, brs: &[(usize, usize, usize, i64)]) -> StructureConstants {
    let mut t = StructureConstants::new(dim).unwrap();
    for &(i, j, k, c) in brs {
        t.set(i, j, k, qi(c)).unwrap();
    }
    t
}

fn plane12(dim: usize) -> Subspace {
    let mut e1 = vec![Q::zero(); dim];
    e1[0] = Q::one();
    let mut e2 = vec![Q::zero(); dim];
    e2[1] = Q::one();
    Subspace::span(dim, &[e1, e2])
}

fn e(dim: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); dim];
    v[i - 1] = Q::one();
    v
}

#[test]
fn homothety_ideal_gives_identity_restriction() {
    // [e1,e3]=e1, [e2,e3]=e2: the plane restriction is the identity and the
    // normalized form is the 2×2 identity spectrum {1, 1}.
    let sc = mk(3, &[(1, 3, 1, 1), (2, 3, 2, 1)]);
    let m = restricted_adjoint(&sc, &plane12(3), &e(3, 3)).unwrap();
    assert_eq!(m, Mat::diagonal(&[qi(1), qi(1)]));
    let n = njnf(&sc, &plane12(3), &e(3, 3)).unwrap();
    let ones: Vec<_> = n.blocks().iter().map(|b| b.eigenvalue.clone()).collect();
    assert_eq!(
        ones,
        vec![Eigenvalue::Rational(qi(1)), Eigenvalue::Rational(qi(1))]
    );
}

#[test]
fn nilpotent_dim3_restriction_is_one_nilpotent_block() {
    // [e2,e3]=e1.
    let sc = mk(3, &[(2, 3, 1, 1)]);
    let n = njnf(&sc, &plane12(3), &e(3, 3)).unwrap();
    assert_eq!(n.blocks().len(), 1);
    assert_eq!(n.blocks()[0].size, 2);
    assert!(n.blocks()[0].eigenvalue.is_zero());
}

#[test]
fn nilpotent_dim4_restriction_is_single_3_block() {
    // [e2,e4]=e1, [e3,e4]=e2.
    let sc = mk(4, &[(2, 4, 1, 1), (3, 4, 2, 1)]);
    let ideal = Subspace::span(4, &[e(4, 1), e(4, 2), e(4, 3)]);
    let n = njnf(&sc, &ideal, &e(4, 4)).unwrap();
    assert_eq!(n.blocks().len(), 1);
    assert_eq!(n.blocks()[0].size, 3);
    assert!(n.blocks()[0].eigenvalue.is_zero());
}

#[test]
fn parameter_families_separate_and_identify() {
    // diag(1, a) restrictions with a ≠ a′ are inequivalent.
    let mk_a = |p: i64, q: i64| {
        let mut t = StructureConstants::new(3).unwrap();
        t.set(1, 3, 1, qi(1)).unwrap();
        t.set(2, 3, 2, qr(p, q)).unwrap();
        t
    };
    let n_half = njnf(&mk_a(1, 2), &plane12(3), &e(3, 3)).unwrap();
    let n_third = njnf(&mk_a(1, 3), &plane12(3), &e(3, 3)).unwrap();
    assert_ne!(n_half, n_third);

    // diag(1, a, b) with swapped parameters is the same class.
    let mk_ab = |a: Q, b: Q| {
        let mut t = StructureConstants::new(4).unwrap();
        t.set(1, 4, 1, qi(1)).unwrap();
        t.set(2, 4, 2, a).unwrap();
        t.set(3, 4, 3, b).unwrap();
        t
    };
    let ideal = Subspace::span(4, &[e(4, 1), e(4, 2), e(4, 3)]);
    let x = njnf(&mk_ab(qr(1, 2), qr(1, 3)), &ideal, &e(4, 4)).unwrap();
    let y = njnf(&mk_ab(qr(1, 3), qr(1, 2)), &ideal, &e(4, 4)).unwrap();
    assert_eq!(x, y);
}

#[test]
fn complement_vector_choice_does_not_matter_over_abelian_ideal() {
    // [e1,e3]=e1, [e2,e3]=-e2 with Abelian ideal span(e1,e2): any vector
    // λ·e3 + j with j in the ideal produces the same normalized form.
    let sc = mk(3, &[(1, 3, 1, 1), (2, 3, 2, -1)]);
    let base = njnf(&sc, &plane12(3), &e(3, 3)).unwrap();
    for (l, a, b) in [(2i64, 1i64, -3i64), (-1, 0, 5), (3, 2, 2)] {
        let mut w = vec![qi(a), qi(b), qi(l)];
        w[2] = qi(l);
        let n = njnf(&sc, &plane12(3), &w).unwrap();
        assert_eq!(n, base);
    }
}

#[test]
fn rotation_restriction_is_a_complex_pair() {
    // [e1,e3]=-e2, [e2,e3]=e1.
    let sc = mk(3, &[(1, 3, 2, -1), (2, 3, 1, 1)]);
    let n = njnf(&sc, &plane12(3), &e(3, 3)).unwrap();
    assert_eq!(n.blocks().len(), 1);
    assert_eq!(
        n.blocks()[0].eigenvalue,
        Eigenvalue::ComplexPair {
            re: qi(0),
            im_sq: qi(1)
        }
    );
}

#[test]
fn vector_inside_ideal_is_rejected() {
    let sc = mk(3, &[(1, 3, 1, 1), (2, 3, 2, 1)]);
    let err = restricted_adjoint(&sc, &plane12(3), &e(3, 1));
    assert!(err.is_err());
}
