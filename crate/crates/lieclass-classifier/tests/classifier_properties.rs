//! Property tests: classification is a basis-change invariant, handedness
//! transforms with the orientation, and selfduality verdicts agree across
//! conjugated presentations.

use lieclass_catalog::Catalog;
use lieclass_classifier::{chirality, classify, duality_verdict, Chirality};
use lieclass_core::matrix::Mat;
use lieclass_core::scalar::{qi, Q};
use lieclass_core::tensor::BasisChange;
use lieclass_core::StructureConstants;
use num::Zero;
use proptest::prelude::*;

fn sample(id: &str, params: &[Q]) -> StructureConstants {
    Catalog::bundled().instantiate(id, params).unwrap().tensor
}

fn representatives() -> Vec<(String, StructureConstants)> {
    let p = |n: i64, d: i64| Q::new(n.into(), d.into());
    let list: Vec<(&str, Vec<Q>)> = vec![
        ("A_{3,1}", vec![]),
        ("A_{3,2}", vec![]),
        ("A_{3,4}", vec![]),
        ("A_{3,5}", vec![p(-2, 3)]),
        ("A_{3,6}", vec![]),
        ("A_{3,7}", vec![p(3, 2)]),
        ("A_{3,8}", vec![]),
        ("A_{3,9}", vec![]),
        ("A_{4,2}", vec![p(5, 2)]),
        ("A_{4,5}", vec![p(-1, 3), p(1, 2)]),
        ("A_{4,6}", vec![p(2, 1), p(1, 3)]),
        ("A_{4,7}", vec![]),
        ("A_{4,9}", vec![p(1, 4)]),
        ("A_{4,10}", vec![]),
        ("A_{4,11}", vec![p(3, 1)]),
        ("A_{4,12}", vec![]),
        ("2A_1+A_2", vec![]),
        ("A_1+A_{3,6}", vec![]),
    ];
    list.into_iter()
        .map(|(id, ps)| (id.to_string(), sample(id, &ps)))
        .collect()
}

fn invertible(entries: &[i64], n: usize) -> Option<BasisChange> {
    let m = Mat::from_fn(n, n, |i, j| qi(entries[i * n + j]));
    if m.det().is_zero() {
        return None;
    }
    Some(BasisChange::new(m).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn classification_is_basis_invariant(entries in prop::collection::vec(-3i64..=3, 16)) {
        for (id, sc) in representatives() {
            let n = sc.dim();
            let Some(bc) = invertible(&entries[..n * n], n) else { continue };
            let moved = sc.apply_basis_change(&bc).unwrap();
            let a = classify(&sc).unwrap();
            let b = classify(&moved).unwrap();
            prop_assert!(a.same_as(&b), "{id}: {a} vs {b}");
        }
    }

    #[test]
    fn handedness_follows_the_orientation(entries in prop::collection::vec(-3i64..=3, 16)) {
        for (id, sc) in representatives() {
            let n = sc.dim();
            let Some(bc) = invertible(&entries[..n * n], n) else { continue };
            let moved = sc.apply_basis_change(&bc).unwrap();
            let before = chirality(&sc).unwrap();
            let after = chirality(&moved).unwrap();
            let expect = match (before, bc.orientation_sign()) {
                (Some(c), s) if s < 0 => Some(c.flip()),
                (other, _) => other,
            };
            prop_assert_eq!(after, expect, "{}", id);
        }
    }

    #[test]
    fn selfduality_is_basis_invariant(entries in prop::collection::vec(-2i64..=2, 16)) {
        for (id, sc) in representatives() {
            let n = sc.dim();
            let Some(bc) = invertible(&entries[..n * n], n) else { continue };
            let moved = sc.apply_basis_change(&bc).unwrap();
            let a = duality_verdict(&sc).unwrap();
            let b = duality_verdict(&moved).unwrap();
            prop_assert_eq!(a.selfdual, b.selfdual, "{}", id);
            if let Some(w) = b.witness {
                prop_assert_eq!(moved.apply_basis_change(&w).unwrap(), moved, "{}", id);
            }
        }
    }

    #[test]
    fn mirrored_nonselfdual_tensors_stay_in_the_same_class(flip in 0usize..4) {
        for (id, sc) in representatives() {
            let n = sc.dim();
            let mut m = Mat::identity(n);
            m[(flip % n, flip % n)] = qi(-1);
            let bc = BasisChange::new(m).unwrap();
            let mirrored = sc.apply_basis_change(&bc).unwrap();
            let a = classify(&sc).unwrap();
            let b = classify(&mirrored).unwrap();
            prop_assert!(a.same_as(&b), "{id}");
            if let Some(c) = chirality(&sc).unwrap() {
                prop_assert_eq!(chirality(&mirrored).unwrap(), Some(c.flip()), "{}", id);
            }
        }
    }
}

#[test]
fn right_and_left_variants_are_distinguished() {
    // The two handed variants of a non-selfdual class share the catalog id
    // and parameters; only the handedness bit separates them.
    let sc = sample("A_{4,12}", &[]);
    let mut m = Mat::identity(4);
    m[(3, 3)] = qi(-1);
    let mirrored = sc.apply_basis_change(&BasisChange::new(m).unwrap()).unwrap();
    assert!(classify(&sc).unwrap().same_as(&classify(&mirrored).unwrap()));
    assert_eq!(chirality(&sc).unwrap(), Some(Chirality::R));
    assert_eq!(chirality(&mirrored).unwrap(), Some(Chirality::L));
}
