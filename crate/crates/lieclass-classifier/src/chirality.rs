//! Handedness of the non-selfdual classes: each such algebra and its mirror
//! image are inequivalent, so an orientation-sensitive sign invariant splits
//! every non-selfdual class into a right and a left variant. The catalog
//! template basis of each class is calibrated to be the right one.

use crate::{canonical_ideal, classify, ClassifyError, IdealKind};
use lieclass_core::matrix::{span_rank, Mat};
use lieclass_core::scalar::{qi, Q};
use lieclass_core::StructureConstants;
use lieclass_invariants::{derived_subspace, killing_matrix, Subspace};
use lieclass_normal_form::restricted_adjoint;
use num::Zero;
use std::cmp::Ordering;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chirality {
    R,
    L,
}

impl Chirality {
    fn from_positive(positive: bool) -> Chirality {
        if positive {
            Chirality::R
        } else {
            Chirality::L
        }
    }

    pub fn flip(self) -> Chirality {
        match self {
            Chirality::R => Chirality::L,
            Chirality::L => Chirality::R,
        }
    }
}

/// Handedness of a non-selfdual algebra; `None` when the class is selfdual
/// (the invariant carries no information there).
pub fn chirality(sc: &StructureConstants) -> Result<Option<Chirality>, ClassifyError> {
    let c = classify(sc)?;
    let verdict = match c.id.as_str() {
        "A_{3,1}" => nilpotent_plane_sign(sc)?.map(Chirality::from_positive),
        "A_{3,2}" => unipotent_plane_sign(sc)?.map(Chirality::from_positive),
        "A_{3,6}" | "A_{3,7}" => elliptic_plane_sign(sc)?.map(|p| Chirality::from_positive(!p)),
        "A_{3,8}" => Some(Chirality::from_positive(killing_volume_sign(sc) > 0)),
        "A_{3,9}" => Some(Chirality::from_positive(killing_volume_sign(sc) < 0)),
        "A_{4,7}" | "A_{4,9}" | "A_{4,11}" => {
            heisenberg_frame_sign(sc)?.map(Chirality::from_positive)
        }
        "A_{4,12}" => plane_rotation_sign(sc)?.map(Chirality::from_positive),
        _ => None,
    };
    Ok(verdict)
}

fn sign_q(q: &Q) -> i8 {
    match q.cmp(&Q::zero()) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

fn det2(a: &[Q], b: &[Q]) -> Q {
    &a[0] * &b[1] - &a[1] * &b[0]
}

fn columns(cols: &[Vec<Q>]) -> Mat {
    Mat::from_fn(cols[0].len(), cols.len(), |i, j| cols[j][i].clone())
}

/// Sign of the ideal-plus-complement frame volume in the input coordinates.
fn frame_sign(ideal: &Subspace, w: &[Q]) -> i8 {
    let mut cols: Vec<Vec<Q>> = ideal.basis().to_vec();
    cols.push(w.to_vec());
    sign_q(&columns(&cols).det())
}

struct Plane {
    ideal: Subspace,
    w: Vec<Q>,
    m: Mat,
}

fn abelian_plane(sc: &StructureConstants) -> Result<Option<Plane>, ClassifyError> {
    let Some((IdealKind::Abelian, ideal)) = canonical_ideal(sc) else {
        return Ok(None);
    };
    let w = ideal.extend_to_full_basis().last().unwrap().clone();
    let m = restricted_adjoint(sc, &ideal, &w)?;
    Ok(Some(Plane { ideal, w, m }))
}

/// det[Nv | v] for a nonzero nilpotent 2×2 N and any v with Nv ≠ 0; the
/// sign does not depend on the choice of v.
fn shear_sign(n: &Mat) -> i8 {
    for j in 0..2 {
        let col = n.col(j);
        if col.iter().any(|c| !c.is_zero()) {
            let mut v = vec![Q::zero(), Q::zero()];
            v[j] = qi(1);
            return sign_q(&det2(&col, &v));
        }
    }
    0
}

/// Heisenberg: orientation of the frame against the direction the shear
/// turns, matched with the ambient orientation.
fn nilpotent_plane_sign(sc: &StructureConstants) -> Result<Option<bool>, ClassifyError> {
    let Some(p) = abelian_plane(sc)? else {
        return Ok(None);
    };
    let raw = frame_sign(&p.ideal, &p.w) * shear_sign(&p.m);
    Ok(Some(raw > 0))
}

/// Scaling-plus-shear: same frame-against-shear invariant, applied to the
/// traceless part of the plane action. (The eigenvalue sign itself carries
/// no handedness: rescaling the complement flips it together with the
/// shear.)
fn unipotent_plane_sign(sc: &StructureConstants) -> Result<Option<bool>, ClassifyError> {
    let Some(p) = abelian_plane(sc)? else {
        return Ok(None);
    };
    let c = p.m.trace() / qi(2);
    let n = p.m.sub(&Mat::identity(2).scale(&c));
    let raw = frame_sign(&p.ideal, &p.w) * shear_sign(&n);
    Ok(Some(raw > 0))
}

/// Rotation action on the abelian plane: sense of rotation times the
/// ambient orientation. Positive means counterclockwise in the frame.
fn elliptic_plane_sign(sc: &StructureConstants) -> Result<Option<bool>, ClassifyError> {
    let Some(p) = abelian_plane(sc)? else {
        return Ok(None);
    };
    let half_tr = p.m.trace() / qi(2);
    let n = p.m.sub(&Mat::identity(2).scale(&half_tr));
    let v = vec![qi(1), qi(0)];
    let q = det2(&v, &n.col(0));
    let raw = frame_sign(&p.ideal, &p.w) * sign_q(&q);
    Ok(Some(raw > 0))
}

/// Volume of the canonical 3-form built from the Killing form, evaluated on
/// the input basis.
fn killing_volume_sign(sc: &StructureConstants) -> i8 {
    let k = killing_matrix(sc);
    let e1 = vec![qi(1), qi(0), qi(0)];
    let e2 = vec![qi(0), qi(1), qi(0)];
    let b = sc.bracket(&e1, &e2);
    let mut lambda = Q::zero();
    for i in 0..3 {
        lambda += &b[i] * &k[(i, 2)];
    }
    sign_q(&lambda)
}

/// Classes over the 3-dimensional nilpotent non-abelian ideal: orientation
/// of the frame (center, pair, complement) weighted by the pair bracket and
/// the center eigenvalue.
fn heisenberg_frame_sign(sc: &StructureConstants) -> Result<Option<bool>, ClassifyError> {
    let Some((IdealKind::NilpotentNonabelian, ideal)) = canonical_ideal(sc) else {
        return Ok(None);
    };
    let restricted = ideal.restricted(sc).ok_or_else(|| {
        ClassifyError::Unrecognized("ideal representatives must restrict".into())
    })?;
    let center_local = derived_subspace(&restricted).basis()[0].clone();
    let n = sc.dim();
    let mut u = vec![Q::zero(); n];
    for (c, bv) in center_local.iter().zip(ideal.basis()) {
        for i in 0..n {
            u[i] += c * &bv[i];
        }
    }
    // Two ideal directions completing the center to a frame of the ideal.
    let basis = ideal.basis();
    let mut pair: Option<(usize, usize)> = None;
    'outer: for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let vs = [u.clone(), basis[i].clone(), basis[j].clone()];
            if span_rank(&vs) == 3 {
                pair = Some((i, j));
                break 'outer;
            }
        }
    }
    let (i, j) = pair.ok_or_else(|| {
        ClassifyError::Unrecognized("nilpotent ideal without a frame".into())
    })?;
    let (y1, y2) = (&basis[i], &basis[j]);
    let w = ideal.extend_to_full_basis().last().unwrap().clone();

    let pivot = u.iter().position(|c| !c.is_zero()).unwrap();
    let beta_vec = sc.bracket(y1, y2);
    let beta = &beta_vec[pivot] / &u[pivot];
    let uw = sc.bracket(&u, &w);
    let r_center = &uw[pivot] / &u[pivot];

    let frame = columns(&[u.clone(), y1.clone(), y2.clone(), w]);
    let raw = sign_q(&frame.det()) * sign_q(&beta) * sign_q(&r_center);
    Ok(Some(raw > 0))
}

/// The class whose complement pair rotates the derived plane: sense of the
/// induced traceless rotation generator against the ambient orientation.
fn plane_rotation_sign(sc: &StructureConstants) -> Result<Option<bool>, ClassifyError> {
    let d = derived_subspace(sc);
    if d.dim() != 2 {
        return Ok(None);
    }
    let full = d.extend_to_full_basis();
    let (v1, v2) = (&full[2], &full[3]);
    let b = columns(d.basis());
    let action = |v: &Vec<Q>| -> Result<Mat, ClassifyError> {
        let mut m = Mat::zero(2, 2);
        for (j, u) in d.basis().iter().enumerate() {
            let br = sc.bracket(u, v);
            let coords = b.solve(&br).ok_or_else(|| {
                ClassifyError::Unrecognized("derived plane is not invariant".into())
            })?;
            for i in 0..2 {
                m[(i, j)] = coords[i].clone();
            }
        }
        Ok(m)
    };
    let r1 = action(v1)?;
    let r2 = action(v2)?;
    let (t1, t2) = (r1.trace(), r2.trace());
    // Traceless combination: scales by the determinant of complement
    // changes, so its rotation sense pairs with the frame volume.
    let j0 = r1.scale(&t2).sub(&r2.scale(&t1));
    let x = vec![qi(1), qi(0)];
    let q = det2(&x, &j0.mul_vec(&x));
    let raw = sign_q(&columns(&full).det()) * sign_q(&q);
    Ok(Some(raw > 0))
}
