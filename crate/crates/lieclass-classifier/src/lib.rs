//! Identification of real Lie algebras of dimension ≤ 4 given by exact
//! structure constants: direct-sum splitting, semisimple detection by the
//! Killing form, canonical codimension-1 ideal selection (abelian before
//! nilpotent before scaling), normalized restricted-adjoint spectra, and
//! exact parameter recovery. Also decides selfduality (with an explicit
//! orientation-reversing witness where one exists in signed-permutation
//! form) and the handedness of the non-selfdual classes.

pub mod chirality;
pub mod duality;

use lieclass_catalog::Catalog;
use lieclass_core::matrix::Mat;
use lieclass_core::scalar::{format_q, qi, Q};
use lieclass_core::StructureConstants;
use lieclass_invariants::{
    codim1_ideals, decompose_direct_sum, derived_subspace, killing_signature, series_profile,
    Subspace,
};
use lieclass_normal_form::jordan::{real_jordan_form, Eigenvalue, JordanBlock};
use lieclass_normal_form::{
    njnf, normalize, rational_sqrt, real_roots_of_irreducible, restricted_adjoint, ExactReal,
    Njnf, NormalFormError,
};
use num::{Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

pub use chirality::{chirality, Chirality};
pub use duality::{duality_verdict, signed_perm_automorphism, DualityVerdict, VerdictMethod};

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error("the tensor violates the Lie axioms")]
    NotALieAlgebra,
    #[error("dimension {0} is outside the classified range")]
    UnsupportedDimension(usize),
    #[error("spectrum outside the supported number fields: {0}")]
    IrrationalSpectrum(String),
    #[error("no algebra of the catalog matches: {0}")]
    Unrecognized(String),
    #[error(transparent)]
    NormalForm(#[from] NormalFormError),
}

/// Exact recovered parameter value: rational or a real quadratic surd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamValue(pub ExactReal);

impl ParamValue {
    pub fn rat(q: Q) -> Self {
        ParamValue(ExactReal::Rat(q))
    }

    pub fn as_rational(&self) -> Option<&Q> {
        match &self.0 {
            ExactReal::Rat(q) => Some(q),
            ExactReal::Alg(_) => None,
        }
    }

    pub fn approx(&self) -> f64 {
        match &self.0 {
            ExactReal::Rat(q) => lieclass_core::scalar::approx_q(q),
            ExactReal::Alg(a) => a.approx(),
        }
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            ExactReal::Rat(q) => write!(f, "{}", format_q(q)),
            ExactReal::Alg(a) => {
                let poly: Vec<String> = a.minpoly.iter().map(format_q).collect();
                write!(f, "≈{:.6} (monic root, coefficients [{}])", a.approx(), poly.join(", "))
            }
        }
    }
}

/// Result of classification: catalog id, recovered parameters, and the ids
/// of the indecomposable direct summands.
#[derive(Debug, Clone)]
pub struct Classification {
    pub id: String,
    pub params: BTreeMap<String, ParamValue>,
    pub factor_ids: Vec<String>,
}

impl Classification {
    fn simple(id: &str) -> Self {
        Classification {
            id: id.to_string(),
            params: BTreeMap::new(),
            factor_ids: vec![id.to_string()],
        }
    }

    /// Same class with the same exact parameter values.
    pub fn same_as(&self, other: &Classification) -> bool {
        if self.id != other.id || self.params.len() != other.params.len() {
            return false;
        }
        self.params.iter().zip(other.params.iter()).all(|((ka, va), (kb, vb))| {
            ka == kb && va.0.compare(&vb.0) == Ordering::Equal
        })
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id)?;
        if !self.params.is_empty() {
            let parts: Vec<String> = self
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            write!(f, " [{}]", parts.join(", "))?;
        }
        Ok(())
    }
}

/// The kind of canonical codimension-1 ideal found, in preference order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealKind {
    Abelian,
    NilpotentNonabelian,
    Scaling,
}

/// Preferred codimension-1 ideal: abelian if one exists, else nilpotent
/// non-abelian, else the one whose complement acts on its derived algebra
/// as a scalar.
pub fn canonical_ideal(sc: &StructureConstants) -> Option<(IdealKind, Subspace)> {
    let found = codim1_ideals(sc);
    let mut nilpotent: Option<Subspace> = None;
    let mut scaling: Option<Subspace> = None;
    for j in found.ideals {
        let Some(r) = j.restricted(sc) else { continue };
        if r.is_abelian() {
            return Some((IdealKind::Abelian, j));
        }
        let p = series_profile(&r);
        if p.nilpotent {
            nilpotent.get_or_insert(j);
        } else if scales_derived(&r) {
            scaling.get_or_insert(j);
        }
    }
    if let Some(j) = nilpotent {
        return Some((IdealKind::NilpotentNonabelian, j));
    }
    scaling.map(|j| (IdealKind::Scaling, j))
}

/// True when a complement vector of the derived subalgebra acts on it as a
/// scalar multiple of the identity.
fn scales_derived(sc: &StructureConstants) -> bool {
    let d = derived_subspace(sc);
    if d.is_zero() || d.is_full() {
        return false;
    }
    let full = d.extend_to_full_basis();
    let w = full.last().unwrap().clone();
    let Ok(m) = restricted_adjoint(sc, &d, &w) else {
        return false;
    };
    let lambda = m[(0, 0)].clone();
    for i in 0..d.dim() {
        for j in 0..d.dim() {
            let want = if i == j { lambda.clone() } else { qi(0) };
            if m[(i, j)] != want {
                return false;
            }
        }
    }
    true
}

/// Normalized restricted-adjoint spectrum over the canonical ideal, if the
/// algebra has one.
pub fn canonical_njnf(sc: &StructureConstants) -> Result<Option<Njnf>, ClassifyError> {
    let Some((_, ideal)) = canonical_ideal(sc) else {
        return Ok(None);
    };
    let w = ideal.extend_to_full_basis().last().unwrap().clone();
    Ok(Some(njnf(sc, &ideal, &w)?))
}

// ---------------------------------------------------------------------------
// Exact eigenvalue bookkeeping.

fn exact_of(e: &Eigenvalue) -> Result<ExactReal, ClassifyError> {
    match e {
        Eigenvalue::Rational(q) => Ok(ExactReal::Rat(q.clone())),
        Eigenvalue::Algebraic(a) if lieclass_normal_form::poly::degree(&a.minpoly) == 2 => {
            Ok(ExactReal::Alg(a.clone()))
        }
        other => Err(ClassifyError::IrrationalSpectrum(format!("{other:?}"))),
    }
}

fn exact_is_zero(x: &ExactReal) -> bool {
    matches!(x, ExactReal::Rat(q) if q.is_zero())
}

fn exact_sign(x: &ExactReal) -> Ordering {
    match x {
        ExactReal::Rat(q) => q.cmp(&Q::zero()),
        ExactReal::Alg(a) => a.sign(),
    }
}

fn exact_neg(x: &ExactReal) -> ExactReal {
    match x {
        ExactReal::Rat(q) => ExactReal::Rat(-q),
        ExactReal::Alg(a) => ExactReal::Alg(a.negate()),
    }
}

fn exact_abs_cmp(a: &ExactReal, b: &ExactReal) -> Ordering {
    let pa = match exact_sign(a) {
        Ordering::Less => exact_neg(a),
        _ => a.clone(),
    };
    let pb = match exact_sign(b) {
        Ordering::Less => exact_neg(b),
        _ => b.clone(),
    };
    pa.compare(&pb)
}

/// x / y for nonzero y, staying inside ℚ or one quadratic field.
fn exact_div(x: &ExactReal, y: &ExactReal) -> Result<ExactReal, ClassifyError> {
    match (x, y) {
        (ExactReal::Rat(a), ExactReal::Rat(b)) => Ok(ExactReal::Rat(a / b)),
        (ExactReal::Alg(a), ExactReal::Rat(b)) => Ok(ExactReal::Alg(a.scale(&(qi(1) / b)))),
        (ExactReal::Rat(r), ExactReal::Alg(b)) => {
            // r/β = −r(β + p)/q for minpoly x² + px + q.
            if r.is_zero() {
                return Ok(ExactReal::Rat(Q::zero()));
            }
            let p = b.minpoly[1].clone();
            let q = b.minpoly[0].clone();
            Ok(ExactReal::Alg(b.affine(&(-(r * &p) / &q), &(-r / &q))))
        }
        (ExactReal::Alg(a), ExactReal::Alg(b)) => {
            if a.minpoly != b.minpoly {
                return Err(ClassifyError::IrrationalSpectrum(
                    "eigenvalues from different quadratic fields".into(),
                ));
            }
            let p = b.minpoly[1].clone();
            let q = b.minpoly[0].clone();
            if a == b {
                Ok(ExactReal::Rat(qi(1)))
            } else if p.is_zero() {
                Ok(ExactReal::Rat(qi(-1)))
            } else {
                // α/β for the conjugate root: (p² − q)/q + (p/q)β.
                Ok(ExactReal::Alg(b.affine(&((&p * &p - &q) / &q), &(&p / &q))))
            }
        }
    }
}

/// Positive square root of a positive rational as an exact real.
fn exact_sqrt(q: &Q) -> ExactReal {
    debug_assert!(q.is_positive());
    match rational_sqrt(q) {
        Some(r) => ExactReal::Rat(r),
        None => {
            let poly = vec![-q.clone(), Q::zero(), qi(1)];
            ExactReal::Alg(real_roots_of_irreducible(&poly).pop().unwrap())
        }
    }
}

/// |x| / √m for rational x and positive rational m.
fn abs_over_sqrt(x: &Q, m: &Q) -> ExactReal {
    if x.is_zero() {
        return ExactReal::Rat(Q::zero());
    }
    exact_sqrt(&(&(x * x) / m))
}

// ---------------------------------------------------------------------------
// Raw spectra of restricted adjoints.

#[derive(Debug, Clone)]
enum Slot {
    Real { value: ExactReal, size: usize },
    Pair { re: Q, im_sq: Q, size: usize },
}

fn slots_of(blocks: &[JordanBlock]) -> Result<Vec<Slot>, ClassifyError> {
    blocks
        .iter()
        .map(|b| match &b.eigenvalue {
            Eigenvalue::ComplexPair { re, im_sq } => Ok(Slot::Pair {
                re: re.clone(),
                im_sq: im_sq.clone(),
                size: b.size,
            }),
            other => Ok(Slot::Real {
                value: exact_of(other)?,
                size: b.size,
            }),
        })
        .collect()
}

struct Restriction {
    ideal: Subspace,
    matrix: Mat,
    raw: Vec<Slot>,
}

fn restrict(sc: &StructureConstants, ideal: Subspace) -> Result<Restriction, ClassifyError> {
    let w = ideal.extend_to_full_basis().last().unwrap().clone();
    let matrix = restricted_adjoint(sc, &ideal, &w)?;
    let raw = slots_of(&real_jordan_form(&matrix)?)?;
    Ok(Restriction {
        ideal,
        matrix,
        raw,
    })
}

// ---------------------------------------------------------------------------
// Classification.

/// Identify the algebra: catalog id plus exact parameter values.
pub fn classify(sc: &StructureConstants) -> Result<Classification, ClassifyError> {
    if !sc.is_valid() {
        return Err(ClassifyError::NotALieAlgebra);
    }
    if sc.dim() > 4 {
        return Err(ClassifyError::UnsupportedDimension(sc.dim()));
    }
    let dec = decompose_direct_sum(sc);
    if dec.factors.len() > 1 {
        let mut parts = Vec::new();
        for f in &dec.factors {
            parts.push(classify_indecomposable(&f.tensor)?);
        }
        return Ok(assemble_composite(parts));
    }
    classify_indecomposable(sc)
}

fn assemble_composite(parts: Vec<Classification>) -> Classification {
    let mut sorted = parts;
    sorted.sort_by(|a, b| {
        let da = dim_of_id(&a.id);
        let db = dim_of_id(&b.id);
        da.cmp(&db).then(a.id.cmp(&b.id))
    });
    let mut pieces: Vec<(String, usize)> = Vec::new();
    let mut params = BTreeMap::new();
    let mut factor_ids = Vec::new();
    for p in sorted {
        factor_ids.push(p.id.clone());
        for (k, v) in p.params {
            params.insert(k, v);
        }
        match pieces.last_mut() {
            Some((id, n)) if *id == p.id => *n += 1,
            _ => pieces.push((p.id, 1)),
        }
    }
    let id = pieces
        .iter()
        .map(|(id, n)| {
            if *n > 1 {
                format!("{n}{id}")
            } else {
                id.clone()
            }
        })
        .collect::<Vec<_>>()
        .join("+");
    Classification {
        id,
        params,
        factor_ids,
    }
}

fn dim_of_id(id: &str) -> usize {
    Catalog::bundled().get(id).map(|c| c.dim).unwrap_or(0)
}

fn classify_indecomposable(sc: &StructureConstants) -> Result<Classification, ClassifyError> {
    match sc.dim() {
        1 => Ok(Classification::simple("A_1")),
        2 => {
            if sc.is_abelian() {
                Ok(Classification::simple("2A_1"))
            } else {
                Ok(Classification::simple("A_2"))
            }
        }
        3 => classify_dim3(sc),
        4 => classify_dim4(sc),
        n => Err(ClassifyError::UnsupportedDimension(n)),
    }
}

fn classify_dim3(sc: &StructureConstants) -> Result<Classification, ClassifyError> {
    let Some((kind, ideal)) = canonical_ideal(sc) else {
        // Perfect: one of the two simple 3-dimensional algebras.
        let (pos, neg, zero) = killing_signature(sc);
        return match (pos, neg, zero) {
            (0, 3, 0) => Ok(Classification::simple("A_{3,9}")),
            (_, _, 0) => Ok(Classification::simple("A_{3,8}")),
            _ => Err(ClassifyError::Unrecognized(
                "degenerate Killing form without a codimension-1 ideal".into(),
            )),
        };
    };
    if kind != IdealKind::Abelian {
        return Err(ClassifyError::Unrecognized(
            "3-dimensional solvable algebra without an abelian plane".into(),
        ));
    }
    let r = restrict(sc, ideal)?;
    match &r.raw[..] {
        [Slot::Real { value, size: 2 }] => {
            if exact_is_zero(value) {
                Ok(Classification::simple("A_{3,1}"))
            } else {
                Ok(Classification::simple("A_{3,2}"))
            }
        }
        [Slot::Real { value: x, size: 1 }, Slot::Real { value: y, size: 1 }] => {
            if exact_is_zero(x) || exact_is_zero(y) {
                return Err(ClassifyError::Unrecognized(
                    "scaling with kernel should have split as a direct sum".into(),
                ));
            }
            if x.compare(y) == Ordering::Equal {
                return Ok(Classification::simple("A_{3,3}"));
            }
            let a = small_over_large(x, y)?;
            if a.compare(&ExactReal::Rat(qi(-1))) == Ordering::Equal {
                Ok(Classification::simple("A_{3,4}"))
            } else {
                Ok(with_params("A_{3,5}", &[("a", a)]))
            }
        }
        [Slot::Pair { re, im_sq, size: 1 }] => {
            if re.is_zero() {
                Ok(Classification::simple("A_{3,6}"))
            } else {
                Ok(with_params("A_{3,7}", &[("a", abs_over_sqrt(re, im_sq))]))
            }
        }
        other => Err(ClassifyError::Unrecognized(format!(
            "unexpected 2×2 spectrum {other:?}"
        ))),
    }
}

/// Ratio of the smaller-modulus eigenvalue to the larger one, in (−1, 1).
fn small_over_large(x: &ExactReal, y: &ExactReal) -> Result<ExactReal, ClassifyError> {
    match exact_abs_cmp(x, y) {
        Ordering::Less => exact_div(x, y),
        _ => exact_div(y, x),
    }
}

fn with_params(id: &str, ps: &[(&str, ExactReal)]) -> Classification {
    Classification {
        id: id.to_string(),
        params: ps
            .iter()
            .map(|(k, v)| (k.to_string(), ParamValue(v.clone())))
            .collect(),
        factor_ids: vec![id.to_string()],
    }
}

fn classify_dim4(sc: &StructureConstants) -> Result<Classification, ClassifyError> {
    let Some((kind, ideal)) = canonical_ideal(sc) else {
        return Err(ClassifyError::Unrecognized(
            "4-dimensional algebra without a codimension-1 ideal".into(),
        ));
    };
    match kind {
        IdealKind::Abelian => classify_dim4_abelian_ideal(sc, ideal),
        IdealKind::NilpotentNonabelian => classify_dim4_heisenberg_ideal(sc, ideal),
        IdealKind::Scaling => Ok(Classification::simple("A_{4,12}")),
    }
}

fn classify_dim4_abelian_ideal(
    sc: &StructureConstants,
    ideal: Subspace,
) -> Result<Classification, ClassifyError> {
    let r = restrict(sc, ideal)?;
    match &r.raw[..] {
        [Slot::Real { value, size: 3 }] => {
            if exact_is_zero(value) {
                Ok(Classification::simple("A_{4,1}"))
            } else {
                Ok(Classification::simple("A_{4,4}"))
            }
        }
        [Slot::Real { value: x, size: sx }, Slot::Real { value: y, size: sy }]
            if sx + sy == 3 =>
        {
            let (single, double) = if *sx == 1 { (x, y) } else { (y, x) };
            if exact_is_zero(double) {
                if exact_is_zero(single) {
                    return Err(ClassifyError::Unrecognized(
                        "nilpotent with split spectrum should be decomposable".into(),
                    ));
                }
                Ok(Classification::simple("A_{4,3}"))
            } else {
                let a = exact_div(single, double)?;
                Ok(with_params("A_{4,2}", &[("a", a)]))
            }
        }
        [Slot::Real { .. }, Slot::Real { .. }, Slot::Real { .. }] => {
            // Three scaling directions: read (a, b) off the normalized form.
            let blocks = real_jordan_form(&r.matrix)?;
            let n = normalize(blocks)?;
            let mut vals: Vec<ExactReal> = n
                .blocks()
                .iter()
                .map(|b| exact_of(&b.eigenvalue))
                .collect::<Result<_, _>>()?;
            let one = ExactReal::Rat(qi(1));
            let pos = vals
                .iter()
                .position(|v| v.compare(&one) == Ordering::Equal)
                .ok_or_else(|| {
                    ClassifyError::Unrecognized("normalized spectrum without a unit".into())
                })?;
            vals.remove(pos);
            vals.sort_by(|a, b| a.compare(b));
            Ok(with_params(
                "A_{4,5}",
                &[("a", vals[0].clone()), ("b", vals[1].clone())],
            ))
        }
        [a, b] => {
            let (x, re, im_sq) = match (a, b) {
                (Slot::Real { value, size: 1 }, Slot::Pair { re, im_sq, size: 1 })
                | (Slot::Pair { re, im_sq, size: 1 }, Slot::Real { value, size: 1 }) => {
                    (value, re, im_sq)
                }
                _ => {
                    return Err(ClassifyError::Unrecognized(format!(
                        "unexpected 3×3 spectrum {:?}",
                        r.raw
                    )))
                }
            };
            let x = match x {
                ExactReal::Rat(q) => q.clone(),
                ExactReal::Alg(_) => {
                    return Err(ClassifyError::IrrationalSpectrum(
                        "mixed surd and complex pair".into(),
                    ))
                }
            };
            // Scale by the imaginary unit; flip sign so that b ≥ 0, and for
            // b = 0 so that a > 0.
            let s = exact_sqrt(im_sq);
            let mut a_val = exact_div(&ExactReal::Rat(x.clone()), &s)?;
            let mut b_val = exact_div(&ExactReal::Rat(re.clone()), &s)?;
            let flip = match exact_sign(&b_val) {
                Ordering::Less => true,
                Ordering::Equal => exact_sign(&a_val) == Ordering::Less,
                Ordering::Greater => false,
            };
            if flip {
                a_val = exact_neg(&a_val);
                b_val = exact_neg(&b_val);
            }
            Ok(with_params("A_{4,6}", &[("a", a_val), ("b", b_val)]))
        }
        other => Err(ClassifyError::Unrecognized(format!(
            "unexpected 3×3 spectrum {other:?}"
        ))),
    }
}

fn classify_dim4_heisenberg_ideal(
    sc: &StructureConstants,
    ideal: Subspace,
) -> Result<Classification, ClassifyError> {
    let r = restrict(sc, ideal)?;
    // Eigenvalue on the center direction of the nilpotent ideal.
    let restricted = r.ideal.restricted(sc).ok_or_else(|| {
        ClassifyError::Unrecognized("ideal representatives must restrict".into())
    })?;
    let center_dir = derived_subspace(&restricted);
    let u_local = center_dir.basis()[0].clone();
    let mut mu = vec![Q::zero(); u_local.len()];
    for (i, row) in mu.iter_mut().enumerate() {
        let mut acc = Q::zero();
        for (j, c) in u_local.iter().enumerate() {
            acc += &r.matrix[(i, j)] * c;
        }
        *row = acc;
    }
    let pivot = u_local.iter().position(|c| !c.is_zero()).unwrap();
    let c = &mu[pivot] / &u_local[pivot];

    match &r.raw[..] {
        [Slot::Real { size: 1, .. }, Slot::Real { value: y, size: 2 }]
        | [Slot::Real { value: y, size: 2 }, Slot::Real { size: 1, .. }] => {
            debug_assert!({
                let two_y = exact_div(&ExactReal::Rat(c.clone()), y)
                    .map(|r| r.compare(&ExactReal::Rat(qi(2))) == Ordering::Equal)
                    .unwrap_or(false);
                two_y
            });
            Ok(Classification::simple("A_{4,7}"))
        }
        [Slot::Real { .. }, Slot::Real { .. }, Slot::Real { .. }] => {
            if c.is_zero() {
                return Ok(Classification::simple("A_{4,8}"));
            }
            // Remove the center eigenvalue once; the two complement
            // eigenvalues determine b.
            let mut rest: Vec<ExactReal> = Vec::new();
            let mut removed = false;
            for s in &r.raw {
                if let Slot::Real { value, .. } = s {
                    if !removed && value.compare(&ExactReal::Rat(c.clone())) == Ordering::Equal {
                        removed = true;
                        continue;
                    }
                    rest.push(value.clone());
                }
            }
            if rest.len() != 2 {
                return Err(ClassifyError::Unrecognized(
                    "center eigenvalue missing from the spectrum".into(),
                ));
            }
            let b = small_over_large(&rest[0], &rest[1])?;
            // Equal moduli with c ≠ 0 means the two agree: b = 1.
            Ok(with_params("A_{4,9}", &[("b", b)]))
        }
        [a, b] => {
            let (re, im_sq) = match (a, b) {
                (Slot::Real { size: 1, .. }, Slot::Pair { re, im_sq, size: 1 })
                | (Slot::Pair { re, im_sq, size: 1 }, Slot::Real { size: 1, .. }) => (re, im_sq),
                _ => {
                    return Err(ClassifyError::Unrecognized(format!(
                        "unexpected nilpotent-ideal spectrum {:?}",
                        r.raw
                    )))
                }
            };
            if re.is_zero() {
                Ok(Classification::simple("A_{4,10}"))
            } else {
                Ok(with_params("A_{4,11}", &[("a", abs_over_sqrt(re, im_sq))]))
            }
        }
        other => Err(ClassifyError::Unrecognized(format!(
            "unexpected nilpotent-ideal spectrum {other:?}"
        ))),
    }
}

/// Two algebras are equivalent when they classify identically.
pub fn equivalent(a: &StructureConstants, b: &StructureConstants) -> Result<bool, ClassifyError> {
    Ok(classify(a)?.same_as(&classify(b)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use lieclass_core::scalar::qr;

    fn mk(dim: usize, brs: &[(usize, usize, usize, Q)]) -> StructureConstants {
        let mut t = StructureConstants::new(dim).unwrap();
        for (i, j, k, c) in brs {
            t.set(*i, *j, *k, c.clone()).unwrap();
        }
        t
    }

    #[test]
    fn catalog_templates_classify_to_themselves() {
        let cat = Catalog::bundled();
        for class in cat.classes() {
            let env: lieclass_catalog::expr::Env = class
                .params
                .iter()
                .map(|p| {
                    let v = if p.name == "b" { qr(1, 2) } else { qr(1, 3) };
                    (p.name.clone(), v)
                })
                .collect();
            if class.check_params(&env).is_err() {
                continue;
            }
            let sc = class.instantiate(&env).unwrap();
            let got = classify(&sc).unwrap();
            assert_eq!(got.id, class.id, "template of {}", class.id);
            for (name, v) in &env {
                let got_v = got.params.get(name).unwrap();
                assert_eq!(got_v.as_rational(), Some(v), "{} {}", class.id, name);
            }
        }
    }

    #[test]
    fn semisimple_split() {
        let so3 = mk(
            3,
            &[
                (1, 2, 3, qi(1)),
                (1, 3, 2, qi(-1)),
                (2, 3, 1, qi(1)),
            ],
        );
        assert_eq!(classify(&so3).unwrap().id, "A_{3,9}");
        let sl2 = mk(
            3,
            &[
                (1, 2, 1, qi(1)),
                (1, 3, 2, qi(-2)),
                (2, 3, 3, qi(1)),
            ],
        );
        assert_eq!(classify(&sl2).unwrap().id, "A_{3,8}");
    }

    #[test]
    fn composite_ids_collapse_multiplicities() {
        let cat = Catalog::bundled();
        for id in ["4A_1", "2A_1+A_2", "2A_2", "A_1+A_{3,8}", "A_1+A_{3,1}"] {
            let sc = cat.instantiate(id, &[]).unwrap().tensor;
            assert_eq!(classify(&sc).unwrap().id, id);
        }
    }

    #[test]
    fn scale_equivalent_members_classify_alike() {
        // VI_h with eigenvalues (3, 1) is VI at a = 1/3 no matter the scale.
        for s in [qi(1), qi(5), qr(-1, 7)] {
            let sc = mk(
                3,
                &[(1, 3, 1, qi(3) * &s), (2, 3, 2, s.clone())],
            );
            let c = classify(&sc).unwrap();
            assert_eq!(c.id, "A_{3,5}");
            assert_eq!(c.params["a"].as_rational(), Some(&qr(1, 3)));
        }
    }

    #[test]
    fn surd_parameters_are_recovered_exactly() {
        // Eigenvalues 2 ± √2 on the abelian plane: a = (2−√2)/(2+√2) = 3 − 2√2.
        let sc = mk(
            3,
            &[
                (1, 3, 1, qi(2)),
                (1, 3, 2, qi(1)),
                (2, 3, 1, qi(2)),
                (2, 3, 2, qi(2)),
            ],
        );
        let c = classify(&sc).unwrap();
        assert_eq!(c.id, "A_{3,5}");
        let a = &c.params["a"];
        assert!(a.as_rational().is_none());
        let approx = a.approx();
        assert!((approx - (3.0 - 2.0 * 2.0_f64.sqrt())).abs() < 1e-9);
    }

    #[test]
    fn a45_parameters_are_canonical_under_negation() {
        let cat = Catalog::bundled();
        let t1 = cat.instantiate("A_{4,5}", &[qi(-1), qr(1, 2)]).unwrap().tensor;
        let t2 = cat.instantiate("A_{4,5}", &[qi(-1), qr(-1, 2)]).unwrap().tensor;
        let c1 = classify(&t1).unwrap();
        let c2 = classify(&t2).unwrap();
        assert_eq!(c1.id, "A_{4,5}");
        // {1, −1, −1/2} rescales to {1, −1, 1/2}: same canonical parameters.
        assert!(c1.same_as(&c2));
    }

    #[test]
    fn rejects_invalid_tensors() {
        let mut t = StructureConstants::new(3).unwrap();
        t.set(1, 2, 3, qi(1)).unwrap();
        t.set(1, 3, 1, qi(1)).unwrap();
        t.set(2, 3, 2, qi(5)).unwrap();
        if !t.is_valid() {
            assert!(matches!(
                classify(&t),
                Err(ClassifyError::NotALieAlgebra)
            ));
        }
    }
}
