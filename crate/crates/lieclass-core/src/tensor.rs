//! Structure-constant tensors C^k_ij, Lie axiom validation, basis changes,
//! adjoint matrices, and the trace/vector decomposition.

use crate::matrix::Mat;
use crate::scalar::{qi, Q};
use num::Zero;
use std::collections::BTreeMap;

/// Largest supported dimension for tensor storage; classification is only
/// offered for dimensions up to 4.
pub const MAX_DIM: usize = 12;

/// Errors raised while constructing or transforming tensors.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TensorError {
    #[error("dimension {0} outside supported range 1..={MAX_DIM}")]
    BadDimension(usize),
    #[error("index ({i},{j},{k}) out of range for dimension {dim}")]
    IndexOutOfRange { i: usize, j: usize, k: usize, dim: usize },
    #[error("bracket requires i < j; got i={i}, j={j}")]
    NotCanonicalPair { i: usize, j: usize },
    #[error("dimension mismatch: tensor has {expected}, argument has {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("trace decomposition undefined for dimension 1")]
    TraceDecompositionUndefined,
}

/// Antisymmetric tensor of exact rationals, stored sparsely with the
/// canonical key (i, j, k), i < j, indices 1-based. The entry for i > j is
/// derived by antisymmetry on read; diagonal pairs are identically zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    dim: usize,
    entries: BTreeMap<(usize, usize, usize), Q>,
}

/// A single axiom violation found by [`StructureConstants::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// The cyclic quadratic constraint fails on the generator triple
    /// (i, j, k); `residual` holds the nonzero components of the cyclic sum.
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
        residual: Vec<Q>,
    },
}

/// Outcome of validating a tensor against the Lie axioms.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Invertible basis change with cached determinant and orientation sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisChange {
    mat: Mat,
    det: Q,
}

impl BasisChange {
    pub fn new(mat: Mat) -> Result<Self, TensorError> {
        if !mat.is_square() {
            return Err(TensorError::DimensionMismatch {
                expected: mat.rows(),
                got: mat.cols(),
            });
        }
        let det = mat.det();
        if det.is_zero() {
            return Err(TensorError::Singular);
        }
        Ok(BasisChange { mat, det })
    }

    pub fn identity(n: usize) -> Self {
        BasisChange {
            mat: Mat::identity(n),
            det: qi(1),
        }
    }

    pub fn matrix(&self) -> &Mat {
        &self.mat
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn det(&self) -> &Q {
        &self.det
    }

    /// Sign of the determinant: +1 preserves orientation, −1 reverses it.
    pub fn orientation_sign(&self) -> i8 {
        if self.det > Q::zero() {
            1
        } else {
            -1
        }
    }

    pub fn inverse(&self) -> BasisChange {
        let inv = self.mat.inverse().expect("invertible by construction");
        BasisChange {
            mat: inv,
            det: self.det.recip(),
        }
    }

    /// Composition: applying `self` then `other` equals applying
    /// `self.compose(&other)` in one step.
    pub fn compose(&self, other: &BasisChange) -> BasisChange {
        BasisChange {
            mat: self.mat.mul(&other.mat),
            det: &self.det * &other.det,
        }
    }
}

/// Trace/vector split of a tensor: `source = tracefree + delta_mix(vector)`,
/// with the tracefree part having vanishing contracted trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceDecomposition {
    /// Tracefree part D^k_ij (antisymmetric in i, j; not itself a Lie bracket
    /// in general).
    pub tracefree: StructureConstants,
    /// Vector part v_i, 0-based storage of the 1-based components.
    pub vector: Vec<Q>,
}

impl TraceDecomposition {
    /// Rebuilds the source tensor exactly.
    pub fn recombine(&self) -> StructureConstants {
        let n = self.tracefree.dim();
        let mut out = self.tracefree.clone();
        for i in 1..=n {
            for j in (i + 1)..=n {
                for k in 1..=n {
                    let mut add = Q::zero();
                    if k == i {
                        add += &self.vector[j - 1];
                    }
                    if k == j {
                        add -= &self.vector[i - 1];
                    }
                    if !add.is_zero() {
                        let c = out.get(i, j, k) + add;
                        out.set(i, j, k, c).expect("indices already validated");
                    }
                }
            }
        }
        out
    }
}

impl StructureConstants {
    /// Creates the zero tensor. Dimension 0 is allowed internally (it arises
    /// as the restriction to the zero subspace); external inputs require
    /// dimension ≥ 1.
    pub fn new(dim: usize) -> Result<Self, TensorError> {
        if dim > MAX_DIM {
            return Err(TensorError::BadDimension(dim));
        }
        Ok(StructureConstants {
            dim,
            entries: BTreeMap::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Sets C^k_ij = c (and C^k_ji = −c by antisymmetry). Requires i ≠ j.
    pub fn set(&mut self, i: usize, j: usize, k: usize, c: Q) -> Result<(), TensorError> {
        let n = self.dim;
        if i == 0 || j == 0 || k == 0 || i > n || j > n || k > n {
            return Err(TensorError::IndexOutOfRange { i, j, k, dim: n });
        }
        if i == j {
            return Err(TensorError::NotCanonicalPair { i, j });
        }
        let (key, val) = if i < j { ((i, j, k), c) } else { ((j, i, k), -c) };
        if val.is_zero() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, val);
        }
        Ok(())
    }

    /// Reads C^k_ij with antisymmetry applied for i > j; zero for i = j.
    pub fn get(&self, i: usize, j: usize, k: usize) -> Q {
        if i == j {
            return Q::zero();
        }
        let (key, sign) = if i < j { ((i, j, k), 1) } else { ((j, i, k), -1) };
        match self.entries.get(&key) {
            Some(v) if sign > 0 => v.clone(),
            Some(v) => -v.clone(),
            None => Q::zero(),
        }
    }

    /// Canonical nonzero entries (i < j) as ((i, j, k), value).
    pub fn canonical_entries(&self) -> impl Iterator<Item = (&(usize, usize, usize), &Q)> {
        self.entries.iter()
    }

    pub fn is_abelian(&self) -> bool {
        self.entries.is_empty()
    }

    /// Bracket of two coordinate vectors: [x, y]^k = Σ C^k_ij x^i y^j.
    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![Q::zero(); self.dim];
        for (&(i, j, k), c) in &self.entries {
            let coef = &x[i - 1] * &y[j - 1] - &x[j - 1] * &y[i - 1];
            if !coef.is_zero() {
                out[k - 1] += c * &coef;
            }
        }
        out
    }

    /// Matrix of ad e_i: rows indexed by k, columns by j, entry C^k_ij.
    pub fn adjoint_matrix(&self, i: usize) -> Result<Mat, TensorError> {
        if i == 0 || i > self.dim {
            return Err(TensorError::IndexOutOfRange {
                i,
                j: 0,
                k: 0,
                dim: self.dim,
            });
        }
        let n = self.dim;
        Ok(Mat::from_fn(n, n, |k, j| self.get(i, j + 1, k + 1)))
    }

    /// Matrix of ad x for an arbitrary coordinate vector x.
    pub fn ad_of_vector(&self, x: &[Q]) -> Mat {
        assert_eq!(x.len(), self.dim);
        let n = self.dim;
        let mut m = Mat::zero(n, n);
        for j in 0..n {
            let mut e = vec![Q::zero(); n];
            e[j] = qi(1);
            let col = self.bracket(x, &e);
            for (k, v) in col.into_iter().enumerate() {
                m[(k, j)] = v;
            }
        }
        m
    }

    /// Checks the Lie axioms exactly and reports every violated constraint.
    /// Antisymmetry holds by construction of the canonical storage; the
    /// quadratic cyclic constraint is checked on all generator triples.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim;
        let mut report = ValidationReport::default();
        for i in 1..=n {
            for j in (i + 1)..=n {
                for k in (j + 1)..=n {
                    let mut residual = vec![Q::zero(); n];
                    let mut nonzero = false;
                    for m in 1..=n {
                        let mut s = Q::zero();
                        for l in 1..=n {
                            s += self.get(i, j, l) * self.get(l, k, m);
                            s += self.get(j, k, l) * self.get(l, i, m);
                            s += self.get(k, i, l) * self.get(l, j, m);
                        }
                        if !s.is_zero() {
                            nonzero = true;
                        }
                        residual[m - 1] = s;
                    }
                    if nonzero {
                        report.violations.push(Violation::Jacobi { i, j, k, residual });
                    }
                }
            }
        }
        report
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    /// Tensor transformation under a basis change A:
    /// C'^k_ij = (A⁻¹)^k_h C^h_fg A^f_i A^g_j.
    /// Applying A then B equals applying the product A·B once.
    pub fn apply_basis_change(&self, m: &BasisChange) -> Result<StructureConstants, TensorError> {
        let n = self.dim;
        if m.dim() != n {
            return Err(TensorError::DimensionMismatch {
                expected: n,
                got: m.dim(),
            });
        }
        let a = m.matrix();
        let a_inv = m.inverse();
        let a_inv = a_inv.matrix();
        let mut out = StructureConstants::new(n)?;
        for i in 1..=n {
            for j in (i + 1)..=n {
                // [e'_i, e'_j] in old coordinates, then back through A⁻¹.
                let xi = a.col(i - 1);
                let xj = a.col(j - 1);
                let br = self.bracket(&xi, &xj);
                let new = a_inv.mul_vec(&br);
                for (k, v) in new.into_iter().enumerate() {
                    if !v.is_zero() {
                        out.set(i, j, k + 1, v)?;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Trace/vector split with v_i = C^j_ij / (1 − n); defined for n ≥ 2.
    pub fn trace_decompose(&self) -> Result<TraceDecomposition, TensorError> {
        let n = self.dim;
        if n < 2 {
            return Err(TensorError::TraceDecompositionUndefined);
        }
        let denom = qi(1 - n as i64);
        let vector: Vec<Q> = (1..=n)
            .map(|i| {
                let mut t = Q::zero();
                for j in 1..=n {
                    t += self.get(i, j, j);
                }
                t / &denom
            })
            .collect();
        let mut tracefree = StructureConstants::new(n)?;
        for i in 1..=n {
            for j in (i + 1)..=n {
                for k in 1..=n {
                    let mut d = self.get(i, j, k);
                    if k == i {
                        d -= &vector[j - 1];
                    }
                    if k == j {
                        d += &vector[i - 1];
                    }
                    if !d.is_zero() {
                        tracefree.set(i, j, k, d)?;
                    }
                }
            }
        }
        Ok(TraceDecomposition { tracefree, vector })
    }

    /// Whether every adjoint matrix is traceless.
    pub fn is_unimodular(&self) -> bool {
        (1..=self.dim).all(|i| {
            (1..=self.dim)
                .fold(Q::zero(), |acc, j| acc + self.get(i, j, j))
                .is_zero()
        })
    }

    /// Re-expresses the bracket in the subspace spanned by `basis`, which
    /// must be closed under the bracket; returns `None` otherwise.
    pub fn restrict(&self, basis: &[Vec<Q>]) -> Option<StructureConstants> {
        let d = basis.len();
        if d == 0 {
            return StructureConstants::new(0).ok();
        }
        let m = Mat::from_rows(basis.to_vec()).transpose();
        let mut out = StructureConstants::new(d).ok()?;
        for i in 0..d {
            for j in (i + 1)..d {
                let br = self.bracket(&basis[i], &basis[j]);
                let coords = m.solve(&br)?;
                // Solutions are unique when the basis is independent; a
                // residual check guards closure.
                if m.mul_vec(&coords) != br {
                    return None;
                }
                for (k, v) in coords.into_iter().enumerate() {
                    if !v.is_zero() {
                        out.set(i + 1, j + 1, k + 1, v).ok()?;
                    }
                }
            }
        }
        Some(out)
    }

    /// Block-diagonal direct sum of two tensors.
    pub fn direct_sum(&self, other: &StructureConstants) -> Result<StructureConstants, TensorError> {
        let n = self.dim + other.dim;
        let mut out = StructureConstants::new(n)?;
        for (&(i, j, k), c) in self.canonical_entries() {
            out.set(i, j, k, c.clone())?;
        }
        let off = self.dim;
        for (&(i, j, k), c) in other.canonical_entries() {
            out.set(i + off, j + off, k + off, c.clone())?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qr;

    fn sc(dim: usize, brackets: &[(usize, usize, usize, i64)]) -> StructureConstants {
        let mut t = StructureConstants::new(dim).unwrap();
        for &(i, j, k, c) in brackets {
            t.set(i, j, k, qi(c)).unwrap();
        }
        t
    }

    #[test]
    fn su2_commutators_are_valid() {
        // [e1,e2]=e3, [e3,e1]=e2, [e2,e3]=e1.
        let t = sc(3, &[(1, 2, 3, 1), (3, 1, 2, 1), (2, 3, 1, 1)]);
        assert!(t.validate().is_valid());
    }

    #[test]
    fn zero_tensor_is_valid_for_all_dims() {
        for n in 1..=6 {
            assert!(StructureConstants::new(n).unwrap().validate().is_valid());
        }
    }

    #[test]
    fn jacobi_violation_reports_triple_and_residual() {
        // Only [e1,e2]=e3 and [e1,e3]=e1: cyclic sum on (1,2,3) is −e3.
        let t = sc(3, &[(1, 2, 3, 1), (1, 3, 1, 1)]);
        let report = t.validate();
        assert_eq!(report.violations.len(), 1);
        match &report.violations[0] {
            Violation::Jacobi { i, j, k, residual } => {
                assert_eq!((*i, *j, *k), (1, 2, 3));
                assert_eq!(residual, &vec![qi(0), qi(0), qi(-1)]);
            }
        }
    }

    #[test]
    fn antisymmetry_is_built_in() {
        let t = sc(3, &[(2, 1, 3, 1)]);
        assert_eq!(t.get(1, 2, 3), qi(-1));
        assert_eq!(t.get(2, 1, 3), qi(1));
        assert_eq!(t.get(1, 1, 3), qi(0));
    }

    #[test]
    fn set_rejects_bad_indices() {
        let mut t = StructureConstants::new(3).unwrap();
        assert!(matches!(
            t.set(1, 4, 2, qi(1)),
            Err(TensorError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            t.set(2, 2, 1, qi(1)),
            Err(TensorError::NotCanonicalPair { .. })
        ));
    }

    #[test]
    fn heisenberg_adjoint_matrix() {
        // [e3,e2]=e1, i.e. C^1_32 = 1.
        let t = sc(3, &[(2, 3, 1, -1)]);
        let m = t.adjoint_matrix(3).unwrap();
        assert_eq!(m[(0, 1)], qi(1));
        let mut nonzero = 0;
        for k in 0..3 {
            for j in 0..3 {
                if !m[(k, j)].is_zero() {
                    nonzero += 1;
                }
            }
        }
        assert_eq!(nonzero, 1);
    }

    #[test]
    fn abelian_adjoints_vanish() {
        let t = StructureConstants::new(4).unwrap();
        for i in 1..=4 {
            assert!(t.adjoint_matrix(i).unwrap().is_zero());
        }
    }

    #[test]
    fn adjoint_column_of_own_index_is_zero() {
        let t = sc(3, &[(1, 2, 3, 1), (1, 3, 1, 2), (2, 3, 2, 5)]);
        for i in 1..=3 {
            let m = t.adjoint_matrix(i).unwrap();
            for k in 0..3 {
                assert!(m[(k, i - 1)].is_zero());
            }
        }
    }

    #[test]
    fn identity_basis_change_is_identity() {
        let t = sc(3, &[(1, 2, 3, 1), (3, 1, 2, 1), (2, 3, 1, 1)]);
        let id = BasisChange::identity(3);
        assert_eq!(t.apply_basis_change(&id).unwrap(), t);
    }

    #[test]
    fn basis_change_round_trip() {
        let t = sc(3, &[(1, 2, 3, 1), (3, 1, 2, 1), (2, 3, 1, 1)]);
        let m = BasisChange::new(Mat::from_rows(vec![
            vec![qi(1), qi(2), qi(0)],
            vec![qi(0), qi(1), qi(3)],
            vec![qi(1), qi(0), qi(1)],
        ]))
        .unwrap();
        let moved = t.apply_basis_change(&m).unwrap();
        assert!(moved.validate().is_valid());
        let back = moved.apply_basis_change(&m.inverse()).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn orientation_signs_compose() {
        let refl = |i: usize| {
            let mut m = Mat::identity(4);
            m[(i, i)] = qi(-1);
            BasisChange::new(m).unwrap()
        };
        let mut swap23 = Mat::zero(4, 4);
        swap23[(0, 0)] = qi(1);
        swap23[(3, 3)] = qi(1);
        swap23[(1, 2)] = qi(1);
        swap23[(2, 1)] = qi(1);
        let swap23 = BasisChange::new(swap23).unwrap();
        assert_eq!(BasisChange::identity(4).orientation_sign(), 1);
        assert_eq!(refl(0).orientation_sign(), -1);
        let combo = refl(3).compose(&refl(0)).compose(&swap23);
        assert_eq!(combo.orientation_sign(), -1);
    }

    #[test]
    fn trace_decompose_pure_vector_type() {
        // [e3,e1]=e1, [e3,e2]=e2 (scaling class): D ≡ 0, v ≠ 0.
        let t = sc(3, &[(1, 3, 1, -1), (2, 3, 2, -1)]);
        let d = t.trace_decompose().unwrap();
        assert!(d.tracefree.is_abelian());
        assert!(d.vector.iter().any(|v| !v.is_zero()));
        assert_eq!(d.recombine(), t);
    }

    #[test]
    fn trace_decompose_unimodular_has_zero_vector() {
        let t = sc(3, &[(2, 3, 1, -1)]);
        let d = t.trace_decompose().unwrap();
        assert!(d.vector.iter().all(Zero::is_zero));
        assert!(t.is_unimodular());
        assert_eq!(d.recombine(), t);
    }

    #[test]
    fn trace_decompose_mixed_case() {
        // [e3,e1]=e1, [e3,e2]=e1+e2: both parts nonzero.
        let t = sc(3, &[(1, 3, 1, -1), (2, 3, 1, -1), (2, 3, 2, -1)]);
        let d = t.trace_decompose().unwrap();
        assert!(!d.tracefree.is_abelian());
        assert!(d.vector.iter().any(|v| !v.is_zero()));
        assert_eq!(d.recombine(), t);
        assert!(!t.is_unimodular());
    }

    #[test]
    fn trace_decompose_rejects_dim_one() {
        let t = StructureConstants::new(1).unwrap();
        assert!(matches!(
            t.trace_decompose(),
            Err(TensorError::TraceDecompositionUndefined)
        ));
    }

    #[test]
    fn tracefree_part_is_traceless() {
        let t = sc(3, &[(1, 3, 1, -2), (2, 3, 1, -1), (2, 3, 2, -3)]);
        let d = t.trace_decompose().unwrap();
        for i in 1..=3 {
            let tr = (1..=3).fold(Q::zero(), |acc, j| acc + d.tracefree.get(i, j, j));
            assert!(tr.is_zero());
        }
    }

    #[test]
    fn restrict_to_closed_subspace() {
        // Heisenberg inside dim 4: [e2,e3]=e1 plus abelian e4.
        let t = sc(4, &[(2, 3, 1, 1)]);
        let basis = vec![
            vec![qi(1), qi(0), qi(0), qi(0)],
            vec![qi(0), qi(1), qi(0), qi(0)],
            vec![qi(0), qi(0), qi(1), qi(0)],
        ];
        let r = t.restrict(&basis).unwrap();
        assert_eq!(r.dim(), 3);
        assert_eq!(r.get(2, 3, 1), qi(1));
    }

    #[test]
    fn restrict_detects_non_closed_subspace() {
        let t = sc(3, &[(1, 2, 3, 1)]);
        let basis = vec![
            vec![qi(1), qi(0), qi(0)],
            vec![qi(0), qi(1), qi(0)],
        ];
        assert!(t.restrict(&basis).is_none());
    }

    #[test]
    fn rational_entries_stay_exact() {
        let t = sc(3, &[(1, 2, 3, 1)]);
        let mut t2 = t.clone();
        t2.set(1, 3, 2, qr(2, 6)).unwrap();
        assert_eq!(t2.get(1, 3, 2), qr(1, 3));
        assert_eq!(t2.get(3, 1, 2), qr(-1, 3));
    }
}
