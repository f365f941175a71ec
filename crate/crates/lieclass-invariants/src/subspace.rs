//! Exact subspaces of the coordinate space, stored with a canonical reduced
//! echelon basis so equal subspaces compare equal structurally.

use lieclass_core::matrix::{in_span, span_basis, Mat};
use lieclass_core::scalar::{qi, Q};
use lieclass_core::StructureConstants;
use num::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Q>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![Q::zero(); ambient];
                v[i] = qi(1);
                v
            })
            .collect();
        Subspace { ambient, basis }
    }

    /// Span of the given vectors, reduced to the canonical echelon basis.
    pub fn span(ambient: usize, vectors: &[Vec<Q>]) -> Self {
        assert!(vectors.iter().all(|v| v.len() == ambient));
        Subspace {
            ambient,
            basis: span_basis(vectors, ambient),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Q>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        in_span(&self.basis, v)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, &vs)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        // Columns: [self basisᵀ | -other basisᵀ]; kernel rows give matching
        // coefficient pairs, the self part spans the intersection.
        let a = self.dim();
        let b = other.dim();
        let m = Mat::from_fn(self.ambient, a + b, |r, c| {
            if c < a {
                self.basis[c][r].clone()
            } else {
                -other.basis[c - a][r].clone()
            }
        });
        let mut vectors = Vec::new();
        for k in m.kernel() {
            let mut v = vec![Q::zero(); self.ambient];
            for (idx, coef) in k.iter().take(a).enumerate() {
                if !coef.is_zero() {
                    for r in 0..self.ambient {
                        v[r] += coef * &self.basis[idx][r];
                    }
                }
            }
            vectors.push(v);
        }
        Subspace::span(self.ambient, &vectors)
    }

    /// Span of [x, y] over x in `left`, y in `right`.
    pub fn bracket_span(sc: &StructureConstants, left: &Subspace, right: &Subspace) -> Subspace {
        let n = sc.dim();
        let mut vectors = Vec::new();
        for x in &left.basis {
            for y in &right.basis {
                let b = sc.bracket(x, y);
                if b.iter().any(|c| !c.is_zero()) {
                    vectors.push(b);
                }
            }
        }
        Subspace::span(n, &vectors)
    }

    /// Whether [A, self] ⊆ self.
    pub fn is_ideal(&self, sc: &StructureConstants) -> bool {
        let whole = Subspace::full(sc.dim());
        let img = Subspace::bracket_span(sc, &whole, self);
        self.contains_subspace(&img)
    }

    /// Whether [self, self] ⊆ self.
    pub fn is_subalgebra(&self, sc: &StructureConstants) -> bool {
        let img = Subspace::bracket_span(sc, self, self);
        self.contains_subspace(&img)
    }

    /// Whether all brackets inside the subspace vanish.
    pub fn is_abelian_subspace(&self, sc: &StructureConstants) -> bool {
        Subspace::bracket_span(sc, self, self).is_zero()
    }

    /// The restricted tensor on this subspace, when bracket-closed.
    pub fn restricted(&self, sc: &StructureConstants) -> Option<StructureConstants> {
        sc.restrict(&self.basis)
    }

    /// Extends the basis to the whole space using standard directions.
    pub fn extend_to_full_basis(&self) -> Vec<Vec<Q>> {
        let mut out = self.basis.clone();
        for i in 0..self.ambient {
            let mut e = vec![Q::zero(); self.ambient];
            e[i] = qi(1);
            if !in_span(&out, &e) {
                out.push(e);
            }
        }
        assert_eq!(out.len(), self.ambient);
        out
    }
}

/// Derived subspace [A, A].
pub fn derived_subspace(sc: &StructureConstants) -> Subspace {
    let full = Subspace::full(sc.dim());
    Subspace::bracket_span(sc, &full, &full)
}

/// Center {x : [x, A] = 0}.
pub fn center(sc: &StructureConstants) -> Subspace {
    centralizer(sc, &Subspace::full(sc.dim()))
}

/// Centralizer {x : [x, s] = 0 for all s in the subspace}.
pub fn centralizer(sc: &StructureConstants, of: &Subspace) -> Subspace {
    let n = sc.dim();
    if of.is_zero() {
        return Subspace::full(n);
    }
    // Stack the maps x -> [x, s_j]; the centralizer is the joint kernel.
    let rows = of.dim() * n;
    let mut m = Mat::zero(rows, n);
    for (j, s) in of.basis().iter().enumerate() {
        for i in 0..n {
            let mut e = vec![Q::zero(); n];
            e[i] = qi(1);
            let b = sc.bracket(&e, s);
            for (k, v) in b.into_iter().enumerate() {
                m[(j * n + k, i)] = v;
            }
        }
    }
    Subspace::span(n, &m.kernel())
}
