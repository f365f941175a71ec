//! Canonical split of a 3-dimensional antisymmetric tensor into a symmetric
//! matrix and a vector: C^k_ij = ε_ijl (n^{lk} + ε^{lkm} a_m), with the
//! compatibility relation n^{lm} a_m = 0 for valid brackets.

use lieclass_core::matrix::Mat;
use lieclass_core::scalar::{qr, Q};
use lieclass_core::{StructureConstants, TensorError};
use num::Zero;

/// Levi-Civita symbol on 1-based indices.
pub fn epsilon(i: usize, j: usize, k: usize) -> i64 {
    match (i, j, k) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1,
        (3, 2, 1) | (2, 1, 3) | (1, 3, 2) => -1,
        _ => 0,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BehrForm {
    /// Symmetric 3×3 matrix n^{lk}.
    pub n: Mat,
    /// Vector a_m, 0-based storage.
    pub a: Vec<Q>,
}

impl BehrForm {
    /// Rebuilds C^k_ij exactly.
    pub fn recombine(&self) -> StructureConstants {
        let mut sc = StructureConstants::new(3).unwrap();
        for i in 1..=3usize {
            for j in (i + 1)..=3 {
                for k in 1..=3 {
                    let mut c = Q::zero();
                    for l in 1..=3usize {
                        let e = epsilon(i, j, l);
                        if e == 0 {
                            continue;
                        }
                        let mut inner = self.n[(l - 1, k - 1)].clone();
                        for m in 1..=3usize {
                            let e2 = epsilon(l, k, m);
                            if e2 != 0 {
                                inner += &self.a[m - 1] * qr(e2, 1);
                            }
                        }
                        c += inner * qr(e, 1);
                    }
                    if !c.is_zero() {
                        sc.set(i, j, k, c).unwrap();
                    }
                }
            }
        }
        sc
    }

    /// The compatibility vector n^{lm} a_m; zero for valid Lie brackets.
    pub fn constraint_residual(&self) -> Vec<Q> {
        self.n.mul_vec(&self.a)
    }
}

/// Computes the split; defined only for dimension 3.
pub fn behr_form(sc: &StructureConstants) -> Result<BehrForm, TensorError> {
    if sc.dim() != 3 {
        return Err(TensorError::DimensionMismatch {
            expected: 3,
            got: sc.dim(),
        });
    }
    // M^{pk} = (1/2) Σ_{ij} ε_{ijp} C^k_ij, then n = sym(M) and the
    // antisymmetric remainder encodes a.
    let mut m = Mat::zero(3, 3);
    for p in 1..=3usize {
        for k in 1..=3usize {
            let mut v = Q::zero();
            for i in 1..=3usize {
                for j in 1..=3usize {
                    let e = epsilon(i, j, p);
                    if e != 0 {
                        v += sc.get(i, j, k) * qr(e, 1);
                    }
                }
            }
            m[(p - 1, k - 1)] = v * qr(1, 2);
        }
    }
    let n = Mat::from_fn(3, 3, |l, k| (&m[(l, k)] + &m[(k, l)]) * qr(1, 2));
    let anti = Mat::from_fn(3, 3, |l, k| (&m[(l, k)] - &m[(k, l)]) * qr(1, 2));
    let a = (1..=3usize)
        .map(|mm| {
            let mut v = Q::zero();
            for l in 1..=3usize {
                for k in 1..=3usize {
                    let e = epsilon(mm, l, k);
                    if e != 0 {
                        v += &anti[(l - 1, k - 1)] * qr(e, 1);
                    }
                }
            }
            v * qr(1, 2)
        })
        .collect();
    Ok(BehrForm { n, a })
}

#[cfg(test)]
mod tests {
    use super::*;
    use lieclass_core::scalar::qi;

    fn mk(brs: &[(usize, usize, usize, i64)]) -> StructureConstants {
        let mut t = StructureConstants::new(3).unwrap();
        for &(i, j, k, c) in brs {
            t.set(i, j, k, qi(c)).unwrap();
        }
        t
    }

    #[test]
    fn heisenberg_has_rank_one_n_and_zero_a() {
        let b = behr_form(&mk(&[(2, 3, 1, 1)])).unwrap();
        assert_eq!(b.n, Mat::diagonal(&[qi(1), qi(0), qi(0)]));
        assert!(b.a.iter().all(Zero::is_zero));
        assert_eq!(b.recombine(), mk(&[(2, 3, 1, 1)]));
    }

    #[test]
    fn abelian_gives_zero_pair() {
        let b = behr_form(&mk(&[])).unwrap();
        assert!(b.n.is_zero());
        assert!(b.a.iter().all(Zero::is_zero));
    }

    #[test]
    fn scaling_algebra_gives_zero_n_nonzero_a() {
        // [e1,e3]=e1, [e2,e3]=e2.
        let sc = mk(&[(1, 3, 1, 1), (2, 3, 2, 1)]);
        let b = behr_form(&sc).unwrap();
        assert!(b.n.is_zero());
        assert_eq!(b.a, vec![qi(0), qi(0), qi(1)]);
        assert_eq!(b.recombine(), sc);
        assert!(b.constraint_residual().iter().all(Zero::is_zero));
    }

    #[test]
    fn su2_gives_identity_n() {
        let sc = mk(&[(1, 2, 3, 1), (2, 3, 1, 1), (3, 1, 2, 1)]);
        let b = behr_form(&sc).unwrap();
        assert_eq!(b.n, Mat::identity(3));
        assert!(b.a.iter().all(Zero::is_zero));
        assert_eq!(b.recombine(), sc);
    }

    #[test]
    fn rejects_wrong_dimension() {
        let sc = StructureConstants::new(4).unwrap();
        assert!(behr_form(&sc).is_err());
    }
}
