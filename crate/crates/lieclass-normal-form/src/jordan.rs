//! Real Jordan block decomposition of square rational matrices. Rational
//! eigenvalues are extracted exactly; irreducible quadratic factors become
//! complex pairs or quadratic surds; irreducible cubics use isolating
//! intervals. Block sizes come from exact nullity sequences.

use crate::algebraic::{real_roots_of_irreducible, ExactReal, RealAlgebraic};
use crate::poly::{compose_scale, degree, monic, mul, rational_roots, Poly};
use lieclass_core::matrix::Mat;
use lieclass_core::scalar::{qi, qr, Q};
use num::Zero;
use std::cmp::Ordering;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum NormalFormError {
    #[error("spectrum not supported exactly: {0}")]
    UnsupportedSpectrum(String),
    #[error("matrix must be square")]
    NotSquare,
    #[error("complement vector lies inside the ideal")]
    VectorInsideIdeal,
    #[error("subspace is not invariant under the adjoint")]
    NotInvariant,
}

/// One eigenvalue of a real matrix, stored exactly.
#[derive(Debug, Clone, PartialEq)]
pub enum Eigenvalue {
    Rational(Q),
    /// Irrational real eigenvalue.
    Algebraic(RealAlgebraic),
    /// re ± i·√im_sq with im_sq > 0.
    ComplexPair { re: Q, im_sq: Q },
    /// The conjugate non-real root pair of an irreducible cubic with exactly
    /// one real root.
    CubicPair { minpoly: Poly },
}

impl Eigenvalue {
    pub fn is_zero(&self) -> bool {
        matches!(self, Eigenvalue::Rational(q) if q.is_zero())
    }

    pub fn negate(&self) -> Eigenvalue {
        match self {
            Eigenvalue::Rational(q) => Eigenvalue::Rational(-q.clone()),
            Eigenvalue::Algebraic(a) => Eigenvalue::Algebraic(a.negate()),
            Eigenvalue::ComplexPair { re, im_sq } => Eigenvalue::ComplexPair {
                re: -re.clone(),
                im_sq: im_sq.clone(),
            },
            Eigenvalue::CubicPair { minpoly } => Eigenvalue::CubicPair {
                minpoly: monic(&compose_scale(minpoly, &qi(-1))),
            },
        }
    }

    /// Eigenvalue multiplied by a nonzero rational.
    pub fn scale(&self, c: &Q) -> Eigenvalue {
        assert!(!c.is_zero());
        match self {
            Eigenvalue::Rational(q) => Eigenvalue::Rational(q * c),
            Eigenvalue::Algebraic(a) => Eigenvalue::Algebraic(a.scale(c)),
            Eigenvalue::ComplexPair { re, im_sq } => Eigenvalue::ComplexPair {
                re: re * c,
                im_sq: im_sq * c * c,
            },
            Eigenvalue::CubicPair { minpoly } => Eigenvalue::CubicPair {
                minpoly: monic(&compose_scale(minpoly, &(qi(1) / c))),
            },
        }
    }

    /// Real part as an exact comparable number.
    pub fn real_part(&self) -> ExactReal {
        match self {
            Eigenvalue::Rational(q) => ExactReal::Rat(q.clone()),
            Eigenvalue::Algebraic(a) => ExactReal::Alg(a.clone()),
            Eigenvalue::ComplexPair { re, .. } => ExactReal::Rat(re.clone()),
            Eigenvalue::CubicPair { minpoly } => {
                // Root sum is −a; the pair's real part is (−a − ρ)/2 where ρ
                // is the unique real root.
                let a = minpoly[2].clone();
                let rho = real_roots_of_irreducible(minpoly)
                    .pop()
                    .expect("cubic has a real root");
                ExactReal::Alg(rho.affine(&(-a / qi(2)), &qr(-1, 2)))
            }
        }
    }

    /// Ordering key for the imaginary magnitude: zero first, then by size.
    fn imag_key(&self) -> (u8, Q) {
        match self {
            Eigenvalue::Rational(_) | Eigenvalue::Algebraic(_) => (0, Q::zero()),
            Eigenvalue::ComplexPair { im_sq, .. } => (1, im_sq.clone()),
            Eigenvalue::CubicPair { .. } => (2, Q::zero()),
        }
    }

    /// Total order: by real part, then imaginary magnitude class.
    pub fn compare(&self, other: &Eigenvalue) -> Ordering {
        match self.real_part().compare(&other.real_part()) {
            Ordering::Equal => {}
            o => return o,
        }
        let (ka, qa) = self.imag_key();
        let (kb, qb) = other.imag_key();
        ka.cmp(&kb).then_with(|| qa.cmp(&qb))
    }

    /// Real dimension contributed per block layer: 1 for real eigenvalues,
    /// 2 for conjugate pairs.
    pub fn layer_dim(&self) -> usize {
        match self {
            Eigenvalue::Rational(_) | Eigenvalue::Algebraic(_) => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct JordanBlock {
    pub eigenvalue: Eigenvalue,
    pub size: usize,
}

fn eval_poly_at_matrix(p: &Poly, m: &Mat) -> Mat {
    let n = m.rows();
    let mut acc = Mat::zero(n, n);
    for c in p.iter().rev() {
        acc = m.mul(&acc);
        for i in 0..n {
            acc[(i, i)] += c;
        }
    }
    acc
}

/// Block sizes for one irreducible factor from the nullity sequence of its
/// matrix powers. `orbit` is the number of eigenvalues sharing the structure
/// (Galois conjugates), `layer` the real dimension of one block layer.
fn block_sizes(m: &Mat, factor: &Poly, orbit_layer: usize) -> Vec<usize> {
    let n = m.rows();
    let fm = eval_poly_at_matrix(factor, m);
    let mut nullities = vec![0usize];
    let mut pw = Mat::identity(n);
    loop {
        pw = pw.mul(&fm);
        let nullity = n - pw.rank();
        if nullity == *nullities.last().unwrap() {
            break;
        }
        nullities.push(nullity);
    }
    // at_least[k] = number of blocks of size ≥ k (per conjugate).
    let at_least: Vec<usize> = nullities
        .windows(2)
        .map(|w| (w[1] - w[0]) / orbit_layer)
        .collect();
    let mut sizes = Vec::new();
    for k in 0..at_least.len() {
        let next = if k + 1 < at_least.len() { at_least[k + 1] } else { 0 };
        for _ in 0..(at_least[k] - next) {
            sizes.push(k + 1);
        }
    }
    sizes
}

/// Real Jordan blocks of a square rational matrix.
pub fn real_jordan_form(m: &Mat) -> Result<Vec<JordanBlock>, NormalFormError> {
    if !m.is_square() {
        return Err(NormalFormError::NotSquare);
    }
    let n = m.rows();
    let mut blocks = Vec::new();
    if n == 0 {
        return Ok(blocks);
    }
    let char = m.char_poly();
    let (rats, mut rem) = rational_roots(&char);
    for (lambda, mult) in rats {
        let factor = vec![-lambda.clone(), qi(1)];
        if mult == 1 {
            blocks.push(JordanBlock {
                eigenvalue: Eigenvalue::Rational(lambda),
                size: 1,
            });
            continue;
        }
        for size in block_sizes(m, &factor, 1) {
            blocks.push(JordanBlock {
                eigenvalue: Eigenvalue::Rational(lambda.clone()),
                size,
            });
        }
    }
    rem = monic(&rem);
    match degree(&rem) {
        0 => {}
        2 => push_quadratic(m, &rem, 1, &mut blocks)?,
        3 => {
            let roots = real_roots_of_irreducible(&rem);
            match roots.len() {
                3 => {
                    let sizes = block_sizes(m, &rem, 3);
                    for r in roots {
                        for &size in &sizes {
                            blocks.push(JordanBlock {
                                eigenvalue: Eigenvalue::Algebraic(r.clone()),
                                size,
                            });
                        }
                    }
                }
                1 => {
                    let sizes = block_sizes(m, &rem, 3);
                    let r = roots.into_iter().next().unwrap();
                    for &size in &sizes {
                        blocks.push(JordanBlock {
                            eigenvalue: Eigenvalue::Algebraic(r.clone()),
                            size,
                        });
                        blocks.push(JordanBlock {
                            eigenvalue: Eigenvalue::CubicPair {
                                minpoly: rem.clone(),
                            },
                            size,
                        });
                    }
                }
                k => {
                    return Err(NormalFormError::UnsupportedSpectrum(format!(
                        "cubic factor with {k} isolated real roots"
                    )))
                }
            }
        }
        4 => {
            // Only the square of an irreducible quadratic is supported.
            let p = rem[3].clone() / qi(2);
            let q = (rem[2].clone() - &p * &p) / qi(2);
            let g = vec![q.clone(), p.clone(), qi(1)];
            if mul(&g, &g) != rem {
                return Err(NormalFormError::UnsupportedSpectrum(
                    "irreducible factor of degree 4".into(),
                ));
            }
            push_quadratic(m, &g, 2, &mut blocks)?;
        }
        d => {
            return Err(NormalFormError::UnsupportedSpectrum(format!(
                "irreducible factor of degree {d}"
            )))
        }
    }
    debug_assert_eq!(
        blocks
            .iter()
            .map(|b| b.size * b.eigenvalue.layer_dim())
            .sum::<usize>(),
        n
    );
    Ok(blocks)
}

/// Blocks for an irreducible quadratic factor appearing with the given
/// multiplicity.
fn push_quadratic(
    m: &Mat,
    g: &Poly,
    multiplicity: usize,
    blocks: &mut Vec<JordanBlock>,
) -> Result<(), NormalFormError> {
    let p = g[1].clone();
    let q = g[0].clone();
    let disc = &p * &p - qi(4) * &q;
    if disc < Q::zero() {
        let re = -&p / qi(2);
        let im_sq = &q - &p * &p / qi(4);
        let sizes = if multiplicity == 1 {
            vec![1]
        } else {
            block_sizes(m, g, 2)
        };
        for size in sizes {
            blocks.push(JordanBlock {
                eigenvalue: Eigenvalue::ComplexPair {
                    re: re.clone(),
                    im_sq: im_sq.clone(),
                },
                size,
            });
        }
    } else {
        // Positive non-square discriminant: two real quadratic surds.
        let roots = real_roots_of_irreducible(g);
        debug_assert_eq!(roots.len(), 2);
        let sizes = if multiplicity == 1 {
            vec![1]
        } else {
            block_sizes(m, g, 2)
        };
        for r in roots {
            for &size in &sizes {
                blocks.push(JordanBlock {
                    eigenvalue: Eigenvalue::Algebraic(r.clone()),
                    size,
                });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Mat {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&c| qi(c)).collect())
                .collect(),
        )
    }

    #[test]
    fn rotation_gives_one_complex_pair() {
        let m = mat(&[&[0, 1], &[-1, 0]]);
        let b = real_jordan_form(&m).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(
            b[0].eigenvalue,
            Eigenvalue::ComplexPair {
                re: qi(0),
                im_sq: qi(1)
            }
        );
        assert_eq!(b[0].size, 1);
    }

    #[test]
    fn zero_matrix_gives_two_unit_blocks() {
        let m = mat(&[&[0, 0], &[0, 0]]);
        let b = real_jordan_form(&m).unwrap();
        assert_eq!(b.len(), 2);
        assert!(b.iter().all(|blk| blk.size == 1 && blk.eigenvalue.is_zero()));
    }

    #[test]
    fn full_jordan_block_detected() {
        let m = mat(&[&[1, 1, 0], &[0, 1, 1], &[0, 0, 1]]);
        let b = real_jordan_form(&m).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].size, 3);
        assert_eq!(b[0].eigenvalue, Eigenvalue::Rational(qi(1)));
    }

    #[test]
    fn mixed_structure_at_one_eigenvalue() {
        // One size-2 block and one size-1 block at 0.
        let m = mat(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
        let mut sizes: Vec<usize> = real_jordan_form(&m).unwrap().iter().map(|b| b.size).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2]);
    }

    #[test]
    fn quadratic_surd_eigenvalues() {
        // [[0,2],[1,0]] has eigenvalues ±√2.
        let m = mat(&[&[0, 2], &[1, 0]]);
        let b = real_jordan_form(&m).unwrap();
        assert_eq!(b.len(), 2);
        for blk in &b {
            match &blk.eigenvalue {
                Eigenvalue::Algebraic(a) => assert_eq!(a.minpoly, vec![qi(-2), qi(0), qi(1)]),
                other => panic!("expected surd, got {other:?}"),
            }
        }
    }

    #[test]
    fn irreducible_cubic_one_real_root() {
        // Companion matrix of x³ − 2.
        let m = mat(&[&[0, 0, 2], &[1, 0, 0], &[0, 1, 0]]);
        let b = real_jordan_form(&m).unwrap();
        assert_eq!(b.len(), 2);
        assert!(b.iter().any(|blk| matches!(blk.eigenvalue, Eigenvalue::Algebraic(_))));
        assert!(b.iter().any(|blk| matches!(blk.eigenvalue, Eigenvalue::CubicPair { .. })));
    }

    #[test]
    fn irreducible_cubic_three_real_roots() {
        // Companion matrix of x³ − 3x + 1.
        let m = mat(&[&[0, 0, -1], &[1, 0, 3], &[0, 1, 0]]);
        let b = real_jordan_form(&m).unwrap();
        assert_eq!(b.len(), 3);
        assert!(b.iter().all(|blk| matches!(blk.eigenvalue, Eigenvalue::Algebraic(_)) && blk.size == 1));
    }

    #[test]
    fn repeated_complex_pair() {
        // Block diagonal with two rotation blocks: (x²+1)².
        let m = mat(&[
            &[0, 1, 0, 0],
            &[-1, 0, 0, 0],
            &[0, 0, 0, 1],
            &[0, 0, -1, 0],
        ]);
        let b = real_jordan_form(&m).unwrap();
        assert_eq!(b.len(), 2);
        for blk in &b {
            assert_eq!(blk.size, 1);
            assert_eq!(
                blk.eigenvalue,
                Eigenvalue::ComplexPair {
                    re: qi(0),
                    im_sq: qi(1)
                }
            );
        }
    }

    #[test]
    fn eigenvalue_ordering() {
        let a = Eigenvalue::Rational(qi(2));
        let b = Eigenvalue::Rational(qi(1));
        let c = Eigenvalue::ComplexPair {
            re: qi(1),
            im_sq: qi(4),
        };
        assert_eq!(a.compare(&b), Ordering::Greater);
        assert_eq!(b.compare(&c), Ordering::Less);
        assert_eq!(c.compare(&c), Ordering::Equal);
    }

    #[test]
    fn triangular_large_matrix() {
        // 5×5 upper triangular with eigenvalues 1,1,1,2,2 and some nilpotency.
        let m = mat(&[
            &[1, 1, 0, 0, 0],
            &[0, 1, 0, 0, 0],
            &[0, 0, 1, 0, 0],
            &[0, 0, 0, 2, 1],
            &[0, 0, 0, 0, 2],
        ]);
        let b = real_jordan_form(&m).unwrap();
        let mut at1: Vec<usize> = b
            .iter()
            .filter(|blk| blk.eigenvalue == Eigenvalue::Rational(qi(1)))
            .map(|blk| blk.size)
            .collect();
        at1.sort();
        assert_eq!(at1, vec![1, 2]);
        let at2: Vec<usize> = b
            .iter()
            .filter(|blk| blk.eigenvalue == Eigenvalue::Rational(qi(2)))
            .map(|blk| blk.size)
            .collect();
        assert_eq!(at2, vec![2]);
    }
}
