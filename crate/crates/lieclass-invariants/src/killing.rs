//! Killing form K(x, y) = tr(ad x · ad y) in exact arithmetic and its
//! signature via symmetric congruence reduction (Sylvester's law makes the
//! signature a basis-change invariant).

use lieclass_core::matrix::Mat;
use lieclass_core::scalar::Q;
use lieclass_core::StructureConstants;
use num::Zero;

/// Symmetric matrix of the Killing form on the generator basis.
pub fn killing_matrix(sc: &StructureConstants) -> Mat {
    let n = sc.dim();
    let ads: Vec<Mat> = (1..=n)
        .map(|i| sc.adjoint_matrix(i).expect("index in range"))
        .collect();
    Mat::from_fn(n, n, |i, j| ads[i].mul(&ads[j]).trace())
}

/// Signature (positive, negative, zero) of a symmetric rational matrix.
pub fn signature(sym: &Mat) -> (usize, usize, usize) {
    assert!(sym.is_square());
    let n = sym.rows();
    let mut m = sym.clone();
    let mut pos = 0;
    let mut neg = 0;
    let mut zero = 0;
    let mut live: Vec<usize> = (0..n).collect();
    while !live.is_empty() {
        // Prefer a nonzero diagonal pivot among live indices.
        let pivot = live.iter().copied().find(|&i| !m[(i, i)].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                // Look for a nonzero off-diagonal pair and fold it onto the
                // diagonal: (e_i + e_j) has value 2·m_ij.
                let mut found = None;
                'outer: for (ai, &i) in live.iter().enumerate() {
                    for &j in &live[ai + 1..] {
                        if !m[(i, j)].is_zero() {
                            found = Some((i, j));
                            break 'outer;
                        }
                    }
                }
                match found {
                    None => {
                        zero += live.len();
                        break;
                    }
                    Some((i, j)) => {
                        // Congruence: row/col i += row/col j.
                        for c in 0..n {
                            let v = &m[(i, c)] + &m[(j, c)];
                            m[(i, c)] = v;
                        }
                        for r in 0..n {
                            let v = &m[(r, i)] + &m[(r, j)];
                            m[(r, i)] = v;
                        }
                        i
                    }
                }
            }
        };
        let d = m[(p, p)].clone();
        if d > Q::zero() {
            pos += 1;
        } else {
            neg += 1;
        }
        // Clear row/column p by congruence among the remaining live indices.
        let others: Vec<usize> = live.iter().copied().filter(|&i| i != p).collect();
        for &i in &others {
            if m[(i, p)].is_zero() {
                continue;
            }
            let f = &m[(i, p)] / &d;
            for c in 0..n {
                let v = &m[(i, c)] - &(&f * &m[(p, c)]);
                m[(i, c)] = v;
            }
            for r in 0..n {
                let v = &m[(r, i)] - &(&f * &m[(r, p)]);
                m[(r, i)] = v;
            }
        }
        live = others;
    }
    (pos, neg, zero)
}

/// Signature of the Killing form.
pub fn killing_signature(sc: &StructureConstants) -> (usize, usize, usize) {
    signature(&killing_matrix(sc))
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
    fn su2_killing_form_is_definite() {
        let sc = mk(3, &[(1, 2, 3, 1), (2, 3, 1, 1), (3, 1, 2, 1)]);
        assert_eq!(killing_signature(&sc), (0, 3, 0));
    }

    #[test]
    fn su11_killing_form_is_indefinite() {
        // [e1,e2]=-e3, [e2,e3]=e1, [e3,e1]=e2.
        let sc = mk(3, &[(1, 2, 3, -1), (2, 3, 1, 1), (3, 1, 2, 1)]);
        let (p, n, z) = killing_signature(&sc);
        assert_eq!(z, 0);
        assert_eq!(p + n, 3);
        assert_ne!(p, 0);
        assert_ne!(n, 0);
    }

    #[test]
    fn nilpotent_killing_form_vanishes() {
        let sc = mk(3, &[(2, 3, 1, 1)]);
        assert_eq!(killing_signature(&sc), (0, 0, 3));
    }

    #[test]
    fn signature_handles_zero_diagonal() {
        // [[0,1],[1,0]] has signature (1,1,0).
        let m = Mat::from_fn(2, 2, |i, j| if i != j { qi(1) } else { qi(0) });
        assert_eq!(signature(&m), (1, 1, 0));
    }

    #[test]
    fn signature_counts_add_to_dim() {
        let m = Mat::diagonal(&[qi(2), qi(0), qi(-5), qi(7)]);
        assert_eq!(signature(&m), (2, 1, 1));
    }
}
