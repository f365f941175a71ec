//! Scale normalization of real Jordan spectra. The canonical representative
//! divides all eigenvalues by one fixed real factor chosen deterministically
//! from the spectrum, then fixes the overall sign by a lexicographic rule, so
//! that two spectra agree exactly if and only if they differ by a nonzero
//! real scale.

use crate::algebraic::{rational_sqrt, real_roots_of_irreducible, ExactReal, RealAlgebraic};
use crate::jordan::{real_jordan_form, Eigenvalue, JordanBlock, NormalFormError};
use crate::poly::{degree, monic, Poly};
use lieclass_core::matrix::Mat;
use lieclass_core::scalar::{format_q, parse_q, qi, Q};
use lieclass_core::StructureConstants;
use lieclass_invariants::Subspace;
use num::bigint::BigInt;
use num::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;

/// Normalized block multiset. Equality compares blocks only; the divisor is
/// diagnostic (and absent when the normalizing factor was irrational).
#[derive(Debug, Clone)]
pub struct Njnf {
    blocks: Vec<JordanBlock>,
    pub divisor: Option<Q>,
}

impl PartialEq for Njnf {
    fn eq(&self, other: &Self) -> bool {
        self.blocks == other.blocks
    }
}

impl Eq for Njnf {}

impl Njnf {
    pub fn blocks(&self) -> &[JordanBlock] {
        &self.blocks
    }
}

fn cmp_blocks(a: &JordanBlock, b: &JordanBlock) -> Ordering {
    b.eigenvalue
        .compare(&a.eigenvalue)
        .then(b.size.cmp(&a.size))
}

fn sort_blocks(blocks: &mut [JordanBlock]) {
    blocks.sort_by(cmp_blocks);
}

/// Lexicographic comparison of two sorted block lists.
fn cmp_lists(a: &[JordanBlock], b: &[JordanBlock]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.eigenvalue.compare(&y.eigenvalue) {
            Ordering::Equal => {}
            o => return o,
        }
        match x.size.cmp(&y.size) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

/// Canonical scale-free representative of a block list.
pub fn normalize(blocks: Vec<JordanBlock>) -> Result<Njnf, NormalFormError> {
    if blocks.iter().all(|b| b.eigenvalue.is_zero()) {
        let mut blocks = blocks;
        sort_blocks(&mut blocks);
        return Ok(Njnf {
            blocks,
            divisor: Some(qi(1)),
        });
    }
    let cubic = blocks.iter().find_map(|b| match &b.eigenvalue {
        Eigenvalue::CubicPair { minpoly } => Some(minpoly.clone()),
        Eigenvalue::Algebraic(a) if degree(&a.minpoly) == 3 => Some(a.minpoly.clone()),
        _ => None,
    });
    if let Some(f) = cubic {
        return normalize_cubic(blocks, f);
    }
    normalize_quadratic_world(blocks)
}

/// Squared modulus of an eigenvalue as an exact comparable real.
fn modulus_sq(e: &Eigenvalue) -> Result<ExactReal, NormalFormError> {
    match e {
        Eigenvalue::Rational(q) => Ok(ExactReal::Rat(q * q)),
        Eigenvalue::ComplexPair { re, im_sq } => Ok(ExactReal::Rat(re * re + im_sq)),
        Eigenvalue::Algebraic(a) => {
            // α² = −pα − q for minpoly x² + px + q.
            if degree(&a.minpoly) != 2 {
                return Err(NormalFormError::UnsupportedSpectrum(
                    "modulus of an algebraic number of degree > 2".into(),
                ));
            }
            let p = a.minpoly[1].clone();
            let q = a.minpoly[0].clone();
            if p.is_zero() {
                Ok(ExactReal::Rat(-q))
            } else {
                Ok(ExactReal::Alg(a.affine(&-q, &-p)))
            }
        }
        Eigenvalue::CubicPair { .. } => unreachable!("cubic handled separately"),
    }
}

fn normalize_quadratic_world(blocks: Vec<JordanBlock>) -> Result<Njnf, NormalFormError> {
    // Locate the block of maximal modulus.
    let mut best: Option<(usize, ExactReal)> = None;
    for (i, b) in blocks.iter().enumerate() {
        let m = modulus_sq(&b.eigenvalue)?;
        match &best {
            None => best = Some((i, m)),
            Some((_, cur)) => {
                if m.compare(cur) == Ordering::Greater {
                    best = Some((i, m));
                }
            }
        }
    }
    let (idx, max_sq) = best.unwrap();
    if let ExactReal::Rat(ms) = &max_sq {
        if let Some(d) = rational_sqrt(ms) {
            return Ok(finish_with_rational_divisor(blocks, &d));
        }
    }
    match blocks[idx].eigenvalue.clone() {
        Eigenvalue::Algebraic(alpha) => normalize_by_surd(blocks, alpha),
        Eigenvalue::ComplexPair { re, im_sq } => {
            if let Some(s) = rational_sqrt(&im_sq) {
                Ok(finish_with_rational_divisor(blocks, &s))
            } else if !re.is_zero() {
                Ok(finish_with_rational_divisor(blocks, &re.abs()))
            } else {
                normalize_by_imaginary_surd(blocks, &im_sq)
            }
        }
        Eigenvalue::Rational(_) => unreachable!("rational maxima have rational square moduli"),
        Eigenvalue::CubicPair { .. } => unreachable!("cubic handled separately"),
    }
}

/// Divide every eigenvalue by the positive rational d, then pick the sign.
fn finish_with_rational_divisor(blocks: Vec<JordanBlock>, d: &Q) -> Njnf {
    let inv = qi(1) / d;
    let scaled: Vec<JordanBlock> = blocks
        .into_iter()
        .map(|b| JordanBlock {
            eigenvalue: b.eigenvalue.scale(&inv),
            size: b.size,
        })
        .collect();
    let (blocks, flipped) = pick_sign(scaled);
    Njnf {
        blocks,
        divisor: Some(if flipped { -d.clone() } else { d.clone() }),
    }
}

/// Among the list and its negation, keep the lexicographically larger one.
fn pick_sign(mut blocks: Vec<JordanBlock>) -> (Vec<JordanBlock>, bool) {
    let mut negated: Vec<JordanBlock> = blocks
        .iter()
        .map(|b| JordanBlock {
            eigenvalue: b.eigenvalue.negate(),
            size: b.size,
        })
        .collect();
    sort_blocks(&mut blocks);
    sort_blocks(&mut negated);
    if cmp_lists(&negated, &blocks) == Ordering::Greater {
        (negated, true)
    } else {
        (blocks, false)
    }
}

/// Divide by a real quadratic surd of maximal modulus; results live in the
/// same quadratic field and reduce to degree ≤ 2 data.
fn normalize_by_surd(
    blocks: Vec<JordanBlock>,
    alpha: RealAlgebraic,
) -> Result<Njnf, NormalFormError> {
    let f = alpha.minpoly.clone();
    let p = f[1].clone();
    let q = f[0].clone();
    // 1/α = −(α + p)/q.
    let ratio_of_rational = |r: &Q| -> Eigenvalue {
        if r.is_zero() {
            Eigenvalue::Rational(Q::zero())
        } else {
            // r/α = (−rp/q) + (−r/q)·α.
            Eigenvalue::Algebraic(alpha.affine(&(-(r * &p) / &q), &(-r / &q)))
        }
    };
    let mut out = Vec::with_capacity(blocks.len());
    for b in blocks {
        let eig = match &b.eigenvalue {
            Eigenvalue::Rational(r) => ratio_of_rational(r),
            Eigenvalue::Algebraic(beta) => {
                if beta.minpoly != f {
                    return Err(NormalFormError::UnsupportedSpectrum(
                        "mixed irrational spectra from different fields".into(),
                    ));
                }
                if beta == &alpha {
                    Eigenvalue::Rational(qi(1))
                } else if p.is_zero() {
                    Eigenvalue::Rational(qi(-1))
                } else {
                    // β/α = (p² − q)/q + (p/q)·α.
                    Eigenvalue::Algebraic(
                        alpha.affine(&((&p * &p - &q) / &q), &(&p / &q)),
                    )
                }
            }
            other => {
                let _ = other;
                return Err(NormalFormError::UnsupportedSpectrum(
                    "complex pair mixed with real surds".into(),
                ));
            }
        };
        out.push(JordanBlock {
            eigenvalue: eig,
            size: b.size,
        });
    }
    let (blocks, _) = pick_sign(out);
    Ok(Njnf {
        blocks,
        divisor: None,
    })
}

/// Divide by the irrational s of a dominant pure-imaginary pair ±i·s.
fn normalize_by_imaginary_surd(
    blocks: Vec<JordanBlock>,
    d: &Q,
) -> Result<Njnf, NormalFormError> {
    let mut out = Vec::with_capacity(blocks.len());
    for b in blocks {
        let eig = match &b.eigenvalue {
            Eigenvalue::Rational(r) => {
                if r.is_zero() {
                    Eigenvalue::Rational(Q::zero())
                } else {
                    // r/√d: the root of x² − r²/d with the sign of r.
                    let target = &(r * r) / d;
                    let poly = vec![-target, Q::zero(), qi(1)];
                    let roots = real_roots_of_irreducible(&poly);
                    let root = if r.is_positive() {
                        roots.into_iter().last().unwrap()
                    } else {
                        roots.into_iter().next().unwrap()
                    };
                    Eigenvalue::Algebraic(root)
                }
            }
            Eigenvalue::ComplexPair { re, im_sq } => {
                if !re.is_zero() {
                    return Err(NormalFormError::UnsupportedSpectrum(
                        "pair with nonzero real part under irrational imaginary scaling".into(),
                    ));
                }
                Eigenvalue::ComplexPair {
                    re: Q::zero(),
                    im_sq: im_sq / d,
                }
            }
            _ => {
                return Err(NormalFormError::UnsupportedSpectrum(
                    "surd mixed with dominant imaginary pair".into(),
                ));
            }
        };
        out.push(JordanBlock {
            eigenvalue: eig,
            size: b.size,
        });
    }
    let (blocks, _) = pick_sign(out);
    Ok(Njnf {
        blocks,
        divisor: None,
    })
}

/// Canonicalize a spectrum generated by one irreducible cubic.
fn normalize_cubic(blocks: Vec<JordanBlock>, f: Poly) -> Result<Njnf, NormalFormError> {
    for b in &blocks {
        let ok = match &b.eigenvalue {
            Eigenvalue::Algebraic(a) => a.minpoly == f,
            Eigenvalue::CubicPair { minpoly } => minpoly == &f,
            _ => false,
        };
        if !ok {
            return Err(NormalFormError::UnsupportedSpectrum(
                "cubic spectrum mixed with other eigenvalues".into(),
            ));
        }
    }
    let a = f[2].clone();
    let bco = f[1].clone();
    let c = f[0].clone();
    if a.is_zero() && bco.is_zero() {
        // Roots of x³ = −c: ρ and ρ·(−1/2 ± i√3/2). Dividing by ρ leaves 1
        // and the primitive pair; this is already the sign-canonical choice.
        let out = blocks
            .into_iter()
            .map(|b| JordanBlock {
                eigenvalue: match &b.eigenvalue {
                    Eigenvalue::Algebraic(_) => Eigenvalue::Rational(qi(1)),
                    _ => Eigenvalue::ComplexPair {
                        re: lieclass_core::scalar::qr(-1, 2),
                        im_sq: lieclass_core::scalar::qr(3, 4),
                    },
                },
                size: b.size,
            })
            .collect::<Vec<_>>();
        let mut blocks = out;
        sort_blocks(&mut blocks);
        return Ok(Njnf {
            blocks,
            divisor: None,
        });
    }
    // Rational root-scalings are the only real scalings between rational
    // cubic spectra here; reduce the weighted coefficient vector
    // (a·t, b·t², c·t³) to its minimal model.
    let t = minimal_model_scale(&[(a, 1), (bco, 2), (c, 3)]);
    let scaled: Vec<JordanBlock> = blocks
        .into_iter()
        .map(|b| JordanBlock {
            eigenvalue: b.eigenvalue.scale(&t),
            size: b.size,
        })
        .collect();
    let (blocks, flipped) = pick_sign(scaled);
    let d = qi(1) / &t;
    Ok(Njnf {
        blocks,
        divisor: Some(if flipped { -d } else { d }),
    })
}

/// The positive rational t minimizing the weighted valuations of
/// (x₁·t^{w₁}, …) at every prime. Weighted valuations are only canonical
/// over genuine primes, so the base is built by full trial-division
/// factorization (with gcd refinement for any oversized cofactors).
fn minimal_model_scale(entries: &[(Q, u32)]) -> Q {
    let mut ints: Vec<BigInt> = Vec::new();
    for (x, _) in entries {
        if !x.is_zero() {
            ints.push(x.numer().abs());
            ints.push(x.denom().abs());
        }
    }
    let base = prime_base(&ints);
    let mut t = Q::one();
    for b in &base {
        let mut m: Option<i64> = None;
        for (x, w) in entries {
            if x.is_zero() {
                continue;
            }
            let e = valuation(x, b);
            let cand = -(e.div_euclid(*w as i64));
            m = Some(match m {
                None => cand,
                Some(old) => old.max(cand),
            });
        }
        if let Some(m) = m {
            t *= pow_q(&Q::from_integer(b.clone()), m);
        }
    }
    t
}

fn pow_q(b: &Q, e: i64) -> Q {
    let mut out = Q::one();
    for _ in 0..e.unsigned_abs() {
        out *= b;
    }
    if e < 0 {
        qi(1) / out
    } else {
        out
    }
}

fn valuation(x: &Q, b: &BigInt) -> i64 {
    let mut v = 0i64;
    let mut n = x.numer().abs();
    while (&n % b).is_zero() {
        n /= b;
        v += 1;
    }
    let mut d = x.denom().abs();
    while (&d % b).is_zero() {
        d /= b;
        v -= 1;
    }
    v
}

/// Prime factors of the inputs. Trial division handles everything the test
/// corpus produces; cofactors beyond the trial bound are reduced by perfect
/// power extraction and pairwise gcd refinement and then kept as base
/// elements.
fn prime_base(nums: &[BigInt]) -> Vec<BigInt> {
    let one = BigInt::one();
    let mut primes: Vec<BigInt> = Vec::new();
    let mut leftovers: Vec<BigInt> = Vec::new();
    for n in nums {
        let n = n.abs();
        if n <= one {
            continue;
        }
        match n.to_u64() {
            Some(small) => factor_u64(small, &mut primes, &mut leftovers),
            None => leftovers.push(n),
        }
    }
    let cofactors = coprime_base(&leftovers);
    for mut c in cofactors {
        // Strip known primes, then reduce perfect powers.
        for p in &primes {
            while (&c % p).is_zero() {
                c /= p;
            }
        }
        'reduce: loop {
            if c <= one {
                break;
            }
            for k in [2u32, 3, 5] {
                let r = c.nth_root(k);
                if r > one && num::pow(r.clone(), k as usize) == c {
                    c = r;
                    continue 'reduce;
                }
            }
            break;
        }
        if c > one && !primes.contains(&c) {
            primes.push(c);
        }
    }
    primes
}

fn factor_u64(mut n: u64, primes: &mut Vec<BigInt>, leftovers: &mut Vec<BigInt>) {
    let push = |p: u64, primes: &mut Vec<BigInt>| {
        let b = BigInt::from(p);
        if !primes.contains(&b) {
            primes.push(b);
        }
    };
    let mut d = 2u64;
    while d.saturating_mul(d) <= n && d < 2_000_000 {
        if n % d == 0 {
            push(d, primes);
            while n % d == 0 {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        if d.saturating_mul(d) > n {
            push(n, primes);
        } else {
            leftovers.push(BigInt::from(n));
        }
    }
}

/// Pairwise-coprime base over which every input factors.
fn coprime_base(nums: &[BigInt]) -> Vec<BigInt> {
    let one = BigInt::one();
    let mut base: Vec<BigInt> = Vec::new();
    let mut stack: Vec<BigInt> = nums
        .iter()
        .map(|n| n.abs())
        .filter(|n| n > &one)
        .collect();
    let mut guard = 0;
    'outer: while let Some(x) = stack.pop() {
        guard += 1;
        assert!(guard < 100_000, "factor refinement did not converge");
        if x <= one {
            continue;
        }
        for i in 0..base.len() {
            let g = num::integer::gcd(x.clone(), base[i].clone());
            if g > one {
                let s = base.remove(i);
                stack.push(&x / &g);
                stack.push(&s / &g);
                stack.push(g);
                continue 'outer;
            }
        }
        base.push(x);
    }
    base
}

/// Matrix of ad(w) restricted to an invariant subspace in its own basis.
pub fn restricted_adjoint(
    sc: &StructureConstants,
    ideal: &Subspace,
    w: &[Q],
) -> Result<Mat, NormalFormError> {
    if ideal.contains(w) {
        return Err(NormalFormError::VectorInsideIdeal);
    }
    let n = sc.dim();
    let basis = ideal.basis();
    let d = basis.len();
    let b = Mat::from_fn(n, d, |i, j| basis[j][i].clone());
    let mut out = Mat::zero(d, d);
    for (j, v) in basis.iter().enumerate() {
        let br = sc.bracket(v, w);
        let coords = b.solve(&br).ok_or(NormalFormError::NotInvariant)?;
        for (i, c) in coords.into_iter().enumerate() {
            out[(i, j)] = c;
        }
    }
    Ok(out)
}

/// Normalized Jordan data of ad(w) restricted to the ideal.
pub fn njnf(
    sc: &StructureConstants,
    ideal: &Subspace,
    w: &[Q],
) -> Result<Njnf, NormalFormError> {
    normalize(real_jordan_form(&restricted_adjoint(sc, ideal, w)?)?)
}

pub fn njnf_equivalent(a: &Njnf, b: &Njnf) -> bool {
    a == b
}

// ---------------------------------------------------------------------------
// Serialization: a list of {"eig": ..., "size": k} in canonical order.

#[derive(Serialize, Deserialize)]
struct BlockDoc {
    eig: EigDoc,
    size: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum EigDoc {
    Rat(String),
    Pair {
        re: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        im: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        im_sq: Option<String>,
    },
    Alg {
        minpoly: Vec<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        interval: Option<(String, String)>,
        #[serde(default, skip_serializing_if = "std::ops::Not::not")]
        complex_pair: bool,
    },
}

fn eig_to_doc(e: &Eigenvalue) -> EigDoc {
    match e {
        Eigenvalue::Rational(q) => EigDoc::Rat(format_q(q)),
        Eigenvalue::ComplexPair { re, im_sq } => match rational_sqrt(im_sq) {
            Some(s) => EigDoc::Pair {
                re: format_q(re),
                im: Some(format_q(&s)),
                im_sq: None,
            },
            None => EigDoc::Pair {
                re: format_q(re),
                im: None,
                im_sq: Some(format_q(im_sq)),
            },
        },
        Eigenvalue::Algebraic(a) => EigDoc::Alg {
            minpoly: a.minpoly.iter().map(format_q).collect(),
            interval: Some((format_q(&a.lo), format_q(&a.hi))),
            complex_pair: false,
        },
        Eigenvalue::CubicPair { minpoly } => EigDoc::Alg {
            minpoly: minpoly.iter().map(format_q).collect(),
            interval: None,
            complex_pair: true,
        },
    }
}

fn eig_from_doc(doc: &EigDoc) -> Result<Eigenvalue, String> {
    let parse = |s: &str| parse_q(s).map_err(|e| e.to_string());
    match doc {
        EigDoc::Rat(s) => Ok(Eigenvalue::Rational(parse(s)?)),
        EigDoc::Pair { re, im, im_sq } => {
            let re = parse(re)?;
            let im_sq = match (im, im_sq) {
                (Some(im), _) => {
                    let v = parse(im)?;
                    &v * &v
                }
                (None, Some(sq)) => parse(sq)?,
                (None, None) => return Err("pair needs im or im_sq".into()),
            };
            if !im_sq.is_positive() {
                return Err("pair imaginary part must be nonzero".into());
            }
            Ok(Eigenvalue::ComplexPair { re, im_sq })
        }
        EigDoc::Alg {
            minpoly,
            interval,
            complex_pair,
        } => {
            let poly: Poly = minpoly
                .iter()
                .map(|s| parse(s))
                .collect::<Result<_, _>>()?;
            let poly = monic(&poly);
            if *complex_pair {
                if degree(&poly) != 3 {
                    return Err("complex cubic pair needs a cubic polynomial".into());
                }
                return Ok(Eigenvalue::CubicPair { minpoly: poly });
            }
            let (lo, hi) = interval
                .as_ref()
                .ok_or("real algebraic eigenvalue needs an interval")?;
            let (lo, hi) = (parse(lo)?, parse(hi)?);
            if lo >= hi {
                return Err("interval endpoints out of order".into());
            }
            let flo = crate::poly::eval(&poly, &lo);
            let fhi = crate::poly::eval(&poly, &hi);
            if flo.is_zero() || fhi.is_zero() || (flo.is_positive() == fhi.is_positive()) {
                return Err("interval does not isolate a root".into());
            }
            Ok(Eigenvalue::Algebraic(RealAlgebraic::new(poly, lo, hi)))
        }
    }
}

impl Serialize for Njnf {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let docs: Vec<BlockDoc> = self
            .blocks
            .iter()
            .map(|b| BlockDoc {
                eig: eig_to_doc(&b.eigenvalue),
                size: b.size,
            })
            .collect();
        docs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Njnf {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let docs: Vec<BlockDoc> = Vec::deserialize(d)?;
        let mut blocks = Vec::with_capacity(docs.len());
        for doc in &docs {
            if doc.size == 0 {
                return Err(D::Error::custom("block size must be at least 1"));
            }
            blocks.push(JordanBlock {
                eigenvalue: eig_from_doc(&doc.eig).map_err(D::Error::custom)?,
                size: doc.size,
            });
        }
        sort_blocks(&mut blocks);
        Ok(Njnf {
            blocks,
            divisor: None,
        })
    }
}

impl fmt::Display for Njnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for b in &self.blocks {
            if !first {
                write!(f, " ⊕ ")?;
            }
            first = false;
            match &b.eigenvalue {
                Eigenvalue::Rational(q) => write!(f, "J({}; {})", format_q(q), b.size)?,
                Eigenvalue::ComplexPair { re, im_sq } => match rational_sqrt(im_sq) {
                    Some(s) => write!(f, "C({} ± i·{}; {})", format_q(re), format_q(&s), b.size)?,
                    None => write!(
                        f,
                        "C({} ± i·√{}; {})",
                        format_q(re),
                        format_q(im_sq),
                        b.size
                    )?,
                },
                Eigenvalue::Algebraic(a) => {
                    write!(f, "J(≈{:.4}; {})", a.approx(), b.size)?;
                }
                Eigenvalue::CubicPair { .. } => write!(f, "C(cubic pair; {})", b.size)?,
            }
        }
        if self.blocks.is_empty() {
            write!(f, "∅")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lieclass_core::scalar::qr;

    fn rat_blocks(vals: &[(i64, i64, usize)]) -> Vec<JordanBlock> {
        vals.iter()
            .map(|&(p, q, size)| JordanBlock {
                eigenvalue: Eigenvalue::Rational(qr(p, q)),
                size,
            })
            .collect()
    }

    #[test]
    fn rational_diagonal_divides_by_largest() {
        let n = normalize(rat_blocks(&[(2, 1, 1), (1, 1, 1), (1, 1, 1)])).unwrap();
        let vals: Vec<_> = n
            .blocks()
            .iter()
            .map(|b| match &b.eigenvalue {
                Eigenvalue::Rational(q) => q.clone(),
                _ => panic!(),
            })
            .collect();
        assert_eq!(vals, vec![qi(1), qr(1, 2), qr(1, 2)]);
        assert_eq!(n.divisor, Some(qi(2)));
    }

    #[test]
    fn zero_spectrum_unchanged() {
        let n = normalize(rat_blocks(&[(0, 1, 2), (0, 1, 1)])).unwrap();
        assert!(n.blocks().iter().all(|b| b.eigenvalue.is_zero()));
        assert_eq!(n.blocks()[0].size, 2);
    }

    #[test]
    fn sign_rule_prefers_positive_leading_eigenvalue() {
        // {−1, −1, 1} vs its negation {1, 1, −1}: the latter is larger.
        let n = normalize(rat_blocks(&[(-1, 1, 1), (-1, 1, 1), (1, 1, 1)])).unwrap();
        let vals: Vec<_> = n
            .blocks()
            .iter()
            .map(|b| match &b.eigenvalue {
                Eigenvalue::Rational(q) => q.clone(),
                _ => panic!(),
            })
            .collect();
        assert_eq!(vals, vec![qi(1), qi(1), qi(-1)]);
        assert_eq!(n.divisor, Some(qi(-1)));
    }

    #[test]
    fn idempotent_on_rationals() {
        let n = normalize(rat_blocks(&[(3, 1, 1), (-6, 1, 2), (0, 1, 1)])).unwrap();
        let again = normalize(n.blocks().to_vec()).unwrap();
        assert_eq!(n, again);
    }

    #[test]
    fn rescale_invariance() {
        let base = rat_blocks(&[(3, 1, 1), (1, 2, 2), (0, 1, 1)]);
        let n0 = normalize(base.clone()).unwrap();
        for (p, q) in [(-1i64, 3i64), (2, 1), (-7, 1), (7, 1), (1, 3)] {
            let c = qr(p, q);
            let scaled: Vec<JordanBlock> = base
                .iter()
                .map(|b| JordanBlock {
                    eigenvalue: b.eigenvalue.scale(&c),
                    size: b.size,
                })
                .collect();
            assert_eq!(normalize(scaled).unwrap(), n0);
        }
    }

    #[test]
    fn pure_imaginary_pair_canonicalizes_to_unit() {
        // ±i·√2 alone.
        let blocks = vec![JordanBlock {
            eigenvalue: Eigenvalue::ComplexPair {
                re: qi(0),
                im_sq: qi(2),
            },
            size: 1,
        }];
        let n = normalize(blocks).unwrap();
        assert_eq!(
            n.blocks()[0].eigenvalue,
            Eigenvalue::ComplexPair {
                re: qi(0),
                im_sq: qi(1)
            }
        );
    }

    #[test]
    fn pair_with_rational_im_divides_by_im() {
        // 3 ± 2i → 3/2 ± i.
        let blocks = vec![JordanBlock {
            eigenvalue: Eigenvalue::ComplexPair {
                re: qi(3),
                im_sq: qi(4),
            },
            size: 1,
        }];
        let n = normalize(blocks).unwrap();
        assert_eq!(
            n.blocks()[0].eigenvalue,
            Eigenvalue::ComplexPair {
                re: qr(3, 2),
                im_sq: qi(1)
            }
        );
    }

    #[test]
    fn pair_with_irrational_im_divides_by_real_part() {
        // 1 ± i√2 → 1 ± i√2 (divisor 1): real part becomes ±1.
        let blocks = vec![JordanBlock {
            eigenvalue: Eigenvalue::ComplexPair {
                re: qi(3),
                im_sq: qi(18),
            },
            size: 1,
        }];
        let n = normalize(blocks).unwrap();
        assert_eq!(
            n.blocks()[0].eigenvalue,
            Eigenvalue::ComplexPair {
                re: qi(1),
                im_sq: qi(2)
            }
        );
    }

    #[test]
    fn surd_pair_reduces_to_plus_minus_one() {
        // Eigenvalues ±√2 are scale-equivalent to ±1.
        let roots = real_roots_of_irreducible(&vec![qi(-2), qi(0), qi(1)]);
        let blocks: Vec<JordanBlock> = roots
            .into_iter()
            .map(|r| JordanBlock {
                eigenvalue: Eigenvalue::Algebraic(r),
                size: 1,
            })
            .collect();
        let n = normalize(blocks).unwrap();
        let vals: Vec<_> = n
            .blocks()
            .iter()
            .map(|b| match &b.eigenvalue {
                Eigenvalue::Rational(q) => q.clone(),
                other => panic!("expected rational, got {other:?}"),
            })
            .collect();
        assert_eq!(vals, vec![qi(1), qi(-1)]);
    }

    #[test]
    fn asymmetric_surd_pair_keeps_exact_ratio() {
        // Roots of x² − 2x − 1 are 1 ± √2; ratio is irrational.
        let m = Mat::from_rows(vec![
            vec![qi(2), qi(1)],
            vec![qi(1), qi(0)],
        ]);
        let n = normalize(real_jordan_form(&m).unwrap()).unwrap();
        assert_eq!(n.blocks().len(), 2);
        assert!(matches!(
            n.blocks()[0].eigenvalue,
            Eigenvalue::Rational(ref q) if q == &qi(1)
        ));
        assert!(matches!(n.blocks()[1].eigenvalue, Eigenvalue::Algebraic(_)));
        // Stability under rational rescaling of the matrix.
        let m3 = m.scale(&qi(-3));
        let n3 = normalize(real_jordan_form(&m3).unwrap()).unwrap();
        assert_eq!(n, n3);
    }

    #[test]
    fn cubic_power_form_becomes_unit_and_pair() {
        // Companion of x³ − 5 vs companion of x³ − 40 = (2·roots).
        let comp = |c: i64| {
            Mat::from_rows(vec![
                vec![qi(0), qi(0), qi(c)],
                vec![qi(1), qi(0), qi(0)],
                vec![qi(0), qi(1), qi(0)],
            ])
        };
        let a = normalize(real_jordan_form(&comp(5)).unwrap()).unwrap();
        let b = normalize(real_jordan_form(&comp(40)).unwrap()).unwrap();
        assert_eq!(a, b);
        assert!(a.blocks().iter().any(|blk| matches!(
            blk.eigenvalue,
            Eigenvalue::Rational(ref q) if q == &qi(1)
        )));
    }

    #[test]
    fn general_cubic_minimal_model_is_scale_invariant() {
        // x³ − 3x + 1 (three real roots); rescale roots by 2 and by −1/3.
        let comp = Mat::from_rows(vec![
            vec![qi(0), qi(0), qi(-1)],
            vec![qi(1), qi(0), qi(3)],
            vec![qi(0), qi(1), qi(0)],
        ]);
        let n0 = normalize(real_jordan_form(&comp).unwrap()).unwrap();
        for c in [qi(2), qr(-1, 3), qi(7)] {
            let scaled = comp.scale(&c);
            let n = normalize(real_jordan_form(&scaled).unwrap()).unwrap();
            assert_eq!(n, n0);
        }
    }

    #[test]
    fn serialization_round_trip() {
        let m = Mat::from_rows(vec![
            vec![qi(1), qi(1), qi(0)],
            vec![qi(-2), qi(1), qi(0)],
            vec![qi(0), qi(0), qi(3)],
        ]);
        let n = normalize(real_jordan_form(&m).unwrap()).unwrap();
        let s = serde_json::to_string(&n).unwrap();
        let back: Njnf = serde_json::from_str(&s).unwrap();
        assert_eq!(n, back);
    }

    #[test]
    fn serialization_of_surds_round_trips() {
        let m = Mat::from_rows(vec![vec![qi(2), qi(1)], vec![qi(1), qi(0)]]);
        let n = normalize(real_jordan_form(&m).unwrap()).unwrap();
        let s = serde_json::to_string(&n).unwrap();
        let back: Njnf = serde_json::from_str(&s).unwrap();
        assert_eq!(n, back);
    }

    #[test]
    fn minimal_model_examples() {
        // (a, b, c) = (0, −12, 16): t = 1/2 gives (0, −3, 2).
        let t = minimal_model_scale(&[(qi(0), 1), (qi(-12), 2), (qi(16), 3)]);
        assert_eq!(t, qr(1, 2));
        let t2 = minimal_model_scale(&[(qi(0), 1), (qi(-3), 2), (qi(2), 3)]);
        assert_eq!(t2, qi(1));
    }
}
