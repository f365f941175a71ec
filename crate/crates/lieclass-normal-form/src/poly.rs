//! Dense univariate polynomials over the exact rationals: arithmetic,
//! evaluation, gcd, rational-root extraction, Sturm sequences, and real-root
//! isolation. Coefficients are stored lowest degree first.

use lieclass_core::scalar::{qi, Q};
use num::bigint::BigInt;
use num::{One, Signed, Zero};

pub type Poly = Vec<Q>;

pub fn trim(mut p: Poly) -> Poly {
    while p.len() > 1 && p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
    p
}

pub fn degree(p: &Poly) -> usize {
    let t = p.iter().rposition(|c| !c.is_zero());
    t.unwrap_or(0)
}

pub fn is_zero_poly(p: &Poly) -> bool {
    p.iter().all(Zero::is_zero)
}

pub fn eval(p: &Poly, x: &Q) -> Q {
    let mut acc = Q::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

pub fn derivative(p: &Poly) -> Poly {
    if p.len() <= 1 {
        return vec![Q::zero()];
    }
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * qi(i as i64))
            .collect(),
    )
}

pub fn neg(p: &Poly) -> Poly {
    p.iter().map(|c| -c.clone()).collect()
}

pub fn scale_poly(p: &Poly, c: &Q) -> Poly {
    trim(p.iter().map(|x| x * c).collect())
}

pub fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Quotient and remainder of polynomial division.
pub fn div_rem(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let db = degree(b);
    assert!(!is_zero_poly(b), "division by zero polynomial");
    let mut rem = a.clone();
    let mut quo = vec![Q::zero(); a.len().max(1)];
    let lead = b[db].clone();
    while !is_zero_poly(&rem) && degree(&rem) >= db {
        let dr = degree(&rem);
        let f = &rem[dr] / &lead;
        quo[dr - db] = f.clone();
        for i in 0..=db {
            let v = &rem[dr - db + i] - &(&f * &b[i]);
            rem[dr - db + i] = v;
        }
        rem = trim(rem);
        if dr == 0 {
            break;
        }
    }
    (trim(quo), trim(rem))
}

/// Monic normalization.
pub fn monic(p: &Poly) -> Poly {
    let d = degree(p);
    let lead = p[d].clone();
    if lead.is_one() {
        return trim(p.clone());
    }
    trim(p.iter().map(|c| c / &lead).collect())
}

/// Monic gcd.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    let mut x = trim(a.clone());
    let mut y = trim(b.clone());
    while !is_zero_poly(&y) {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = r;
    }
    if is_zero_poly(&x) {
        x
    } else {
        monic(&x)
    }
}

/// Substitution p(c·x) for rescaling roots by 1/c.
pub fn compose_scale(p: &Poly, c: &Q) -> Poly {
    let mut out = Vec::with_capacity(p.len());
    let mut pw = Q::one();
    for coef in p {
        out.push(coef * &pw);
        pw *= c;
    }
    trim(out)
}

/// Substitution p(u·x + v).
pub fn compose_affine(p: &Poly, u: &Q, v: &Q) -> Poly {
    // Horner over the polynomial ring.
    let lin = vec![v.clone(), u.clone()];
    let mut acc: Poly = vec![Q::zero()];
    for c in p.iter().rev() {
        acc = mul(&acc, &lin);
        if acc.is_empty() {
            acc = vec![Q::zero()];
        }
        acc[0] += c;
    }
    trim(acc)
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![];
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            small.push(d.clone());
            large.push(&n / &d);
        }
        d += 1;
        // Guard against pathological coefficient sizes.
        if small.len() > 4096 {
            break;
        }
    }
    small.extend(large.into_iter().rev());
    small
}

/// All rational roots with multiplicities, plus the (rootless) cofactor.
pub fn rational_roots(p: &Poly) -> (Vec<(Q, usize)>, Poly) {
    let mut rem = monic(p);
    let mut roots: Vec<(Q, usize)> = Vec::new();
    // Zero roots first.
    let mut zero_mult = 0;
    while degree(&rem) >= 1 && rem[0].is_zero() {
        rem = trim(rem[1..].to_vec());
        zero_mult += 1;
    }
    if zero_mult > 0 {
        roots.push((Q::zero(), zero_mult));
    }
    if degree(&rem) == 0 {
        return (roots, rem);
    }
    // Clear denominators to an integer polynomial.
    let mut lcm = BigInt::one();
    for c in &rem {
        let d = c.denom();
        lcm = &lcm / num::integer::gcd(lcm.clone(), d.clone()) * d;
    }
    let int_coeffs: Vec<BigInt> = rem.iter().map(|c| (c * Q::from_integer(lcm.clone())).to_integer()).collect();
    let a0 = int_coeffs[0].clone();
    let an = int_coeffs[degree(&rem)].clone();
    let mut candidates: Vec<Q> = Vec::new();
    for p_div in divisors(&a0) {
        for q_div in divisors(&an) {
            let c = Q::new(p_div.clone(), q_div.clone());
            if !candidates.contains(&c) {
                candidates.push(c.clone());
            }
            let m = -c;
            if !candidates.contains(&m) {
                candidates.push(m);
            }
        }
    }
    for c in candidates {
        let mut mult = 0;
        while degree(&rem) >= 1 && eval(&rem, &c).is_zero() {
            let lin = vec![-c.clone(), Q::one()];
            let (q, r) = div_rem(&rem, &lin);
            debug_assert!(is_zero_poly(&r));
            rem = q;
            mult += 1;
        }
        if mult > 0 {
            roots.push((c, mult));
        }
    }
    (roots, rem)
}

/// Sturm chain of a squarefree polynomial.
fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![trim(p.clone()), derivative(p)];
    loop {
        let last = &chain[chain.len() - 1];
        if is_zero_poly(last) || degree(last) == 0 {
            break;
        }
        let prev = &chain[chain.len() - 2];
        let (_, r) = div_rem(prev, last);
        if is_zero_poly(&r) {
            break;
        }
        chain.push(neg(&r));
    }
    chain
}

fn sign_changes(chain: &[Poly], x: &Q) -> usize {
    let mut signs = Vec::new();
    for p in chain {
        let v = eval(p, x);
        if !v.is_zero() {
            signs.push(v > Q::zero());
        }
    }
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Cauchy bound: all real roots lie in (−b, b).
pub fn root_bound(p: &Poly) -> Q {
    let d = degree(p);
    let lead = p[d].clone();
    let mx = p[..d]
        .iter()
        .map(|c| (c / &lead).abs())
        .fold(Q::zero(), |a, b| if b > a { b } else { a });
    mx + qi(1)
}

/// Isolating intervals (lo, hi) for every real root of a squarefree
/// polynomial, each interval containing exactly one root with a sign change.
pub fn isolate_real_roots(p: &Poly) -> Vec<(Q, Q)> {
    let p = monic(p);
    if degree(&p) == 0 {
        return vec![];
    }
    let chain = sturm_chain(&p);
    let b = root_bound(&p);
    let count = |lo: &Q, hi: &Q| sign_changes(&chain, lo).saturating_sub(sign_changes(&chain, hi));
    let mut stack = vec![(-b.clone(), b.clone())];
    let mut out = Vec::new();
    while let Some((lo, hi)) = stack.pop() {
        let c = count(&lo, &hi);
        if c == 0 {
            continue;
        }
        if c == 1 {
            // Shrink until the endpoints are not roots and signs differ.
            let mut lo = lo;
            let mut hi = hi;
            loop {
                let flo = eval(&p, &lo);
                let fhi = eval(&p, &hi);
                if flo.is_zero() {
                    // Rational root; nudge the endpoint outward slightly.
                    let width = &hi - &lo;
                    lo = &lo - &(width / qi(4));
                    continue;
                }
                if fhi.is_zero() {
                    let width = &hi - &lo;
                    hi = &hi + &(width / qi(4));
                    continue;
                }
                if (flo > Q::zero()) != (fhi > Q::zero()) {
                    break;
                }
                // Sign equal: root count says one root inside, so bisect to
                // regain a sign change.
                let mid = (&lo + &hi) / qi(2);
                if count(&lo, &mid) == 1 {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            out.push((lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / qi(2);
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    out
}
