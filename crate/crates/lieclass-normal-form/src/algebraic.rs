//! Exact real algebraic numbers represented by a monic rational minimal
//! polynomial together with an isolating interval whose endpoints see a sign
//! change. All comparisons refine intervals until the answer is certain; no
//! floating arithmetic is involved.

use crate::poly::{
    compose_affine, degree, eval, is_zero_poly, monic, Poly,
};
use lieclass_core::scalar::{qi, Q};
use num::{Signed, Zero};
use std::cmp::Ordering;

/// A real root of a monic irreducible rational polynomial of degree ≥ 2,
/// pinned down by an open interval (lo, hi) on which the polynomial changes
/// sign and contains exactly one root.
#[derive(Debug, Clone)]
pub struct RealAlgebraic {
    pub minpoly: Poly,
    pub lo: Q,
    pub hi: Q,
}

impl RealAlgebraic {
    pub fn new(minpoly: Poly, lo: Q, hi: Q) -> Self {
        let minpoly = monic(&minpoly);
        debug_assert!(degree(&minpoly) >= 2);
        debug_assert!(lo < hi);
        debug_assert!(!eval(&minpoly, &lo).is_zero());
        debug_assert!(!eval(&minpoly, &hi).is_zero());
        debug_assert!(
            (eval(&minpoly, &lo) > Q::zero()) != (eval(&minpoly, &hi) > Q::zero())
        );
        RealAlgebraic { minpoly, lo, hi }
    }

    /// Halve the isolating interval, keeping the sign change.
    pub fn refine(&mut self) {
        let mid = (&self.lo + &self.hi) / qi(2);
        let fm = eval(&self.minpoly, &mid);
        if fm.is_zero() {
            // The midpoint cannot be a root of an irreducible polynomial of
            // degree ≥ 2, but guard anyway by shrinking asymmetrically.
            let q = (&self.lo + &mid) / qi(2);
            if (eval(&self.minpoly, &self.lo) > Q::zero())
                != (eval(&self.minpoly, &q) > Q::zero())
            {
                self.hi = q;
            } else {
                self.lo = q;
            }
            return;
        }
        let flo = eval(&self.minpoly, &self.lo);
        if (flo > Q::zero()) != (fm > Q::zero()) {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    /// Sign of the root: refines until zero is outside the interval.
    pub fn sign(&self) -> Ordering {
        let mut me = self.clone();
        loop {
            if me.lo >= Q::zero() {
                return Ordering::Greater;
            }
            if me.hi <= Q::zero() {
                return Ordering::Less;
            }
            me.refine();
        }
    }

    /// Compare the root against a rational value.
    pub fn cmp_rational(&self, q: &Q) -> Ordering {
        // The root is never rational, so a single sign evaluation splits the
        // interval at q and decides.
        if q <= &self.lo {
            return Ordering::Greater;
        }
        if q >= &self.hi {
            return Ordering::Less;
        }
        let flo = eval(&self.minpoly, &self.lo);
        let fq = eval(&self.minpoly, q);
        debug_assert!(!fq.is_zero());
        if (flo > Q::zero()) != (fq > Q::zero()) {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// Exact comparison of two algebraic reals.
    pub fn cmp(&self, other: &RealAlgebraic) -> Ordering {
        let mut a = self.clone();
        let mut b = other.clone();
        let same_poly = a.minpoly == b.minpoly;
        loop {
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            if same_poly {
                // Overlapping isolating intervals of the same polynomial:
                // equal iff the overlap still contains a root.
                let lo = if a.lo > b.lo { a.lo.clone() } else { b.lo.clone() };
                let hi = if a.hi < b.hi { a.hi.clone() } else { b.hi.clone() };
                if lo < hi && count_roots(&a.minpoly, &lo, &hi) == 1 {
                    return Ordering::Equal;
                }
            }
            a.refine();
            b.refine();
        }
    }

    /// The root of u + v·self, as a fresh algebraic number (v ≠ 0).
    pub fn affine(&self, u: &Q, v: &Q) -> RealAlgebraic {
        assert!(!v.is_zero());
        let inv = qi(1) / v;
        let shift = -(u / v);
        let p = monic(&compose_affine(&self.minpoly, &inv, &shift));
        let (mut lo, mut hi) = (u + v * &self.lo, u + v * &self.hi);
        if lo > hi {
            std::mem::swap(&mut lo, &mut hi);
        }
        RealAlgebraic::new(p, lo, hi)
    }

    pub fn negate(&self) -> RealAlgebraic {
        self.affine(&Q::zero(), &qi(-1))
    }

    /// The root scaled by a nonzero rational.
    pub fn scale(&self, c: &Q) -> RealAlgebraic {
        self.affine(&Q::zero(), c)
    }

    /// Compare |self| with |other|.
    pub fn abs_cmp(&self, other: &RealAlgebraic) -> Ordering {
        self.abs_value().cmp(&other.abs_value())
    }

    /// Compare |self| with a nonnegative rational.
    pub fn abs_cmp_rational(&self, q: &Q) -> Ordering {
        self.abs_value().cmp_rational(&q.abs())
    }

    fn abs_value(&self) -> RealAlgebraic {
        match self.sign() {
            Ordering::Less => self.negate(),
            _ => self.clone(),
        }
    }

    /// Decimal approximation for display only.
    pub fn approx(&self) -> f64 {
        let mut me = self.clone();
        for _ in 0..80 {
            me.refine();
        }
        let mid = (&me.lo + &me.hi) / qi(2);
        lieclass_core::scalar::approx_q(&mid)
    }
}

impl PartialEq for RealAlgebraic {
    fn eq(&self, other: &Self) -> bool {
        self.minpoly == other.minpoly && self.cmp(other) == Ordering::Equal
    }
}

impl Eq for RealAlgebraic {}

/// Number of distinct real roots of `p` in the open interval (lo, hi),
/// counted by a Sturm chain. `p` must be squarefree with no root at either
/// endpoint.
pub fn count_roots(p: &Poly, lo: &Q, hi: &Q) -> usize {
    let chain = sturm(p);
    changes(&chain, lo).saturating_sub(changes(&chain, hi))
}

fn sturm(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.clone(), crate::poly::derivative(p)];
    loop {
        let last = &chain[chain.len() - 1];
        if is_zero_poly(last) || degree(last) == 0 {
            break;
        }
        let prev = &chain[chain.len() - 2];
        let (_, r) = crate::poly::div_rem(prev, last);
        if is_zero_poly(&r) {
            break;
        }
        chain.push(crate::poly::neg(&r));
    }
    chain
}

fn changes(chain: &[Poly], x: &Q) -> usize {
    let mut signs = Vec::new();
    for p in chain {
        let v = eval(p, x);
        if !v.is_zero() {
            signs.push(v > Q::zero());
        }
    }
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Build the algebraic numbers for every real root of an irreducible
/// polynomial, sorted ascending.
pub fn real_roots_of_irreducible(p: &Poly) -> Vec<RealAlgebraic> {
    crate::poly::isolate_real_roots(p)
        .into_iter()
        .map(|(lo, hi)| RealAlgebraic::new(monic(p), lo, hi))
        .collect()
}

/// True when the rational is the square of another rational; returns the
/// nonnegative square root if so.
pub fn rational_sqrt(q: &Q) -> Option<Q> {
    if q.is_negative() {
        return None;
    }
    let ns = q.numer().sqrt();
    let ds = q.denom().sqrt();
    if &(&ns * &ns) == q.numer() && &(&ds * &ds) == q.denom() {
        Some(Q::new(ns, ds))
    } else {
        None
    }
}

/// Exact comparable real: rational or algebraic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactReal {
    Rat(Q),
    Alg(RealAlgebraic),
}

impl ExactReal {
    pub fn compare(&self, other: &ExactReal) -> Ordering {
        match (self, other) {
            (ExactReal::Rat(a), ExactReal::Rat(b)) => a.cmp(b),
            (ExactReal::Rat(a), ExactReal::Alg(b)) => b.cmp_rational(a).reverse(),
            (ExactReal::Alg(a), ExactReal::Rat(b)) => a.cmp_rational(b),
            (ExactReal::Alg(a), ExactReal::Alg(b)) => a.cmp(b),
        }
    }
}
