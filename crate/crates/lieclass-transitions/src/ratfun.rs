//! Rational functions of one variable t over the rationals, with exact
//! evaluation and exact limits at t = 0. Used to express parametric basis
//! change families and the resulting structure-constant curves.

use lieclass_core::scalar::{qi, Q};
use lieclass_normal_form::poly::{self, Poly};
use num::Zero;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    if poly::is_zero_poly(a) || poly::is_zero_poly(b) {
        return vec![];
    }
    poly::mul(a, b)
}

fn poly_add(a: &Poly, b: &Poly) -> Poly {
    let n = a.len().max(b.len());
    let mut out = vec![Q::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    poly::trim(out)
}

/// A reduced fraction of polynomials in t; the denominator is monic and
/// coprime to the numerator.
#[derive(Debug, Clone, PartialEq)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    pub fn new(num: Poly, den: Poly) -> Option<RatFun> {
        let num = poly::trim(num);
        let den = poly::trim(den);
        if poly::is_zero_poly(&den) {
            return None;
        }
        if poly::is_zero_poly(&num) {
            return Some(RatFun {
                num: vec![],
                den: vec![qi(1)],
            });
        }
        let g = poly::gcd(&num, &den);
        let (num, r1) = poly::div_rem(&num, &g);
        let (den, r2) = poly::div_rem(&den, &g);
        debug_assert!(poly::is_zero_poly(&r1) && poly::is_zero_poly(&r2));
        // Make the denominator monic.
        let lead = den.last().unwrap().clone();
        let num = poly::scale_poly(&num, &(qi(1) / &lead));
        let den = poly::scale_poly(&den, &(qi(1) / &lead));
        Some(RatFun { num, den })
    }

    pub fn from_poly(p: Poly) -> RatFun {
        RatFun::new(p, vec![qi(1)]).unwrap()
    }

    pub fn constant(q: Q) -> RatFun {
        RatFun::from_poly(vec![q])
    }

    pub fn zero() -> RatFun {
        RatFun::constant(Q::zero())
    }

    pub fn one() -> RatFun {
        RatFun::constant(qi(1))
    }

    /// The monomial t.
    pub fn t() -> RatFun {
        RatFun::from_poly(vec![Q::zero(), qi(1)])
    }

    /// 1/t.
    pub fn t_inv() -> RatFun {
        RatFun::new(vec![qi(1)], vec![Q::zero(), qi(1)]).unwrap()
    }

    pub fn is_zero(&self) -> bool {
        poly::is_zero_poly(&self.num)
    }

    pub fn add(&self, other: &RatFun) -> RatFun {
        let num = poly_add(
            &poly_mul(&self.num, &other.den),
            &poly_mul(&other.num, &self.den),
        );
        RatFun::new(num, poly_mul(&self.den, &other.den)).unwrap()
    }

    pub fn neg(&self) -> RatFun {
        RatFun {
            num: poly::neg(&self.num),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &RatFun) -> RatFun {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFun) -> RatFun {
        RatFun::new(
            poly_mul(&self.num, &other.num),
            poly_mul(&self.den, &other.den),
        )
        .unwrap()
    }

    pub fn div(&self, other: &RatFun) -> Option<RatFun> {
        if other.is_zero() {
            return None;
        }
        RatFun::new(
            poly_mul(&self.num, &other.den),
            poly_mul(&self.den, &other.num),
        )
    }

    /// Exact value at a rational t, when t is not a pole.
    pub fn eval(&self, t: &Q) -> Option<Q> {
        let d = poly::eval(&self.den, t);
        if d.is_zero() {
            return None;
        }
        Some(poly::eval(&self.num, t) / d)
    }

    /// Exact limit for t → 0⁺: finite iff the reduced denominator does not
    /// vanish at 0 (the fraction is reduced, so a vanishing denominator
    /// there is a genuine pole).
    pub fn limit_at_zero(&self) -> Option<Q> {
        self.eval(&Q::zero())
    }
}

/// Square matrix of rational functions.
pub type FMat = Vec<Vec<RatFun>>;

pub fn fmat_from_q(m: &lieclass_core::matrix::Mat) -> FMat {
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| RatFun::constant(m[(i, j)].clone()))
                .collect()
        })
        .collect()
}

pub fn fmat_mul(a: &FMat, b: &FMat) -> FMat {
    let n = a.len();
    let p = b[0].len();
    let mut out = vec![vec![RatFun::zero(); p]; n];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let mut acc = RatFun::zero();
            for (k, bk) in b.iter().enumerate() {
                acc = acc.add(&a[i][k].mul(&bk[j]));
            }
            *cell = acc;
        }
    }
    out
}

/// Inverse over the rational function field, if the determinant is nonzero
/// as a function of t.
pub fn fmat_inverse(a: &FMat) -> Option<FMat> {
    let n = a.len();
    let mut work = a.clone();
    let mut inv: FMat = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { RatFun::one() } else { RatFun::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !work[r][col].is_zero())?;
        work.swap(col, pivot);
        inv.swap(col, pivot);
        let p = work[col][col].clone();
        for j in 0..n {
            work[col][j] = work[col][j].div(&p).unwrap();
            inv[col][j] = inv[col][j].div(&p).unwrap();
        }
        for r in 0..n {
            if r == col || work[r][col].is_zero() {
                continue;
            }
            let f = work[r][col].clone();
            for j in 0..n {
                let w = work[col][j].mul(&f);
                work[r][j] = work[r][j].sub(&w);
                let v = inv[col][j].mul(&f);
                inv[r][j] = inv[r][j].sub(&v);
            }
        }
    }
    Some(inv)
}
