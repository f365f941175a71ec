//! Exact rational scalars used throughout the workspace.
//!
//! Every tensor entry is an arbitrary-precision rational in canonical form
//! (reduced, positive denominator). Floating approximations are derived on
//! demand and never stored.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::str::FromStr;

/// Canonical exact rational scalar.
pub type Q = BigRational;

/// Rational from an integer.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Rational from a numerator/denominator pair.
///
/// Panics when `d == 0`.
pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Error produced when a rational string cannot be parsed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed rational literal {0:?}")]
pub struct ParseScalarError(pub String);

/// Parses `"p"` or `"p/q"` with optional sign into a canonical rational.
pub fn parse_q(s: &str) -> Result<Q, ParseScalarError> {
    let s = s.trim();
    let err = || ParseScalarError(s.to_string());
    match s.split_once('/') {
        None => BigInt::from_str(s).map(Q::from_integer).map_err(|_| err()),
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| err())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| err())?;
            if q.is_zero() {
                return Err(err());
            }
            Ok(Q::new(p, q))
        }
    }
}

/// Renders a rational as `"p"` for integers and `"p/q"` otherwise.
pub fn format_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Approximate floating view of a rational; derived, never stored.
pub fn approx_q(x: &Q) -> f64 {
    let n = x.numer();
    let d = x.denom();
    // Scale down big operands so both fit in f64 range.
    let nb = n.bits() as i64;
    let db = d.bits() as i64;
    let shift = (nb.max(db) - 500).max(0) as u64;
    let nf = to_f64(&(n >> shift));
    let df = to_f64(&(d >> shift));
    nf / df
}

fn to_f64(x: &BigInt) -> f64 {
    // Digits come least-significant first; accumulate from the top.
    let (_, digits) = x.to_u64_digits();
    let mut out = 0.0f64;
    for d in digits.iter().rev() {
        out = out * 2f64.powi(64) + *d as f64;
    }
    if x.is_negative() {
        -out
    } else {
        out
    }
}
