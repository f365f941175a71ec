//! Textual contraction-family specifications: either `iw:m` (keep the first
//! m basis directions, crush the rest), optionally followed by a constant
//! pre-change of basis, or an explicit square matrix of rational functions
//! of `t` given as a JSON array of arrays.

use crate::CliError;
use lieclass_core::matrix::Mat;
use lieclass_core::scalar::{parse_q, qi, Q};
use lieclass_core::tensor::BasisChange;
use lieclass_transitions::ratfun::{FMat, RatFun};
use lieclass_transitions::{ContractionFamily, TransitionError};

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Parse a family specification for an algebra of the given dimension and
/// enforce its well-formedness (invertibility is sampled at t = 1, 1/2, 1/4).
pub fn parse_contraction_spec(text: &str, dim: usize) -> Result<ContractionFamily, CliError> {
    let text = text.trim();
    let fam = if let Some(rest) = text.strip_prefix("iw:") {
        let (m_part, basis_part) = match rest.split_once(':') {
            None => (rest, None),
            Some((m, b)) => (m, Some(b)),
        };
        let m: usize = m_part
            .trim()
            .parse()
            .map_err(|_| usage(format!("iw split size `{m_part}` is not a positive integer")))?;
        let basis = match basis_part {
            None => BasisChange::identity(dim),
            Some(b) => {
                let rows = parse_rational_matrix(b)?;
                if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
                    return Err(usage(format!(
                        "basis matrix must be {dim}x{dim} for this algebra"
                    )));
                }
                // Rows are the new basis vectors; columns of the change
                // matrix are the new basis vectors in old coordinates.
                let mat = Mat::from_fn(dim, dim, |i, j| rows[j][i].clone());
                BasisChange::new(mat)
                    .map_err(|_| CliError::Domain("basis matrix is singular".into()))?
            }
        };
        ContractionFamily::InonuWigner { basis, m }
    } else {
        let entries = parse_function_matrix(text)?;
        if entries.len() != dim || entries.iter().any(|r| r.len() != dim) {
            return Err(usage(format!(
                "family matrix must be {dim}x{dim} for this algebra"
            )));
        }
        ContractionFamily::General { entries }
    };
    fam.check(dim).map_err(|e| match e {
        TransitionError::BadSplit { .. } | TransitionError::DimensionMismatch { .. } => {
            usage(e.to_string())
        }
        other => CliError::Domain(other.to_string()),
    })?;
    Ok(fam)
}

fn parse_rational_matrix(text: &str) -> Result<Vec<Vec<Q>>, CliError> {
    let v: serde_json::Value = serde_json::from_str(text.trim())
        .map_err(|e| usage(format!("matrix is not valid JSON: {e}")))?;
    let rows = v
        .as_array()
        .ok_or_else(|| usage("matrix must be an array of rows"))?;
    rows.iter()
        .map(|row| {
            let cells = row
                .as_array()
                .ok_or_else(|| usage("matrix rows must be arrays"))?;
            cells.iter().map(rational_cell).collect()
        })
        .collect()
}

fn rational_cell(v: &serde_json::Value) -> Result<Q, CliError> {
    match v {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(|i| qi(i))
            .ok_or_else(|| usage(format!("entry {n} is not an exact integer"))),
        serde_json::Value::String(s) => {
            parse_q(s).map_err(|e| usage(format!("entry `{s}`: {e}")))
        }
        other => Err(usage(format!("entry {other} must be a number or string"))),
    }
}

fn parse_function_matrix(text: &str) -> Result<FMat, CliError> {
    let v: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| usage(format!("family matrix is not valid JSON: {e}")))?;
    let rows = v
        .as_array()
        .ok_or_else(|| usage("family matrix must be an array of rows"))?;
    rows.iter()
        .map(|row| {
            let cells = row
                .as_array()
                .ok_or_else(|| usage("family matrix rows must be arrays"))?;
            cells
                .iter()
                .map(|cell| match cell {
                    serde_json::Value::Number(_) | serde_json::Value::String(_) => {
                        let s = match cell {
                            serde_json::Value::String(s) => s.clone(),
                            other => other.to_string(),
                        };
                        parse_ratfun(&s)
                            .map_err(|e| usage(format!("entry `{s}`: {e}")))
                    }
                    other => Err(usage(format!("entry {other} must be a number or string"))),
                })
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Q),
    T,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<Tok>, String> {
    let mut out = Vec::new();
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' => i += 1,
            't' => {
                out.push(Tok::T);
                i += 1;
            }
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                out.push(Tok::Star);
                i += 1;
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let q = parse_q(&s[start..i]).map_err(|e| e.to_string())?;
                out.push(Tok::Num(q));
            }
            other => return Err(format!("unexpected character `{other}`")),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RatFun, String> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                acc = acc.add(&self.term()?);
            } else if self.eat(&Tok::Minus) {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFun, String> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(&Tok::Star) {
                acc = acc.mul(&self.factor()?);
            } else if self.eat(&Tok::Slash) {
                let d = self.factor()?;
                acc = acc
                    .div(&d)
                    .ok_or_else(|| "division by the zero function".to_string())?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<RatFun, String> {
        if self.eat(&Tok::Minus) {
            return Ok(self.factor()?.neg());
        }
        let base = self.atom()?;
        if self.eat(&Tok::Caret) {
            let e = match self.peek().cloned() {
                Some(Tok::Num(q)) if q.is_integer() && q >= qi(0) => {
                    self.pos += 1;
                    q.to_integer()
                }
                _ => return Err("exponent must be a nonnegative integer".into()),
            };
            let mut acc = RatFun::one();
            let mut k: num::BigInt = e;
            while k > num::BigInt::from(0) {
                acc = acc.mul(&base);
                k -= 1;
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatFun, String> {
        match self.peek().cloned() {
            Some(Tok::Num(q)) => {
                self.pos += 1;
                Ok(RatFun::constant(q))
            }
            Some(Tok::T) => {
                self.pos += 1;
                Ok(RatFun::t())
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return Err("missing closing parenthesis".into());
                }
                Ok(inner)
            }
            other => Err(format!("unexpected token {other:?}")),
        }
    }
}

/// Parse one rational-function entry: sums, differences, products, quotients
/// and nonnegative powers of integers and `t`.
pub fn parse_ratfun(s: &str) -> Result<RatFun, String> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err("empty entry".into());
    }
    let mut p = Parser { toks, pos: 0 };
    let f = p.expr()?;
    if p.pos != p.toks.len() {
        return Err("trailing input after expression".into());
    }
    Ok(f)
}
