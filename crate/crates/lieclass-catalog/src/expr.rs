//! Tiny exact-rational expression language used by the bundled class data:
//! literals like `-3/2`, parameter names, `+ - * /`, unary minus and
//! parentheses, plus comparison strings such as `1+a+b == 0` for constraints.

use lieclass_core::scalar::Q;
use num::{BigInt, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprError {
    UnknownName(String),
    Syntax(String),
    DivisionByZero,
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprError::UnknownName(n) => write!(f, "unknown name `{n}` in expression"),
            ExprError::Syntax(s) => write!(f, "bad expression: {s}"),
            ExprError::DivisionByZero => write!(f, "division by zero in expression"),
        }
    }
}

impl std::error::Error for ExprError {}

pub type Env = BTreeMap<String, Q>;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(Q),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<Tok>, ExprError> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
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
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let n: BigInt = digits
                    .parse()
                    .map_err(|_| ExprError::Syntax(format!("bad number `{digits}`")))?;
                out.push(Tok::Num(Q::from_integer(n)));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Tok::Name(chars[start..i].iter().collect()));
            }
            other => {
                return Err(ExprError::Syntax(format!("unexpected character `{other}`")));
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
    env: &'a Env,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Q, ExprError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc += self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc -= self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Q, ExprError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc *= self.factor()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let d = self.factor()?;
                    if d.is_zero() {
                        return Err(ExprError::DivisionByZero);
                    }
                    acc /= d;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Q, ExprError> {
        match self.next() {
            Some(Tok::Minus) => Ok(-self.factor()?),
            Some(Tok::Num(q)) => Ok(q),
            Some(Tok::Name(n)) => self
                .env
                .get(&n)
                .cloned()
                .ok_or(ExprError::UnknownName(n)),
            Some(Tok::LParen) => {
                let v = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(v),
                    _ => Err(ExprError::Syntax("missing `)`".into())),
                }
            }
            other => Err(ExprError::Syntax(format!("unexpected token {other:?}"))),
        }
    }
}

/// Evaluate an arithmetic expression over the given parameter bindings.
pub fn eval_expr(src: &str, env: &Env) -> Result<Q, ExprError> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        env,
    };
    let v = p.expr()?;
    if p.pos != toks.len() {
        return Err(ExprError::Syntax(format!("trailing input in `{src}`")));
    }
    Ok(v)
}

/// Evaluate a comparison of two arithmetic expressions, e.g. `a+2*b == 0`.
pub fn eval_constraint(src: &str, env: &Env) -> Result<bool, ExprError> {
    for op in ["<=", ">=", "==", "!=", "<", ">"] {
        if let Some(idx) = src.find(op) {
            let lhs = eval_expr(&src[..idx], env)?;
            let rhs = eval_expr(&src[idx + op.len()..], env)?;
            return Ok(match op {
                "<=" => lhs <= rhs,
                ">=" => lhs >= rhs,
                "==" => lhs == rhs,
                "!=" => lhs != rhs,
                "<" => lhs < rhs,
                ">" => lhs > rhs,
                _ => unreachable!(),
            });
        }
    }
    Err(ExprError::Syntax(format!(
        "no comparison operator in `{src}`"
    )))
}
