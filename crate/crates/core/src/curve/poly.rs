//! Laurent polynomials with integer coefficients, written like
//! `x^6 + y^2 + x^2*y^6` or `3*x^-1*y - 2`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::LatticePoint;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("column {column}: {message}")]
pub struct ParseError {
    /// One-based character position.
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub i: i64,
    pub j: i64,
    pub c: i64,
}

/// Nonzero terms sorted by exponent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentPolynomial {
    terms: Vec<Term>,
}

impl LaurentPolynomial {
    pub fn from_terms(terms: impl IntoIterator<Item = (LatticePoint, i64)>) -> Self {
        let mut acc: BTreeMap<LatticePoint, i64> = BTreeMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_default() += c;
        }
        let terms = acc
            .into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|(m, c)| Term { i: m.x, j: m.y, c })
            .collect();
        LaurentPolynomial { terms }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn support(&self) -> Vec<LatticePoint> {
        self.terms
            .iter()
            .map(|t| LatticePoint::new(t.i, t.j))
            .collect()
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
        }
        .polynomial()
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            let sign = if t.c < 0 {
                "-"
            } else if k > 0 {
                "+"
            } else {
                ""
            };
            write!(f, "{sign}")?;
            let mut factors = Vec::new();
            if t.c.abs() != 1 || (t.i == 0 && t.j == 0) {
                factors.push(t.c.abs().to_string());
            }
            for (var, e) in [("x", t.i), ("y", t.j)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    e => factors.push(format!("{var}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            column: self.pos + 1,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn polynomial(&mut self) -> Result<LaurentPolynomial, ParseError> {
        let mut terms = Vec::new();
        self.skip_ws();
        let mut sign = 1;
        if let Some(c @ ('+' | '-')) = self.peek() {
            sign = if c == '-' { -1 } else { 1 };
            self.pos += 1;
        }
        loop {
            self.skip_ws();
            let (m, c) = self.term()?;
            terms.push((m, sign * c));
            self.skip_ws();
            match self.peek() {
                None => break,
                Some('+') => sign = 1,
                Some('-') => sign = -1,
                Some(ch) => return self.err(format!("unexpected '{ch}'")),
            }
            self.pos += 1;
        }
        Ok(LaurentPolynomial::from_terms(terms))
    }

    fn term(&mut self) -> Result<(LatticePoint, i64), ParseError> {
        let mut coeff: i64 = 1;
        let mut exp = LatticePoint::ORIGIN;
        let mut first = true;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(d) if d.is_ascii_digit() => {
                    let n = self.integer()?;
                    coeff = coeff.checked_mul(n).ok_or_else(|| self.overflow())?;
                }
                Some(v @ ('x' | 'y')) => {
                    self.pos += 1;
                    self.skip_ws();
                    let e = if self.peek() == Some('^') {
                        self.pos += 1;
                        self.skip_ws();
                        self.signed_integer()?
                    } else {
                        1
                    };
                    if v == 'x' {
                        exp.x += e;
                    } else {
                        exp.y += e;
                    }
                }
                Some(ch) if first => return self.err(format!("expected a term, found '{ch}'")),
                None if first => return self.err("expected a term"),
                _ => return self.err("expected a factor after '*'"),
            }
            first = false;
            self.skip_ws();
            match self.peek() {
                Some('*') => self.pos += 1,
                Some(c) if c.is_ascii_digit() || c == 'x' || c == 'y' => {}
                _ => return Ok((exp, coeff)),
            }
        }
    }

    fn overflow(&self) -> ParseError {
        ParseError {
            column: self.pos + 1,
            message: "integer overflow".into(),
        }
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| ParseError {
            column: start + 1,
            message: "integer overflow".into(),
        })
    }

    fn signed_integer(&mut self) -> Result<i64, ParseError> {
        let neg = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let n = self.integer()?;
        Ok(if neg { -n } else { n })
    }
}
