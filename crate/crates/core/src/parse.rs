//! Recursive-descent parser for polynomial expressions in `t`.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' uint)?
//! base     := rational | 't' | '(' expr ')'
//! rational := int ('/' uint)?
//! ```
//!
//! `int` may carry a leading `-`. Whitespace between tokens is ignored.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::Q;

pub const DEFAULT_MAX_DEGREE: usize = 64;

/// Parses with the default degree cap.
pub fn parse_poly(text: &str) -> Result<Polynomial> {
    parse_poly_with_limit(text, DEFAULT_MAX_DEGREE)
}

pub fn parse_poly_with_limit(text: &str, max_degree: usize) -> Result<Polynomial> {
    let mut parser = Parser { src: text.as_bytes(), pos: 0, max_degree };
    let poly = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.error("unexpected input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    max_degree: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Syntax { offset: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn check_degree(&self, p: &Polynomial) -> Result<()> {
        match p.degree() {
            Some(d) if d > self.max_degree => Err(Error::DegreeLimit { degree: d, limit: self.max_degree }),
            _ => Ok(()),
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
            self.check_degree(&acc)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let start = self.pos;
        let e = self.uint()?;
        let e = usize::try_from(&e).ok().filter(|&e| e <= self.max_degree).ok_or_else(|| {
            self.pos = start;
            Error::DegreeLimit { degree: usize::try_from(&e).unwrap_or(usize::MAX), limit: self.max_degree }
        })?;
        if let Some(d) = base.degree() {
            if d.saturating_mul(e) > self.max_degree {
                return Err(Error::DegreeLimit { degree: d.saturating_mul(e), limit: self.max_degree });
            }
        }
        Ok(base.pow(e))
    }

    fn base(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b't') => {
                self.pos += 1;
                Ok(Polynomial::t())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'-') | Some(b'0'..=b'9') => self.rational().map(Polynomial::constant),
            Some(_) => Err(self.error("expected a number, 't' or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn rational(&mut self) -> Result<Q> {
        let negative = self.src.get(self.pos) == Some(&b'-');
        if negative {
            self.pos += 1;
        }
        let num = self.digits()?;
        let num = if negative { -num } else { num };
        if self.peek() != Some(b'/') {
            return Ok(Q::from_integer(num));
        }
        self.pos += 1;
        let start = self.peek().map(|_| self.pos).unwrap_or(self.pos);
        let den = self.uint()?;
        if den.is_zero() {
            self.pos = start;
            return Err(self.error("zero denominator"));
        }
        Ok(Q::new(num, den))
    }

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        self.digits()
    }

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("ascii digits parse"))
    }
}
