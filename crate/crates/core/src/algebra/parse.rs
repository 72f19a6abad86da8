//! Shared expression grammar: `+`, `-`, `*` (or `·`, or juxtaposition), `^`
//! with non-negative integer exponents, parentheses, rational constants `p/q`.

use crate::error::{Error, Result};

use super::poly::Poly;
use super::rational::parse_rational;

/// Parses `src`, resolving identifiers through `resolve`. `expected` names the
/// accepted identifiers in error messages.
pub fn parse_expression(
    src: &str,
    expected: &str,
    resolve: impl Fn(&str) -> Option<Poly>,
) -> Result<Poly> {
    let mut p = Parser {
        resolve: &resolve,
        expected,
        chars: src.char_indices().collect(),
        pos: 0,
        len: src.len(),
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error("unexpected input"));
    }
    Ok(e)
}

struct Parser<'a> {
    resolve: &'a dyn Fn(&str) -> Option<Poly>,
    expected: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

impl Parser<'_> {
    fn byte_pos(&self) -> usize {
        self.chars.get(self.pos).map_or(self.len, |&(b, _)| b)
    }

    fn error(&self, msg: &str) -> Error {
        let found = match self.peek() {
            Some(c) => format!("{c:?}"),
            None => "end of input".to_string(),
        };
        Error::Parse {
            pos: self.byte_pos(),
            msg: format!("{msg} (found {found})"),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        self.skip_ws();
        let mut acc = match self.peek() {
            Some('-') | Some('−') => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some('+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some('-') | Some('−') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.power()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') | Some('·') => {
                    self.pos += 1;
                    acc = acc.mul(&self.power()?);
                }
                // juxtaposition, e.g. "2x1" or "(1-x1)(1-Q1)"
                Some(c) if c == '(' || c.is_ascii_alphabetic() || c == 'ζ' => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.unsigned()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn unsigned(&mut self) -> Result<u64> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let s: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        s.parse().map_err(|_| self.error("number too large"))
    }

    fn atom(&mut self) -> Result<Poly> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some('-') | Some('−') => {
                self.pos += 1;
                Ok(self.power()?.neg())
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let save = self.pos;
                if self.peek() == Some('/') {
                    self.pos += 1;
                    if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                            self.pos += 1;
                        }
                    } else {
                        self.pos = save;
                    }
                }
                let s: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
                let r = parse_rational(&s).map_err(|_| Error::Parse {
                    pos: self.chars[start].0,
                    msg: format!("invalid rational constant {s:?}"),
                })?;
                Ok(Poly::constant(r))
            }
            Some(c) if c.is_ascii_alphabetic() || c == 'ζ' => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_' || c == 'ζ')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
                match (self.resolve)(&name) {
                    Some(v) => Ok(v),
                    None => Err(Error::Parse {
                        pos: self.chars[start].0,
                        msg: format!("unknown variable {name:?} (expected {})", self.expected),
                    }),
                }
            }
            _ => Err(self.error("expected a number, variable or '('")),
        }
    }
}
