//! Recursive-descent parser for the textual scalar format, e.g.
//! `(1 - q*t^3)/(1 - q*t)`. The grammar is ordinary arithmetic over the
//! field, so any printable scalar parses back to the same value.

use super::{Scalar, TScalar};
use crate::{Error, Result};
use num::BigInt;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Q,
    T,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
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
            'q' => {
                out.push(Tok::Q);
                i += 1;
            }
            't' => {
                out.push(Tok::T);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v: BigInt = s[start..i]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad integer in `{}`", s)))?;
                out.push(Tok::Int(v));
            }
            _ => return Err(Error::Parse(format!("unexpected character `{}` in `{}`", c, s))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    allow_q: bool,
}

impl Parser {
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

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.next();
                let t = self.term()?;
                -&t
            }
            Some(Tok::Plus) => {
                self.next();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.next();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.next();
                    acc = &acc * &self.factor()?;
                }
                Some(Tok::Slash) => {
                    self.next();
                    let rhs = self.factor()?;
                    acc = acc.checked_div(&rhs)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Scalar> {
        let mut neg = false;
        while let Some(Tok::Minus) = self.peek() {
            self.next();
            neg = !neg;
        }
        let base = self.atom()?;
        let mut out = base;
        if let Some(Tok::Caret) = self.peek() {
            self.next();
            let mut eneg = false;
            if let Some(Tok::Minus) = self.peek() {
                self.next();
                eneg = true;
            }
            match self.next() {
                Some(Tok::Int(v)) => {
                    let e: i32 = v
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    out = out.pow(if eneg { -e } else { e });
                }
                _ => return Err(Error::Parse("expected integer exponent after ^".into())),
            }
        }
        Ok(if neg { -&out } else { out })
    }

    fn atom(&mut self) -> Result<Scalar> {
        match self.next() {
            Some(Tok::Int(v)) => Ok(Scalar::from_poly(super::QtPoly::constant(v))),
            Some(Tok::Q) if self.allow_q => Ok(Scalar::q()),
            Some(Tok::Q) => Err(Error::Parse("variable q not allowed here".into())),
            Some(Tok::T) => Ok(Scalar::t()),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(Error::Parse("missing closing parenthesis".into())),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {:?}", other))),
        }
    }
}

pub(super) fn parse_scalar(s: &str) -> Result<Scalar> {
    let toks = lex(s)?;
    let mut p = Parser {
        toks,
        pos: 0,
        allow_q: true,
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in `{}`", s)));
    }
    Ok(e)
}

pub(super) fn parse_tscalar(s: &str) -> Result<TScalar> {
    let toks = lex(s)?;
    let mut p = Parser {
        toks,
        pos: 0,
        allow_q: false,
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in `{}`", s)));
    }
    e.substitute_q(0).map_err(|_| Error::Parse("q leaked into t-scalar".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_negative_exponents() {
        let a = parse_scalar("q*t^-2").unwrap();
        assert_eq!(a, Scalar::monomial(1, -2));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_scalar("q +").is_err());
        assert!(parse_scalar("x").is_err());
        assert!(parse_scalar("(1").is_err());
    }

    #[test]
    fn tscalar_rejects_q() {
        assert!(parse_tscalar("1 - q").is_err());
        assert!(parse_tscalar("(1 - t^2)/(1 + t)").is_ok());
    }
}
