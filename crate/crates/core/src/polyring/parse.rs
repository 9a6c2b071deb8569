//! Expression grammar:
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' INT]
//! atom   := INT ['/' INT] | IDENT | '(' expr ')'
//! IDENT  := [a-z][a-z0-9_]*
//! ```
//!
//! A `p/q` literal is a single atom, so `2/3^2` is `(2/3)^2`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use super::polynomial::{Polynomial, Ring};
use super::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown variable `{name}` at offset {offset}")]
    UnknownVariable { name: String, offset: usize },
    #[error("zero denominator at offset {offset}")]
    ZeroDenominator { offset: usize },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. }
            | ParseError::UnknownVariable { offset, .. }
            | ParseError::ZeroDenominator { offset } => *offset,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(text[start..i].parse().unwrap()), start));
                continue;
            }
            b'a'..=b'z' => {
                while i < bytes.len()
                    && (bytes[i].is_ascii_lowercase() || bytes[i].is_ascii_digit() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap();
                return Err(ParseError::Syntax { offset: start, message: format!("unexpected character `{ch}`") });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

/// Variable names in order of first appearance.
pub fn scan_variables(text: &str) -> Result<Vec<String>, ParseError> {
    let mut names: Vec<String> = Vec::new();
    for (tok, _) in tokenize(text)? {
        if let Tok::Ident(name) = tok {
            if !names.contains(&name) {
                names.push(name);
            }
        }
    }
    Ok(names)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    ring: &'a Arc<Ring>,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn syntax<T>(&self, message: &str) -> Result<T, ParseError> {
        Err(ParseError::Syntax { offset: self.offset(), message: message.to_string() })
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let negate = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        match self.peek() {
            Tok::Int(_) | Tok::Ident(_) | Tok::LParen => self.syntax("expected operator (explicit `*` required)"),
            _ => Ok(acc),
        }
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        match self.bump() {
            (Tok::Int(k), off) => {
                let k: u32 = k.try_into().map_err(|_| ParseError::Syntax {
                    offset: off,
                    message: "exponent too large".into(),
                })?;
                Ok(base.pow(k))
            }
            (_, off) => Err(ParseError::Syntax { offset: off, message: "expected non-negative integer exponent".into() }),
        }
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        match self.bump() {
            (Tok::Int(n), _) => {
                if *self.peek() == Tok::Slash {
                    self.bump();
                    match self.bump() {
                        (Tok::Int(d), off) => {
                            if d.is_zero() {
                                return Err(ParseError::ZeroDenominator { offset: off });
                            }
                            Ok(Polynomial::constant(self.ring, Rational::new(n, d)))
                        }
                        (_, off) => Err(ParseError::Syntax { offset: off, message: "expected integer denominator".into() }),
                    }
                } else {
                    Ok(Polynomial::constant(self.ring, Rational::from_integer(n)))
                }
            }
            (Tok::Ident(name), off) => match self.ring.index_of(&name) {
                Some(i) => Ok(Polynomial::var(self.ring, i)),
                None => Err(ParseError::UnknownVariable { name, offset: off }),
            },
            (Tok::LParen, _) => {
                let inner = self.expr()?;
                match self.bump() {
                    (Tok::RParen, _) => Ok(inner),
                    (_, off) => Err(ParseError::Syntax { offset: off, message: "expected `)`".into() }),
                }
            }
            (Tok::End, off) => Err(ParseError::Syntax { offset: off, message: "unexpected end of input".into() }),
            (_, off) => Err(ParseError::Syntax { offset: off, message: "expected number, variable or `(`".into() }),
        }
    }
}

/// Parses `text` into a polynomial over `ring`.
pub fn parse_expression(text: &str, ring: &Arc<Ring>) -> Result<Polynomial, ParseError> {
    let mut p = Parser { toks: tokenize(text)?, pos: 0, ring };
    let poly = p.expr()?;
    match p.peek() {
        Tok::End => Ok(poly),
        _ => p.syntax("unexpected token"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::monomial::Monomial;
    use crate::polyring::rational::{int, rat};

    #[test]
    fn fermat_cubic() {
        let r = Ring::new(["x", "y", "z"]);
        let f = parse_expression("x^3+y^3+z^3", &r).unwrap();
        assert_eq!(f.len(), 3);
        assert!(f.terms().all(|(_, c)| *c == int(1)));
    }

    #[test]
    fn rational_literal() {
        let r = Ring::new(["x", "y"]);
        let p = parse_expression("2/3*x*y - y^2", &r).unwrap();
        assert_eq!(p.coefficient(&Monomial::new(vec![1, 1])), rat(2, 3));
        assert_eq!(p.coefficient(&Monomial::new(vec![0, 2])), int(-1));
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn errors_carry_offsets() {
        let r = Ring::new(["x"]);
        let e = parse_expression("x^^2", &r).unwrap_err();
        assert!(matches!(e, ParseError::Syntax { offset: 2, .. }), "{e:?}");
        let e = parse_expression("x + w", &r).unwrap_err();
        assert_eq!(e, ParseError::UnknownVariable { name: "w".into(), offset: 4 });
        assert!(matches!(parse_expression("2x", &r), Err(ParseError::Syntax { offset: 1, .. })));
        assert!(matches!(parse_expression("1/0", &r), Err(ParseError::ZeroDenominator { offset: 2 })));
        assert!(matches!(parse_expression("(x", &r), Err(ParseError::Syntax { offset: 2, .. })));
        assert!(matches!(parse_expression("X", &r), Err(ParseError::Syntax { offset: 0, .. })));
    }

    #[test]
    fn parentheses_and_signs() {
        let r = Ring::new(["x", "y", "z"]);
        let p = parse_expression("-x*(y^3+z^3) + 12*x^4", &r).unwrap();
        assert_eq!(p.to_string(), "12*x^4 - x*y^3 - x*z^3");
    }

    #[test]
    fn variable_scan() {
        assert_eq!(scan_variables("y^2 + x*y + x2").unwrap(), vec!["y", "x", "x2"]);
    }
}
