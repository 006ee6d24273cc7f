//! Set-expression text form: `[lo,hi] U {x} U ...`.
//!
//! ```text
//! set   := piece ('U' piece)*
//! piece := '[' rat ',' rat ']' | '{' rat '}'
//! rat   := integer ('/' positive-integer)?
//! ```
//! Whitespace is ignored everywhere.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::rational::Rational;
use crate::set::{CompactSet, Piece, SetError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("parse error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error(transparent)]
    Set(#[from] SetError),
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn fail<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => self.fail(format!("expected `{}`, found `{}`", c as char, x as char)),
            None => self.fail(format!("expected `{}`, found end of input", c as char)),
        }
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail("expected digits");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(BigInt::from_str(s).expect("digit string"))
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let neg = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let num = self.digits()?;
        let num = if neg { -num } else { num };
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let den_pos = self.pos;
            let den = self.digits()?;
            if den.is_zero() {
                return Err(ParseError::Syntax {
                    pos: den_pos,
                    msg: "zero denominator".into(),
                });
            }
            return Ok(Rational::new(num, den));
        }
        Ok(Rational::from_integer(num))
    }

    fn piece(&mut self) -> Result<Piece, ParseError> {
        match self.peek() {
            Some(b'[') => {
                self.pos += 1;
                let lo = self.rational()?;
                self.expect(b',')?;
                let hi = self.rational()?;
                self.expect(b']')?;
                Ok(Piece::new(lo, hi))
            }
            Some(b'{') => {
                self.pos += 1;
                let x = self.rational()?;
                self.expect(b'}')?;
                Ok(Piece::point(x))
            }
            Some(c) => self.fail(format!("expected `[` or `{{`, found `{}`", c as char)),
            None => self.fail("expected a piece, found end of input"),
        }
    }
}

pub fn parse_set_expr(text: &str) -> Result<CompactSet, ParseError> {
    let mut cur = Cursor {
        src: text.as_bytes(),
        pos: 0,
    };
    if cur.peek().is_none() {
        return Err(SetError::EmptySet.into());
    }
    let mut pieces = vec![cur.piece()?];
    while let Some(c) = cur.peek() {
        if c != b'U' {
            return cur.fail(format!("expected `U`, found `{}`", c as char));
        }
        cur.pos += 1;
        pieces.push(cur.piece()?);
    }
    Ok(CompactSet::canonicalize(pieces)?)
}

impl FromStr for CompactSet {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_set_expr(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn examples() {
        let s = parse_set_expr("[0,1] U {2} U [3,4]").unwrap();
        assert_eq!(s.pieces().len(), 3);
        let s = parse_set_expr("[0, 1/2]").unwrap();
        assert_eq!(s.pieces(), &[Piece::new(int(0), rat(1, 2))]);
        assert!(matches!(
            parse_set_expr("[1,0]"),
            Err(ParseError::Set(SetError::BadInterval { .. }))
        ));
    }

    #[test]
    fn whitespace_and_signs() {
        let s = parse_set_expr("  { -3 / 6 }U[ -1 ,+2 ] ").unwrap();
        assert_eq!(s.min(), &int(-1));
        assert_eq!(s.max(), &int(2));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert_eq!(parse_set_expr(""), Err(ParseError::Set(SetError::EmptySet)));
        match parse_set_expr("[0,1] V {2}") {
            Err(ParseError::Syntax { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_set_expr("[0,1"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_set_expr("{1/0}"), Err(ParseError::Syntax { pos: 3, .. })));
        assert!(matches!(parse_set_expr("{1/-2}"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_set_expr("[0.5,1]"), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn display_parses_back() {
        let s = parse_set_expr("{-1/3} U [0,1] U {5/2}").unwrap();
        assert_eq!(parse_set_expr(&s.to_string()).unwrap(), s);
    }
}
