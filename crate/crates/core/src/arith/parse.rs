//! Parser for scalar expressions in the variable `d` (the parameter `δ`).
//!
//! Grammar:
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | 'd' | '(' expr ')'
//! ```

use num_bigint::BigInt;

use super::{DeltaPoly, DeltaScalar, Rational};
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

pub fn parse_scalar(text: &str) -> Result<DeltaScalar> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    if p.at_end() {
        return Err(Error::parse(0, "empty expression"));
    }
    let value = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(Error::parse(
            p.pos,
            format!("unexpected '{}'", p.src[p.pos] as char),
        ));
    }
    Ok(value)
}

impl Parser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
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

    fn expr(&mut self) -> Result<DeltaScalar> {
        let mut acc = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == b'+' { acc + rhs } else { acc - rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<DeltaScalar> {
        let mut acc = self.unary()?;
        while let Some(op @ (b'*' | b'/')) = self.peek() {
            let at = self.pos;
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if op == b'*' {
                acc * rhs
            } else {
                acc.checked_div(&rhs)
                    .map_err(|_| Error::parse(at, "division by zero"))?
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<DeltaScalar> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<DeltaScalar> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let e = self.integer()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| Error::parse(at, "exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<DeltaScalar> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(Error::parse(self.pos, "expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'd') => {
                self.pos += 1;
                Ok(DeltaScalar::delta())
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(DeltaScalar::from_poly(DeltaPoly::constant(
                    Rational::from_integer(n),
                )))
            }
            Some(c) => Err(Error::parse(
                self.pos,
                format!("unexpected '{}'", c as char),
            )),
            None => Err(Error::parse(self.pos, "unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(digits.parse().expect("digits"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_factored_forms() {
        let x = parse_scalar("(2*d^2-3)/(d*(d-1))").unwrap();
        assert_eq!(x.numer(), &DeltaPoly::from_ints(&[-3, 0, 2]));
        assert_eq!(x.denom(), &DeltaPoly::from_ints(&[0, -1, 1]));
        assert_eq!(parse_scalar(" 3 d").unwrap_err().kind(), "ParseError");
    }

    #[test]
    fn reports_error_position() {
        match parse_scalar("1/(d-1").unwrap_err() {
            Error::Parse { pos, .. } => assert_eq!(pos, 6),
            e => panic!("unexpected {e:?}"),
        }
        match parse_scalar("1/(d-d)").unwrap_err() {
            Error::Parse { pos, msg } => {
                assert_eq!(pos, 1);
                assert!(msg.contains("zero"));
            }
            e => panic!("unexpected {e:?}"),
        }
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar("x").is_err());
    }

    #[test]
    fn unary_minus_and_powers() {
        assert_eq!(parse_scalar("-d^2").unwrap(), -DeltaScalar::delta().pow(2));
        assert_eq!(parse_scalar("1/2*d").unwrap(), parse_scalar("d/2").unwrap());
    }
}
