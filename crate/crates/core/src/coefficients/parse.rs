//! Parser for the scalar rendering grammar.
//!
//! ```text
//! expr  := ['+'|'-'] term (('+'|'-') term)*
//! term  := unary (('*'|'/') unary)*
//! unary := '-' unary | power
//! power := atom ['^' ['-'] int]
//! atom  := int | var | '(' expr ')'
//! ```
//!
//! Everything the `Display` impls print parses back to the same value.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::monomial::Var;
use super::scalar::{FieldContext, Scalar};
use super::{CoeffError, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ctx: FieldContext,
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> CoeffError {
        CoeffError::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = if self.eat(b'-') {
            -self.term()?
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = acc.try_add(&self.term()?)?;
            } else if self.eat(b'-') {
                acc = acc.try_sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc.try_mul(&self.unary()?)?;
            } else if self.eat(b'/') {
                let at = self.pos;
                let d = self.unary()?;
                acc = acc.try_div(&d).map_err(|e| match e {
                    CoeffError::DivisionByZero => CoeffError::Parse {
                        pos: at,
                        msg: "division by zero".into(),
                    },
                    e => e,
                })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Scalar> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let neg = self.eat(b'-');
        let e = self.integer()?;
        let e: i32 = e
            .try_into()
            .map_err(|_| self.err("exponent out of range"))?;
        base.pow(if neg { -e } else { e })
            .map_err(|_| self.err("zero to a negative power"))
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }

    fn atom(&mut self) -> Result<Scalar> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                self.ctx.from_rational(&BigRational::from_integer(n))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let v = Var::from_name(name).ok_or_else(|| CoeffError::Parse {
                    pos: start,
                    msg: format!("unknown variable '{name}'"),
                })?;
                self.ctx.var(v)
            }
            Some(c) => Err(self.err(format!("unexpected '{}'", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parses a scalar expression into the field `ctx`.
pub fn parse_scalar(text: &str, ctx: FieldContext) -> Result<Scalar> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ctx,
    };
    let v = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rendered_forms() {
        let rf = FieldContext::RationalFunctions;
        for text in [
            "q1+q2",
            "-q1*q2",
            "-7+3/2*q1^-2*q2",
            "(-q1^2*q2^2+q1^2+q1*q2+q2^2) / (q1+q2)",
            "-1 / (q-1)",
            "A^-3",
        ] {
            let v = parse_scalar(text, rf).unwrap();
            assert_eq!(v.to_string(), text, "round trip of {text}");
        }
    }

    #[test]
    fn prime_field_values() {
        let f7 = FieldContext::prime(7).unwrap();
        assert_eq!(parse_scalar("3/2", f7).unwrap(), f7.from_int(5));
        assert_eq!(parse_scalar("-1", f7).unwrap(), f7.from_int(6));
        assert!(parse_scalar("q", f7).is_err());
    }

    #[test]
    fn errors_carry_position() {
        let q = FieldContext::Rationals;
        assert!(matches!(
            parse_scalar("1 +", q),
            Err(CoeffError::Parse { pos: 3, .. })
        ));
        assert!(matches!(
            parse_scalar("1/0", q),
            Err(CoeffError::Parse { pos: 2, .. })
        ));
        assert!(matches!(
            parse_scalar("2 x", q),
            Err(CoeffError::Parse { .. })
        ));
    }
}
