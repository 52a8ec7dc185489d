//! Profiles `P(cos θ)` written as polynomial expressions in `x`.
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' uint)?
//! base   := rational | 'x' | '(' expr ')'
//! ```
//!
//! `rational` is `digits` or `digits/digits`. Whitespace between tokens is
//! ignored.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::ring::UPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at offset {offset}: {message}")]
pub struct ProfileError {
    pub offset: usize,
    pub message: String,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T, ProfileError> {
        Err(ProfileError { offset: self.pos, message: message.into() })
    }

    fn digits(&mut self) -> Result<BigInt, ProfileError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail("expected digits");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digit string"))
    }

    fn expr(&mut self) -> Result<UPoly, ProfileError> {
        let negate = match self.peek() {
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
        let first = self.term()?;
        let mut acc = if negate { &UPoly::zero() - &first } else { first };
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if op == b'+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<UPoly, ProfileError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<UPoly, ProfileError> {
        let base = self.base()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let e = self.digits()?;
        match u32::try_from(e) {
            Ok(e) if e <= 64 => Ok(base.pow(e)),
            _ => self.fail("exponent too large"),
        }
    }

    fn base(&mut self) -> Result<UPoly, ProfileError> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(UPoly::var())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.fail("expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits()?;
                let mut den = BigInt::from(1);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    den = self.digits()?;
                    if den.is_zero() {
                        return self.fail("zero denominator");
                    }
                }
                Ok(UPoly::constant(BigRational::new(num, den)))
            }
            Some(c) => self.fail(format!("unexpected '{}'", c as char)),
            None => self.fail("unexpected end of input"),
        }
    }
}

pub fn parse_profile(text: &str) -> Result<UPoly, ProfileError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let out = p.expr()?;
    if p.peek().is_some() {
        return p.fail("trailing input");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::q;

    #[test]
    fn examples() {
        assert_eq!(parse_profile("x").unwrap(), UPoly::var());
        let p = parse_profile("1/2 + 3*x^2 - x^3").unwrap();
        assert_eq!(p.coeffs(), &[q(1, 2), q(0, 1), q(3, 1), q(-1, 1)]);
        assert_eq!(parse_profile("x^").unwrap_err().offset, 2);
    }

    #[test]
    fn nesting_and_signs() {
        let p = parse_profile("-(1 - x)^2 * 2").unwrap();
        assert_eq!(p, UPoly::from_ints(&[-2, 4, -2]));
        assert_eq!(parse_profile(" 3/6 ").unwrap(), UPoly::constant(q(1, 2)));
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(parse_profile("1/0").unwrap_err().offset, 3);
        assert_eq!(parse_profile("(x").unwrap_err().offset, 2);
        assert_eq!(parse_profile("x y").unwrap_err().offset, 2);
        assert_eq!(parse_profile("").unwrap_err().offset, 0);
        assert_eq!(parse_profile("2*y").unwrap_err().offset, 2);
    }
}
