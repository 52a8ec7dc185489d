//! Reader for rational functions in `n` written in ordinary notation,
//! e.g. `"-4*(n-1)*(n^2-2)/(n*(n-4))"`.

use super::ratfunc::RationalFunction;
use super::RingError;

pub fn parse_rf(text: &str) -> Result<RationalFunction, RingError> {
    let mut p = Reader { src: text.as_bytes(), pos: 0 };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(v)
}

struct Reader<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Reader<'_> {
    fn error(&self, msg: &str) -> RingError {
        RingError::Parse { offset: self.pos, message: msg.to_string() }
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

    fn expr(&mut self) -> Result<RationalFunction, RingError> {
        let mut acc = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == b'+' { acc + rhs } else { acc - rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RationalFunction, RingError> {
        let mut acc = self.unary()?;
        while let Some(op @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if op == b'*' { acc * rhs } else { acc.checked_div(&rhs)? };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RationalFunction, RingError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer()?;
            return Ok(base.pow(e as i32));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<i64, RingError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.error("integer out of range"))
    }

    fn atom(&mut self) -> Result<RationalFunction, RingError> {
        match self.peek() {
            Some(b'n') => {
                self.pos += 1;
                Ok(RationalFunction::n())
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(RationalFunction::int(self.integer()?)),
            _ => Err(self.error("expected a number, 'n' or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_displayed_coefficients() {
        let f = parse_rf("16*(n-1)^2/(n-4)^2").unwrap();
        let n = RationalFunction::n();
        let c = RationalFunction::int;
        assert_eq!(f, c(16) * (&n - &c(1)).pow(2) / (&n - &c(4)).pow(2));
        assert_eq!(parse_rf("-1/2").unwrap(), RationalFunction::ratio(-1, 2));
        assert_eq!(parse_rf("-n*(n-1)/(n-4)").unwrap(), -(&n * &(&n - &c(1))) / (&n - &c(4)));
    }

    #[test]
    fn reports_offsets() {
        match parse_rf("(n-1") {
            Err(RingError::Parse { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("unexpected {other:?}"),
        }
    }
}
