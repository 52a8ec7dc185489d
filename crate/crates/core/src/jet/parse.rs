//! Reader for monomials written with the short generator names, e.g.
//! `"u^-2 g2 g1^2"` or `"R^2 g2"`. The empty string and `"1"` mean 1.

use super::expr::JetMonomial;
use super::generator::Gen;
use crate::ring::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("bad monomial token `{token}`")]
pub struct JetParseError {
    pub token: String,
}

pub fn parse_monomial(text: &str) -> Result<JetMonomial, JetParseError> {
    let mut m = Monomial::one();
    for token in text.split_whitespace() {
        if token == "1" {
            continue;
        }
        let bad = || JetParseError { token: token.to_string() };
        let (name, exp) = match token.split_once('^') {
            Some((name, e)) => (name, e.parse::<i32>().map_err(|_| bad())?),
            None => (token, 1),
        };
        let g = Gen::from_name(name).ok_or_else(bad)?;
        m = m.mul(&Monomial::power(g, exp));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_powers_and_products() {
        let m = parse_monomial("u^-2 g2 g1^2").unwrap();
        assert_eq!(m.exponent(&Gen::U), -2);
        assert_eq!(m.exponent(&Gen::G(1)), 2);
        assert_eq!(m.exponent(&Gen::G(2)), 1);
        assert!(parse_monomial("1").unwrap().is_one());
        assert!(parse_monomial("g99").is_err());
        assert!(parse_monomial("g1^x").is_err());
    }
}
