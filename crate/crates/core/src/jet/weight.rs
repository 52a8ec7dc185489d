//! Global prefactors `e^{ku}` and `u^α` kept outside the polynomial ring.

use std::fmt;

use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::ring::RationalFunction;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Weight {
    Unit,
    /// `e^{k u}`
    Exp(i64),
    /// `u^α` with α reduced modulo the integers (see [`Weight::pow`]).
    Pow(RationalFunction),
}

impl Weight {
    pub fn exp(k: i64) -> Weight {
        if k == 0 {
            Weight::Unit
        } else {
            Weight::Exp(k)
        }
    }

    /// Splits `u^α` into a canonical weight and an integer power of `u` that
    /// belongs in the polynomial part. The integer part of the constant term
    /// of the polynomial part of α is moved out, so α and α + k share one
    /// weight for every integer k.
    pub fn pow(alpha: &RationalFunction) -> (Weight, i32) {
        let (q, _) = alpha.numer().div_rem(alpha.denom());
        let c0 = q.coeff(0);
        let shift = c0.numer().div_floor(c0.denom());
        let shift_i = shift.to_i32().expect("exponent shift out of range");
        let rest = alpha - &RationalFunction::int(shift_i as i64);
        if rest.is_zero() {
            (Weight::Unit, shift_i)
        } else {
            (Weight::Pow(rest), shift_i)
        }
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, Weight::Unit)
    }

    /// Product of two prefactors; the integer part of a combined power of
    /// `u` is returned separately. Mixing the two families is an error.
    pub fn mul(&self, other: &Weight) -> Option<(Weight, i32)> {
        match (self, other) {
            (Weight::Unit, w) | (w, Weight::Unit) => Some((w.clone(), 0)),
            (Weight::Exp(a), Weight::Exp(b)) => Some((Weight::exp(a + b), 0)),
            (Weight::Pow(a), Weight::Pow(b)) => Some(Weight::pow(&(a + b))),
            _ => None,
        }
    }

    /// Exponent of `u` (zero for the exponential family).
    pub fn u_exponent(&self) -> RationalFunction {
        match self {
            Weight::Pow(a) => a.clone(),
            _ => RationalFunction::zero(),
        }
    }

    /// Specializes the symbol `n` inside the exponent.
    pub fn subs(&self, n: &RationalFunction) -> Option<(Weight, i32)> {
        match self {
            Weight::Pow(a) => Some(Weight::pow(&a.subs(n).ok()?)),
            w => Some((w.clone(), 0)),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Unit => Ok(()),
            Weight::Exp(1) => write!(f, "e^{{u}}"),
            Weight::Exp(-1) => write!(f, "e^{{-u}}"),
            Weight::Exp(k) => write!(f, "e^{{{k}u}}"),
            Weight::Pow(a) => write!(f, "u^{{{a}}}"),
        }
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_rf;

    #[test]
    fn integer_parts_are_split_off() {
        let base = parse_rf("-2/(n-4)").unwrap();
        assert_eq!(Weight::pow(&base), (Weight::Pow(base.clone()), 0));
        assert_eq!(Weight::pow(&parse_rf("-(n-2)/(n-4)").unwrap()), (Weight::Pow(base.clone()), -1));
        assert_eq!(Weight::pow(&parse_rf("(n-6)/(n-4)").unwrap()), (Weight::Pow(base.clone()), 1));
        assert_eq!(Weight::pow(&parse_rf("-2*(n-3)/(n-4)").unwrap()), (Weight::Pow(base), -2));
    }

    #[test]
    fn constants_fold_to_integer_powers() {
        assert_eq!(Weight::pow(&RationalFunction::int(-1)), (Weight::Unit, -1));
        let (w, k) = Weight::pow(&RationalFunction::ratio(-2, 3));
        assert_eq!((w, k), (Weight::Pow(RationalFunction::ratio(1, 3)), -1));
    }

    #[test]
    fn exponentials_add() {
        assert_eq!(Weight::exp(-2).mul(&Weight::exp(3)), Some((Weight::exp(1), 0)));
        assert_eq!(Weight::exp(-2).mul(&Weight::exp(2)), Some((Weight::Unit, 0)));
        assert_eq!(Weight::exp(1).mul(&Weight::Pow(RationalFunction::ratio(1, 2))), None);
    }
}
