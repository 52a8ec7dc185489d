//! The rational function field Q(n) in the formal dimension symbol.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::upoly::{rational_to_f64, UPoly};
use super::RingError;

/// A reduced quotient of polynomials in `n` with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: UPoly,
    den: UPoly,
}

impl RationalFunction {
    /// Builds `num/den` in canonical form.
    pub fn new(num: UPoly, den: UPoly) -> Result<Self, RingError> {
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: UPoly, den: UPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = UPoly::gcd(&num, &den);
            if g.is_constant() {
                (num, den)
            } else {
                (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
            }
        };
        let lc = den.leading().unwrap().recip();
        RationalFunction { num: num.scale(&lc), den: den.scale(&lc) }
    }

    pub fn zero() -> Self {
        RationalFunction { num: UPoly::zero(), den: UPoly::one() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        RationalFunction { num: UPoly::constant(c), den: UPoly::one() }
    }

    pub fn int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn ratio(a: i64, b: i64) -> Self {
        Self::constant(BigRational::new(a.into(), b.into()))
    }

    /// The dimension symbol `n`.
    pub fn n() -> Self {
        Self::from_poly(UPoly::var())
    }

    pub fn from_poly(p: UPoly) -> Self {
        RationalFunction { num: p, den: UPoly::one() }
    }

    pub fn numer(&self) -> &UPoly {
        &self.num
    }

    pub fn denom(&self) -> &UPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_constant() && self.num == UPoly::one()
    }

    /// True when the value does not depend on `n`.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        self.is_constant().then(|| self.num.coeff(0) / self.den.coeff(0))
    }

    /// The value as an integer when it is a constant integer.
    pub fn as_integer(&self) -> Option<i64> {
        let c = self.as_constant()?;
        if !c.is_integer() {
            return None;
        }
        i64::try_from(c.to_integer()).ok()
    }

    /// Sum of numerator and denominator degrees, used to rank pivots.
    pub fn total_degree(&self) -> usize {
        self.num.degree().unwrap_or(0) + self.den.degree().unwrap_or(0)
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, RingError> {
        if rhs.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Self::reduce(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn inv(&self) -> Result<Self, RingError> {
        Self::one().checked_div(self)
    }

    pub fn pow(&self, e: i32) -> Self {
        if e >= 0 {
            RationalFunction { num: self.num.pow(e as u32), den: self.den.pow(e as u32) }
        } else {
            let inv = self.inv().expect("negative power of zero");
            inv.pow(-e)
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Value at `n = k`; `None` when the denominator vanishes there.
    pub fn eval_at(&self, k: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(k);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(k) / d)
    }

    pub fn eval_f64(&self, n: f64) -> f64 {
        if let Some(c) = self.as_constant() {
            return rational_to_f64(&c);
        }
        self.num.eval_f64(n) / self.den.eval_f64(n)
    }

    /// Substitutes `n` by another rational function (constant or symbolic).
    pub fn subs(&self, value: &RationalFunction) -> Result<Self, RingError> {
        if self.is_constant() {
            return Ok(self.clone());
        }
        if let Some(k) = value.as_constant() {
            return self
                .eval_at(&k)
                .map(Self::constant)
                .ok_or(RingError::DivisionByZero);
        }
        let horner = |p: &UPoly| {
            p.coeffs()
                .iter()
                .rev()
                .fold(Self::zero(), |acc, c| &(&acc * value) + &Self::constant(c.clone()))
        };
        horner(&self.num).checked_div(&horner(&self.den))
    }

    /// Sign for display purposes: sign of the leading numerator coefficient.
    pub fn is_negative(&self) -> bool {
        self.num.leading().is_some_and(|c| c.is_negative())
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &UPoly| {
            let s = p.display_in("n");
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        if self.den.is_constant() {
            let c = self.den.coeff(0);
            if c.is_one() {
                write!(f, "{}", self.num.display_in("n"))
            } else {
                write!(f, "{}", self.num.scale(&c.recip()).display_in("n"))
            }
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.is_constant() && rhs.is_constant() {
            return RationalFunction::constant(
                self.as_constant().unwrap() * rhs.as_constant().unwrap(),
            );
        }
        RationalFunction::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.checked_div(rhs).expect("rational function division by zero")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction { (&self).$m(&rhs) }
        }
        impl $tr<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::upoly::q;

    fn n() -> RationalFunction {
        RationalFunction::n()
    }
    fn c(k: i64) -> RationalFunction {
        RationalFunction::int(k)
    }

    #[test]
    fn self_quotient_cancels() {
        let a = n() - c(4);
        assert!((&a / &a).is_one());
    }

    #[test]
    fn cauchy_schwarz_margin_expands() {
        let lhs = c(4) * n() * (n() - c(1)).pow(2);
        let rhs = (c(3) * n() - c(4)).pow(2);
        let margin = lhs - rhs;
        let expected = RationalFunction::from_poly(UPoly::from_ints(&[-16, 28, -17, 4]));
        assert_eq!(margin, expected);
        assert_eq!(margin.eval_at(&q(3, 1)), Some(q(23, 1)));
        assert_eq!(margin.eval_at(&q(4, 1)), Some(q(80, 1)));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(n().checked_div(&RationalFunction::zero()), Err(RingError::DivisionByZero));
    }

    #[test]
    fn denominator_is_monic_and_reduced() {
        let f = (c(2) * n() - c(8)) / (c(6) * n() * n() - c(24) * n());
        // (2n-8)/(6n^2-24n) = 1/(3n)
        assert_eq!(f, RationalFunction::ratio(1, 3) / n());
        assert_eq!(f.denom().leading(), Some(&q(1, 1)));
    }

    #[test]
    fn subs_symbolic_and_constant() {
        let f = (n() - c(6)) / (n() - c(4));
        assert_eq!(f.subs(&c(6)).unwrap(), RationalFunction::zero());
        assert!(f.subs(&c(4)).is_err());
        let shifted = f.subs(&(n() + c(1))).unwrap();
        assert_eq!(shifted, (n() - c(5)) / (n() - c(3)));
    }
}
