//! Weighted polynomials in the generator catalog.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::generator::Gen;
use super::weight::Weight;
use super::JetError;
use crate::ring::{MPoly, Monomial, RationalFunction};

pub type JetPoly = MPoly<Gen>;
pub type JetMonomial = Monomial<Gen>;

/// `weight · poly`. The zero expression always carries the unit weight so
/// that it is compatible with every other expression.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JetExpr {
    weight: Weight,
    poly: JetPoly,
}

impl Default for JetExpr {
    fn default() -> Self {
        Self::zero()
    }
}

impl JetExpr {
    pub fn new(weight: Weight, poly: JetPoly) -> Self {
        if poly.is_zero() {
            Self::zero()
        } else {
            JetExpr { weight, poly }
        }
    }

    pub fn zero() -> Self {
        JetExpr { weight: Weight::Unit, poly: JetPoly::zero() }
    }

    pub fn one() -> Self {
        Self::constant(RationalFunction::one())
    }

    pub fn constant(c: RationalFunction) -> Self {
        Self::new(Weight::Unit, JetPoly::constant(c))
    }

    pub fn int(c: i64) -> Self {
        Self::constant(RationalFunction::int(c))
    }

    pub fn gen(g: Gen) -> Self {
        Self::new(Weight::Unit, JetPoly::var(g))
    }

    pub fn g(i: u8) -> Self {
        Self::gen(Gen::g(i))
    }

    pub fn r() -> Self {
        Self::gen(Gen::R)
    }

    pub fn monomial(c: RationalFunction, m: JetMonomial) -> Self {
        Self::new(Weight::Unit, JetPoly::term(c, m))
    }

    /// `e^{k u}`
    pub fn exp_u(k: i64) -> Self {
        Self::new(Weight::exp(k), JetPoly::one())
    }

    /// `u^α`, with any integer part of α carried by the generator `u`.
    pub fn u_pow(alpha: &RationalFunction) -> Self {
        let (w, k) = Weight::pow(alpha);
        Self::new(w, JetPoly::term(RationalFunction::one(), Monomial::power(Gen::U, k)))
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn poly(&self) -> &JetPoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn with_poly(&self, poly: JetPoly) -> Self {
        Self::new(self.weight.clone(), poly)
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        self.with_poly(self.poly.scale(c))
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&RationalFunction::int(c))
    }

    pub fn try_add(&self, other: &JetExpr) -> Result<JetExpr, JetError> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.weight != other.weight {
            return Err(JetError::WeightMismatch(self.weight.to_string(), other.weight.to_string()));
        }
        Ok(self.with_poly(&self.poly + &other.poly))
    }

    pub fn try_mul(&self, other: &JetExpr) -> Result<JetExpr, JetError> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let (w, k) = self
            .weight
            .mul(&other.weight)
            .ok_or_else(|| JetError::WeightMismatch(self.weight.to_string(), other.weight.to_string()))?;
        let poly = (&self.poly * &other.poly).mul_monomial(&Monomial::power(Gen::U, k));
        Ok(Self::new(w, poly))
    }

    pub fn pow(&self, e: u32) -> JetExpr {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Generators occurring anywhere in the polynomial part.
    pub fn generators(&self) -> Vec<Gen> {
        self.poly.variables()
    }

    /// Applies a fallible map to every coefficient.
    pub fn map_coeffs(
        &self,
        f: impl Fn(&RationalFunction) -> Result<RationalFunction, crate::ring::RingError>,
    ) -> Result<JetExpr, JetError> {
        Ok(self.with_poly(self.poly.map_coeffs(f)?))
    }

    /// Specializes the dimension symbol to `n`, re-canonicalizing weights.
    pub fn subs_n(&self, n: &RationalFunction) -> Result<JetExpr, JetError> {
        let (w, k) = self.weight.subs(n).ok_or(JetError::Singular)?;
        let poly = self.poly.map_coeffs(|c| c.subs(n))?;
        Ok(Self::new(w, poly.mul_monomial(&Monomial::power(Gen::U, k))))
    }

    /// Splits the expression into terms that are homogeneous in
    /// (derivative order, degree in u); the weight is not counted.
    pub fn grade_of(m: &JetMonomial) -> (u32, i32) {
        m.factors().iter().fold((0, 0), |(o, d), (g, e)| {
            (o + g.order() * (*e).max(0) as u32, d + g.u_degree() as i32 * e)
        })
    }

    /// Paper-style rendering, e.g. `e^{-u}(|∇u|²Δu - (∇Δu,∇u))`.
    pub fn notation(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut body = String::new();
        for (m, c) in self.poly.terms().rev() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if body.is_empty() {
                if neg {
                    body.push('-');
                }
            } else {
                body.push_str(if neg { " - " } else { " + " });
            }
            let mono: String = m
                .factors()
                .iter()
                .map(|(g, e)| match e {
                    1 => g.notation(),
                    _ => format!("{}^{}", g.notation(), e),
                })
                .collect::<Vec<_>>()
                .join("");
            let coef = if abs.is_one() && !m.is_one() {
                String::new()
            } else if abs.numer().coeffs().len() > 1 || !abs.denom().is_constant() {
                format!("({abs})")
            } else {
                abs.to_string()
            };
            body.push_str(&coef);
            body.push_str(&mono);
        }
        if self.weight.is_unit() {
            body
        } else {
            format!("{}({body})", self.weight)
        }
    }
}

impl fmt::Display for JetExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .poly
            .terms()
            .rev()
            .map(|(m, c)| {
                let mono: Vec<String> = m
                    .factors()
                    .iter()
                    .map(|(g, e)| if *e == 1 { g.to_string() } else { format!("{g}^{e}") })
                    .collect();
                if m.is_one() {
                    format!("({c})")
                } else {
                    format!("({c})*{}", mono.join("*"))
                }
            })
            .collect();
        if self.weight.is_unit() {
            write!(f, "{}", terms.join(" + "))
        } else {
            write!(f, "{}*[{}]", self.weight, terms.join(" + "))
        }
    }
}

impl Add for &JetExpr {
    type Output = JetExpr;
    fn add(self, rhs: &JetExpr) -> JetExpr {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &JetExpr {
    type Output = JetExpr;
    fn sub(self, rhs: &JetExpr) -> JetExpr {
        self + &(-rhs)
    }
}

impl Mul for &JetExpr {
    type Output = JetExpr;
    fn mul(self, rhs: &JetExpr) -> JetExpr {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &JetExpr {
    type Output = JetExpr;
    fn neg(self) -> JetExpr {
        self.with_poly(-&self.poly)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for JetExpr {
            type Output = JetExpr;
            fn $m(self, rhs: JetExpr) -> JetExpr { (&self).$m(&rhs) }
        }
        impl $tr<&JetExpr> for JetExpr {
            type Output = JetExpr;
            fn $m(self, rhs: &JetExpr) -> JetExpr { (&self).$m(rhs) }
        }
        impl $tr<JetExpr> for &JetExpr {
            type Output = JetExpr;
            fn $m(self, rhs: JetExpr) -> JetExpr { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for JetExpr {
    type Output = JetExpr;
    fn neg(self) -> JetExpr {
        -&self
    }
}

/// Sum of an iterator of expressions.
pub fn sum<'a>(items: impl IntoIterator<Item = &'a JetExpr>) -> JetExpr {
    items.into_iter().fold(JetExpr::zero(), |acc, e| &acc + e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_rf;

    #[test]
    fn weights_compose_and_fold() {
        let a = JetExpr::u_pow(&parse_rf("-2/(n-4)").unwrap());
        let b = JetExpr::u_pow(&parse_rf("-(n-2)/(n-4)").unwrap());
        let c = &JetExpr::gen(Gen::U).pow(0) * &b;
        // u^{-(n-2)/(n-4)} = u^{-2/(n-4)} u^{-1}
        let expect = &a * &JetExpr::monomial(RationalFunction::one(), Monomial::power(Gen::U, -1));
        assert_eq!(c, expect);
        let prod = &JetExpr::exp_u(-3) * &JetExpr::exp_u(3);
        assert_eq!(prod, JetExpr::one());
    }

    #[test]
    fn mismatched_weights_are_rejected() {
        let a = JetExpr::exp_u(-1);
        let b = JetExpr::exp_u(-2);
        assert!(matches!(a.try_add(&b), Err(JetError::WeightMismatch(..))));
        assert_eq!(a.try_add(&JetExpr::zero()).unwrap(), a);
    }

    #[test]
    fn specialization_folds_integral_exponents() {
        let a = JetExpr::u_pow(&parse_rf("-2/(n-4)").unwrap());
        let at6 = a.subs_n(&RationalFunction::int(6)).unwrap();
        assert_eq!(at6, JetExpr::monomial(RationalFunction::one(), Monomial::power(Gen::U, -1)));
    }

    #[test]
    fn notation_reads_like_the_formulas() {
        let e = &JetExpr::exp_u(-1) * &(&JetExpr::g(5) - &(&JetExpr::g(2) * &JetExpr::g(1)));
        let s = e.notation();
        assert!(s.starts_with("e^{-u}("), "{s}");
        assert!(s.contains("(∇Δu,∇u)") && s.contains("Δu|∇u|²"), "{s}");
    }
}
