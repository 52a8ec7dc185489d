//! Sparse multivariate Laurent polynomials with coefficients in Q(n).
//!
//! Monomials are kept in degree-lexicographic order. Exponents are signed so
//! that a distinguished variable may carry negative powers.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::ratfunc::RationalFunction;
use super::RingError;

/// Sorted `(variable, exponent)` pairs with nonzero exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial<V> {
    factors: Vec<(V, i32)>,
}

impl<V: Ord + Clone> Monomial<V> {
    pub fn one() -> Self {
        Monomial { factors: Vec::new() }
    }

    pub fn var(v: V) -> Self {
        Self::power(v, 1)
    }

    pub fn power(v: V, e: i32) -> Self {
        if e == 0 {
            Self::one()
        } else {
            Monomial { factors: vec![(v, e)] }
        }
    }

    pub fn from_factors(factors: impl IntoIterator<Item = (V, i32)>) -> Self {
        factors
            .into_iter()
            .fold(Self::one(), |acc, (v, e)| acc.mul(&Self::power(v, e)))
    }

    pub fn factors(&self) -> &[(V, i32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent(&self, v: &V) -> i32 {
        self.factors
            .iter()
            .find(|(w, _)| w == v)
            .map_or(0, |(_, e)| *e)
    }

    pub fn total_degree(&self) -> i32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() || j < other.factors.len() {
            let ord = match (self.factors.get(i), other.factors.get(j)) {
                (Some(a), Some(b)) => a.0.cmp(&b.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(self.factors[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.factors[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let e = self.factors[i].1 + other.factors[j].1;
                    if e != 0 {
                        out.push((self.factors[i].0.clone(), e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Monomial { factors: out }
    }

    /// Removes one power of `v`, returning the old exponent.
    pub fn lower(&self, v: &V) -> Option<(i32, Self)> {
        let e = self.exponent(v);
        (e != 0).then(|| (e, self.mul(&Self::power(v.clone(), -1))))
    }

    pub fn without(&self, v: &V) -> Self {
        Monomial { factors: self.factors.iter().filter(|(w, _)| w != v).cloned().collect() }
    }
}

impl<V: Ord + Clone> PartialOrd for Monomial<V> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<V: Ord + Clone> Ord for Monomial<V> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.factors.cmp(&other.factors))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MPoly<V: Ord> {
    terms: BTreeMap<Monomial<V>, RationalFunction>,
}

impl<V: Ord + Clone> Default for MPoly<V> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<V: Ord + Clone> MPoly<V> {
    pub fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: RationalFunction) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn one() -> Self {
        Self::constant(RationalFunction::one())
    }

    pub fn var(v: V) -> Self {
        Self::term(RationalFunction::one(), Monomial::var(v))
    }

    pub fn term(c: RationalFunction, m: Monomial<V>) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial<V>, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial<V>) -> RationalFunction {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial<V>, c: RationalFunction) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let s = &*existing + &c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MPoly { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial<V>) -> Self {
        MPoly { terms: self.terms.iter().map(|(k, a)| (k.mul(m), a.clone())).collect() }
    }

    pub fn variables(&self) -> Vec<V> {
        let mut vs: Vec<V> = self
            .terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|(v, _)| v.clone()))
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn contains_var(&self, v: &V) -> bool {
        self.terms.keys().any(|m| m.exponent(v) != 0)
    }

    pub fn map_coeffs(
        &self,
        f: impl Fn(&RationalFunction) -> Result<RationalFunction, RingError>,
    ) -> Result<Self, RingError> {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Replaces every power of `v` by the corresponding power of `with`.
    /// Negative powers are not supported for substitution.
    pub fn substitute(&self, v: &V, with: &MPoly<V>) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                out.add_term(m.clone(), c.clone());
                continue;
            }
            assert!(e > 0, "cannot substitute into a negative power");
            let mut piece = MPoly::term(c.clone(), m.without(v));
            for _ in 0..e {
                piece = &piece * with;
            }
            out = &out + &piece;
        }
        out
    }

    /// Formal partial derivative with respect to `v`.
    pub fn partial(&self, v: &V) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if let Some((e, lowered)) = m.lower(v) {
                out.add_term(lowered, c * &RationalFunction::int(e as i64));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl<V: Ord + Clone> Add for &MPoly<V> {
    type Output = MPoly<V>;
    fn add(self, rhs: &MPoly<V>) -> MPoly<V> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<V: Ord + Clone> Sub for &MPoly<V> {
    type Output = MPoly<V>;
    fn sub(self, rhs: &MPoly<V>) -> MPoly<V> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<V: Ord + Clone> Mul for &MPoly<V> {
    type Output = MPoly<V>;
    fn mul(self, rhs: &MPoly<V>) -> MPoly<V> {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl<V: Ord + Clone> Neg for &MPoly<V> {
    type Output = MPoly<V>;
    fn neg(self) -> MPoly<V> {
        MPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = MPoly<u8>;

    #[test]
    fn binomial_square_cancels() {
        let a = P::var(1);
        let b = P::var(2);
        let s = &a + &b;
        let sq = &s * &s;
        let two_ab = (&a * &b).scale(&RationalFunction::int(2));
        let rest = &(&(&sq - &(&a * &a)) - &two_ab) - &(&b * &b);
        assert!(rest.is_zero());
    }

    #[test]
    fn laurent_exponents_cancel() {
        let m = Monomial::power(0u8, -1).mul(&Monomial::power(0u8, 1));
        assert!(m.is_one());
    }

    #[test]
    fn deglex_orders_by_degree_first() {
        let low = Monomial::power(9u8, 1);
        let high = Monomial::from_factors([(1u8, 1), (2u8, 1)]);
        assert!(low < high);
    }

    #[test]
    fn substitution_and_partial() {
        // p = x^2 y, substitute x -> (y + 1): y^3 + 2y^2 + y
        let x = P::var(1);
        let y = P::var(2);
        let p = &(&x * &x) * &y;
        let s = p.substitute(&1, &(&y + &P::one()));
        let expect = &(&y.pow(3) + &y.pow(2).scale(&RationalFunction::int(2))) + &y;
        assert_eq!(s, expect);
        assert_eq!(p.partial(&1), (&x * &y).scale(&RationalFunction::int(2)));
    }
}
