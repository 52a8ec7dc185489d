//! Formal vector fields and symmetric 2-tensors with their contraction tables.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use super::expr::JetExpr;
use super::generator::{Gen, Tens, VecBase};
use super::Background;
use crate::ring::RationalFunction;

/// `M₁(M₂(⋯(base)))`, outermost tensor first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VecTerm {
    tensors: Vec<Tens>,
    base: VecBase,
}

impl VecTerm {
    pub fn base(base: VecBase) -> Self {
        VecTerm { tensors: Vec::new(), base }
    }

    pub fn tensors(&self) -> &[Tens] {
        &self.tensors
    }

    pub fn base_vector(&self) -> VecBase {
        self.base
    }

    pub fn order(&self) -> u32 {
        self.base.order() + self.tensors.iter().map(|t| t.order()).sum::<u32>()
    }

    pub fn u_degree(&self) -> u32 {
        self.base.u_degree() + self.tensors.len() as u32
    }

    /// `S(self)` together with a rational factor from `∇²u(∇u) = ½∇|∇u|²`.
    fn applied(&self, s: Tens) -> (RationalFunction, VecTerm) {
        if s == Tens::H && self.tensors.is_empty() && self.base == VecBase::V3 {
            return (RationalFunction::ratio(1, 2), VecTerm::base(VecBase::V2));
        }
        let mut tensors = vec![s];
        tensors.extend_from_slice(&self.tensors);
        (RationalFunction::one(), VecTerm { tensors, base: self.base })
    }

    pub fn notation(&self) -> String {
        let mut s = String::new();
        for t in &self.tensors {
            s.push_str(&format!("({})", t.notation()));
        }
        if self.tensors.is_empty() {
            s.push_str(self.base.notation());
        } else {
            s.push_str(&format!("({})", self.base.notation()));
        }
        s
    }
}

/// Scalar value of `⟨a, b⟩` for two vector terms.
pub fn pair_terms(a: &VecTerm, b: &VecTerm) -> JetExpr {
    let mut mids: Vec<Tens> = a.tensors.iter().rev().copied().collect();
    mids.extend_from_slice(&b.tensors);
    let (mut left, mut right) = (a.base, b.base);
    let mut factor = RationalFunction::one();
    let half = RationalFunction::ratio(1, 2);
    loop {
        if left == VecBase::V3 && mids.first() == Some(&Tens::H) {
            mids.remove(0);
            left = VecBase::V2;
            factor = &factor * &half;
        } else if right == VecBase::V3 && mids.last() == Some(&Tens::H) {
            mids.pop();
            right = VecBase::V2;
            factor = &factor * &half;
        } else {
            break;
        }
    }
    let rev: Vec<Tens> = mids.iter().rev().copied().collect();
    if (right, &rev, left) < (left, &mids, right) {
        std::mem::swap(&mut left, &mut right);
        mids = rev;
    }
    JetExpr::gen(gram(left, &mids, right)).scale(&factor)
}

fn gram(left: VecBase, mids: &[Tens], right: VecBase) -> Gen {
    use VecBase::*;
    match (left, mids, right) {
        (V1, [], V1) => Gen::G(7),
        (V1, [], V2) => Gen::G(6),
        (V1, [], V3) => Gen::G(5),
        (V2, [], V2) => Gen::G(8),
        (V2, [], V3) => Gen::G(4),
        (V3, [], V3) => Gen::G(2),
        (V3, [], V4) => Gen::G(10),
        (V3, [Tens::T], V3) => Gen::G(12),
        _ => Gen::Pairing { left, mids: mids.to_vec(), right },
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct VectorExpr {
    terms: BTreeMap<VecTerm, JetExpr>,
}

impl VectorExpr {
    pub fn zero() -> Self {
        VectorExpr { terms: BTreeMap::new() }
    }

    pub fn basis(v: VecBase) -> Self {
        Self::term(JetExpr::one(), VecTerm::base(v))
    }

    pub fn term(coef: JetExpr, t: VecTerm) -> Self {
        let mut out = Self::zero();
        out.add_term(t, coef);
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&VecTerm, &JetExpr)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, t: VecTerm, c: JetExpr) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(t.clone()).or_default();
        let s = &*entry + &c;
        if s.is_zero() {
            self.terms.remove(&t);
        } else {
            *entry = s;
        }
    }

    /// Multiplies every coefficient by a scalar expression.
    pub fn mul_scalar(&self, f: &JetExpr) -> Self {
        let mut out = Self::zero();
        for (t, c) in &self.terms {
            out.add_term(t.clone(), c * f);
        }
        out
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        self.mul_scalar(&JetExpr::constant(c.clone()))
    }

    /// `S(self)` for one of the applied tensors.
    pub fn apply(&self, s: Tens) -> Self {
        let mut out = Self::zero();
        for (t, c) in &self.terms {
            let (f, nt) = t.applied(s);
            out.add_term(nt, c.scale(&f));
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&JetExpr) -> JetExpr) -> Self {
        let mut out = Self::zero();
        for (t, c) in &self.terms {
            out.add_term(t.clone(), f(c));
        }
        out
    }

    pub fn notation(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(t, c)| format!("[{}]·{}", c.notation(), t.notation()))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// `⟨a, b⟩`
pub fn inner(a: &VectorExpr, b: &VectorExpr) -> JetExpr {
    let mut acc = JetExpr::zero();
    for (ta, ca) in &a.terms {
        for (tb, cb) in &b.terms {
            acc = &acc + &(&(ca * cb) * &pair_terms(ta, tb));
        }
    }
    acc
}

pub fn norm_sq(a: &VectorExpr) -> JetExpr {
    inner(a, a)
}

impl Add for &VectorExpr {
    type Output = VectorExpr;
    fn add(self, rhs: &VectorExpr) -> VectorExpr {
        let mut out = self.clone();
        for (t, c) in &rhs.terms {
            out.add_term(t.clone(), c.clone());
        }
        out
    }
}

impl Sub for &VectorExpr {
    type Output = VectorExpr;
    fn sub(self, rhs: &VectorExpr) -> VectorExpr {
        self + &(-rhs)
    }
}

impl Neg for &VectorExpr {
    type Output = VectorExpr;
    fn neg(self) -> VectorExpr {
        self.map_coeffs(|c| -c)
    }
}

/// Basis of symmetric 2-tensors.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum TensBasis {
    /// the metric
    G,
    /// `∇²u`
    H,
    /// `∇²Δu`
    T,
    /// `∇u⊗∇u`
    N,
}

impl TensBasis {
    pub fn notation(self) -> &'static str {
        match self {
            TensBasis::G => "g",
            TensBasis::H => "∇²u",
            TensBasis::T => "∇²Δu",
            TensBasis::N => "∇u⊗∇u",
        }
    }
}

/// `⟨a, b⟩` for basis tensors.
pub fn contract_basis(a: TensBasis, b: TensBasis, bg: &Background) -> JetExpr {
    use TensBasis::*;
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    match (a, b) {
        (G, G) => JetExpr::constant(bg.n.clone()),
        (G, H) => -JetExpr::g(1),
        (G, T) => -JetExpr::g(9),
        (G, N) => JetExpr::g(2),
        (H, H) => JetExpr::g(3),
        (H, T) => JetExpr::g(11),
        (H, N) => JetExpr::g(4).scale(&RationalFunction::ratio(1, 2)),
        (T, T) => JetExpr::gen(Gen::HessLapSq),
        (T, N) => JetExpr::g(12),
        (N, N) => JetExpr::g(2).pow(2),
        _ => unreachable!(),
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TensorExpr {
    terms: BTreeMap<TensBasis, JetExpr>,
}

impl TensorExpr {
    pub fn zero() -> Self {
        TensorExpr { terms: BTreeMap::new() }
    }

    pub fn term(coef: JetExpr, b: TensBasis) -> Self {
        let mut out = Self::zero();
        out.add_term(b, coef);
        out
    }

    pub fn basis(b: TensBasis) -> Self {
        Self::term(JetExpr::one(), b)
    }

    fn add_term(&mut self, b: TensBasis, c: JetExpr) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(b).or_default();
        let s = &*entry + &c;
        if s.is_zero() {
            self.terms.remove(&b);
        } else {
            *entry = s;
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TensBasis, &JetExpr)> {
        self.terms.iter()
    }

    pub fn coeff(&self, b: TensBasis) -> JetExpr {
        self.terms.get(&b).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul_scalar(&self, f: &JetExpr) -> Self {
        let mut out = Self::zero();
        for (b, c) in &self.terms {
            out.add_term(*b, c * f);
        }
        out
    }

    /// `S(v)`
    pub fn apply(&self, v: &VectorExpr) -> VectorExpr {
        let mut out = VectorExpr::zero();
        for (b, c) in &self.terms {
            let piece = match b {
                TensBasis::G => v.clone(),
                TensBasis::H => v.apply(Tens::H),
                TensBasis::T => v.apply(Tens::T),
                TensBasis::N => VectorExpr::basis(VecBase::V3).mul_scalar(&inner(&VectorExpr::basis(VecBase::V3), v)),
            };
            out = &out + &piece.mul_scalar(c);
        }
        out
    }

    pub fn trace(&self, bg: &Background) -> JetExpr {
        contract(self, &TensorExpr::basis(TensBasis::G), bg)
    }

    pub fn notation(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(b, c)| format!("[{}]·{}", c.notation(), b.notation()))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// `⟨a, b⟩` for tensor expressions.
pub fn contract(a: &TensorExpr, b: &TensorExpr, bg: &Background) -> JetExpr {
    let mut acc = JetExpr::zero();
    for (ba, ca) in &a.terms {
        for (bb, cb) in &b.terms {
            acc = &acc + &(&(ca * cb) * &contract_basis(*ba, *bb, bg));
        }
    }
    acc
}

impl Add for &TensorExpr {
    type Output = TensorExpr;
    fn add(self, rhs: &TensorExpr) -> TensorExpr {
        let mut out = self.clone();
        for (b, c) in &rhs.terms {
            out.add_term(*b, c.clone());
        }
        out
    }
}

impl Sub for &TensorExpr {
    type Output = TensorExpr;
    fn sub(self, rhs: &TensorExpr) -> TensorExpr {
        self + &rhs.mul_scalar(&JetExpr::int(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bg() -> Background {
        Background::symbolic()
    }

    #[test]
    fn metric_and_trace_contractions() {
        let b = bg();
        assert_eq!(contract_basis(TensBasis::G, TensBasis::G, &b), JetExpr::constant(RationalFunction::n()));
        assert_eq!(contract_basis(TensBasis::H, TensBasis::G, &b), -JetExpr::g(1));
        assert_eq!(contract_basis(TensBasis::N, TensBasis::H, &b), JetExpr::g(4).scale(&RationalFunction::ratio(1, 2)));
    }

    #[test]
    fn hessian_of_gradient_is_half_gradient_of_energy() {
        let v3 = VectorExpr::basis(VecBase::V3);
        let hv = v3.apply(Tens::H);
        assert_eq!(hv, VectorExpr::basis(VecBase::V2).scale(&RationalFunction::ratio(1, 2)));
        // ⟨H∇u, H∇u⟩ = ¼|∇|∇u|²|²
        assert_eq!(norm_sq(&hv), JetExpr::g(8).scale(&RationalFunction::ratio(1, 4)));
    }

    #[test]
    fn pairings_outside_the_table_are_minted_canonically() {
        let v1 = VectorExpr::basis(VecBase::V1);
        let a = inner(&v1.apply(Tens::H), &v1);
        let b = inner(&v1, &v1.apply(Tens::H));
        assert_eq!(a, b);
        assert!(a.generators()[0].is_minted());
        // ⟨T∇u, ∇u⟩ is in the table
        let v3 = VectorExpr::basis(VecBase::V3);
        assert_eq!(inner(&v3.apply(Tens::T), &v3), JetExpr::g(12));
        // ⟨H∇Δu, ∇u⟩ = ½⟨∇Δu, ∇|∇u|²⟩
        assert_eq!(inner(&v1.apply(Tens::H), &v3), JetExpr::g(6).scale(&RationalFunction::ratio(1, 2)));
    }

    #[test]
    fn outer_square_acts_by_projection() {
        let n = TensorExpr::basis(TensBasis::N);
        let v1 = VectorExpr::basis(VecBase::V1);
        let out = n.apply(&v1);
        assert_eq!(out, VectorExpr::basis(VecBase::V3).mul_scalar(&JetExpr::g(5)));
    }
}
