//! Candidate vector fields whose divergences span the search space.

use std::collections::BTreeSet;

use crate::jet::{Gen, JetExpr, JetMonomial, Tens, VecBase, VecTerm, VectorExpr};
use crate::ring::{Monomial, RationalFunction};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnsatzConfig {
    /// Maximal total degree of the scalar multiplier in `Δu` and `|∇u|²`.
    pub degree_bound: u32,
    /// Vector fields the multipliers act on.
    pub bases: Vec<VecTerm>,
    /// Whether powers of `u` may enter the multipliers (general case).
    pub u_powers: bool,
}

impl AnsatzConfig {
    pub fn new(u_powers: bool) -> Self {
        let v = VecTerm::base;
        let applied = |s: Tens, b: VecBase| {
            let w = VectorExpr::basis(b).apply(s);
            let t = w.terms().next().map(|(t, _)| t.clone()).expect("nonzero");
            t
        };
        AnsatzConfig {
            degree_bound: 3,
            bases: vec![
                v(VecBase::V3),
                v(VecBase::V2),
                v(VecBase::V1),
                applied(Tens::H, VecBase::V1),
                applied(Tens::T, VecBase::V3),
            ],
            u_powers,
        }
    }

    pub fn with_degree(mut self, d: u32) -> Self {
        self.degree_bound = d;
        self
    }
}

/// `(derivative order, degree in u)` of a monomial.
pub fn grade(m: &JetMonomial) -> (i64, i64) {
    m.factors().iter().fold((0, 0), |(o, d), (g, e)| {
        let e = *e as i64;
        (o + g.order() as i64 * e, d + g.u_degree() as i64 * e)
    })
}

/// Scalar generators allowed in multipliers.
/// These are exactly the generators with a closed gradient.
const MULTIPLIER_GENS: [Gen; 5] = [Gen::R, Gen::G(1), Gen::G(2), Gen::G(5), Gen::G(9)];

/// Exponent vectors over `MULTIPLIER_GENS` of exact derivative order `order`
/// with at most `bound` non-curvature factors.
fn multipliers(order: i64, bound: u32) -> Vec<JetMonomial> {
    fn rec(k: usize, order: i64, bound: u32, acc: &mut Vec<(Gen, i32)>, out: &mut Vec<JetMonomial>) {
        if order == 0 {
            out.push(Monomial::from_factors(acc.iter().cloned()));
            return;
        }
        if k == MULTIPLIER_GENS.len() {
            return;
        }
        let g = MULTIPLIER_GENS[k].clone();
        let step = g.order() as i64;
        let mut e = 0;
        loop {
            let used = if g == Gen::R { 0 } else { e as u32 };
            if e as i64 * step > order || used > bound {
                break;
            }
            if e > 0 {
                acc.push((g.clone(), e));
            }
            rec(k + 1, order - e as i64 * step, bound - used, acc, out);
            if e > 0 {
                acc.pop();
            }
            e += 1;
        }
    }
    let mut out = Vec::new();
    rec(0, order, bound, &mut Vec::new(), &mut out);
    out
}

/// One column per multiplier, ordered deterministically. Each column is a
/// single term `weight · m · B`.
pub fn columns(target: &JetExpr, cfg: &AnsatzConfig) -> Vec<VectorExpr> {
    let grades: BTreeSet<(i64, i64)> = target.poly().terms().map(|(m, _)| grade(m)).collect();
    let weight = JetExpr::new(target.weight().clone(), crate::jet::JetPoly::one());
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for &(order, udeg) in &grades {
        for base in &cfg.bases {
            let rest = order - 1 - base.order() as i64;
            if rest < 0 {
                continue;
            }
            for mut m in multipliers(rest, cfg.degree_bound) {
                if cfg.u_powers {
                    let k = udeg - grade(&m).1 - base.u_degree() as i64;
                    m = m.mul(&Monomial::power(Gen::U, k as i32));
                }
                if seen.insert((m.clone(), base.clone())) {
                    let coef = &weight * &JetExpr::monomial(RationalFunction::one(), m);
                    out.push(VectorExpr::term(coef, base.clone()));
                }
            }
        }
    }
    out
}
