//! Rewrite rules that eliminate the alias generators.

use super::expr::{JetExpr, JetPoly};
use super::generator::{Gen, G13, G14, G15};
use super::Background;

fn substitute(e: &JetExpr, g: u8, with: &JetExpr) -> JetExpr {
    debug_assert!(with.weight().is_unit());
    let gen = Gen::G(g);
    if !e.poly().contains_var(&gen) {
        return e.clone();
    }
    e.with_poly(e.poly().substitute(&gen, with.poly()))
}

/// `Δ|∇u|² = 2(∇Δu,∇u) - 2|∇²u|² - 2(R/n)|∇u|²` on an Einstein background.
pub fn bochner_rule(bg: &Background) -> JetExpr {
    let g = JetExpr::g;
    &(&g(5).scale_int(2) - &g(3).scale_int(2)) - &(&bg.r_over_n() * &g(2)).scale_int(2)
}

/// `(Δ̄dΔu, du) = (∇Δ²u, ∇u) - (R/n)(∇Δu, ∇u)`
pub fn weitzenbock_rule(bg: &Background) -> JetExpr {
    &JetExpr::g(10) - &(&bg.r_over_n() * &JetExpr::g(5))
}

/// `(Δ̄du, dΔu) = |∇Δu|² - (R/n)(∇Δu, ∇u)`
pub fn weitzenbock_dual_rule(bg: &Background) -> JetExpr {
    &JetExpr::g(7) - &(&bg.r_over_n() * &JetExpr::g(5))
}

pub fn bochner_reduce(e: &JetExpr, bg: &Background) -> JetExpr {
    substitute(e, G13, &bochner_rule(bg))
}

pub fn weitzenbock_reduce(e: &JetExpr, bg: &Background) -> JetExpr {
    let e = substitute(e, G14, &weitzenbock_rule(bg));
    substitute(&e, G15, &weitzenbock_dual_rule(bg))
}

/// The decision form for equality: no aliases, collected terms.
pub fn normal_form(e: &JetExpr, bg: &Background) -> JetExpr {
    let e = weitzenbock_reduce(&bochner_reduce(e, bg), bg);
    debug_assert!(e.generators().iter().all(|g| !g.is_alias()));
    e
}

/// Polynomial part of the normal form, for callers that only need terms.
pub fn normal_poly(e: &JetExpr, bg: &Background) -> JetPoly {
    normal_form(e, bg).poly().clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RationalFunction;

    #[test]
    fn bochner_example() {
        let bg = Background::symbolic();
        let g = JetExpr::g;
        let n = RationalFunction::n();
        let two_r_over_n = &JetExpr::r() * &JetExpr::constant(&RationalFunction::int(2) / &n);
        let expect = &(&g(5).scale_int(2) - &g(3).scale_int(2)) - &(&two_r_over_n * &g(2));
        assert_eq!(bochner_reduce(&g(13), &bg), expect);
        let lin = bochner_reduce(&(&g(1) * &g(13)), &bg);
        assert_eq!(lin, &g(1) * &expect);
        assert_eq!(bochner_reduce(&g(7), &bg), g(7));
    }

    #[test]
    fn weitzenbock_example() {
        let bg = Background::symbolic();
        let g = JetExpr::g;
        let core = &(&g(14) - &g(11)) + &g(12);
        let out = weitzenbock_reduce(&core, &bg);
        let expect = &(&(&g(10) - &(&bg.r_over_n() * &g(5))) - &g(11)) + &g(12);
        assert_eq!(out, expect);
        assert_eq!(weitzenbock_reduce(&JetExpr::int(3), &bg), JetExpr::int(3));
    }

    #[test]
    fn normal_form_cancels() {
        let bg = Background::symbolic();
        let g = JetExpr::g;
        let e = &g(13) - &bochner_rule(&bg);
        assert!(normal_form(&e, &bg).is_zero());
        let s = &g(1) + &g(2);
        let e = &(&(&s.pow(2) - &g(1).pow(2)) - &(&g(1) * &g(2)).scale_int(2)) - &g(2).pow(2);
        assert!(normal_form(&e, &bg).is_zero());
    }
}
