//! The integrands `A_0 … A_12` (dimension four) and `A_0 … A_11` (other
//! dimensions), transcribed term by term.

use super::{Case, Setting, TermError};
use crate::jet::{normal_form, JetExpr};

/// An integrand with its displayed form and its normal form.
#[derive(Clone, Debug, PartialEq)]
pub struct AIntegrand {
    pub case: Case,
    pub index: usize,
    /// As written, possibly containing Laplacians of `|∇u|²` or connection
    /// Laplacians.
    pub display: JetExpr,
    pub integrand: JetExpr,
}

pub fn a_range(case: Case) -> std::ops::RangeInclusive<usize> {
    match case {
        Case::Dim4 => 0..=12,
        Case::General => 0..=11,
    }
}

type Terms = &'static [(&'static str, &'static str)];

fn dim4_terms(i: usize) -> Terms {
    match i {
        0 => &[("1", "g14"), ("5/12", "R g5"), ("-4", "g2 g9"), ("-2/3", "R g2 g1"), ("-1/6", "R^2 g2")],
        1 => &[("1", "g14"), ("-1", "g11"), ("1", "g12")],
        2 => &[("2", "g11"), ("-1", "g6"), ("-2", "g7"), ("1/2", "R g5")],
        // printed with coefficient -1 on Δu(∇Δu,∇u); see `a_as_printed`
        3 => &[("2", "g12"), ("1", "g6"), ("-2", "g5 g1"), ("-2", "g2 g5")],
        4 => &[("1", "g2 g9"), ("-1", "g6"), ("1", "g2 g5")],
        5 => &[("1", "g6"), ("-2", "g5 g1"), ("2", "g3 g1"), ("-1", "g4 g1"), ("1/2", "R g2 g1")],
        6 => &[("2", "g5 g1"), ("-1", "g1^3"), ("-1", "g2 g1^2")],
        7 => &[("2", "g2 g5"), ("-2", "g2 g3"), ("-1", "g8"), ("1", "g2 g4"), ("-1/2", "R g2^2")],
        8 => &[("1", "g2 g5"), ("1", "g4 g1"), ("-1", "g2 g1^2"), ("-1", "g2^2 g1")],
        9 => &[("2", "g2 g4"), ("-1", "g2^2 g1"), ("-1", "g2^3")],
        10 => &[("2", "g5"), ("-2", "g3"), ("1", "g4"), ("-1/2", "R g2")],
        11 => &[("1", "g5"), ("-1", "g1^2"), ("-1", "g2 g1")],
        12 => &[("1", "g4"), ("-1", "g2 g1"), ("-1", "g2^2")],
        _ => unreachable!(),
    }
}

fn dim4_alternative(i: usize) -> Option<Terms> {
    Some(match i {
        2 => &[("2", "g11"), ("-1", "g6"), ("-2", "g15")],
        5 => &[("1", "g6"), ("-1", "g13 g1"), ("-1", "g4 g1")],
        7 => &[("1", "g2 g13"), ("-1", "g8"), ("1", "g2 g4")],
        10 => &[("1", "g13"), ("1", "g4")],
        _ => return None,
    })
}

/// Exponent of the `u`-power prefactor (general case).
fn general_weight(i: usize) -> &'static str {
    match i {
        0 | 1 | 8 | 9 => "-2/(n-4)",
        2 | 3 | 4 | 10 => "-(n-2)/(n-4)",
        5 | 6 => "-2*(n-3)/(n-4)",
        7 => "-(3*n-10)/(n-4)",
        11 => "(n-6)/(n-4)",
        _ => unreachable!(),
    }
}

fn general_terms(i: usize) -> Terms {
    match i {
        1 => &[("1", "g9 g1"), ("-1", "g7"), ("2/(n-4)", "u^-1 g5 g1")],
        2 => &[("1", "g2 g9"), ("-1", "g6"), ("(n-2)/(n-4)", "u^-1 g2 g5")],
        3 => &[
            ("1", "g6"),
            ("-2", "g5 g1"),
            ("2", "g3 g1"),
            ("-(n-2)/(n-4)", "u^-1 g4 g1"),
            ("2/n", "R g2 g1"),
        ],
        4 => &[("2", "g5 g1"), ("-1", "g1^3"), ("-(n-2)/(n-4)", "u^-1 g2 g1^2")],
        5 => &[
            ("2", "g2 g5"),
            ("-2", "g2 g3"),
            ("-1", "g8"),
            ("2*(n-3)/(n-4)", "u^-1 g2 g4"),
            ("-2/n", "R g2^2"),
        ],
        6 => &[("1", "g2 g5"), ("1", "g4 g1"), ("-1", "g2 g1^2"), ("-2*(n-3)/(n-4)", "u^-1 g2^2 g1")],
        7 => &[("2", "g2 g4"), ("-1", "g2^2 g1"), ("-(3*n-10)/(n-4)", "u^-1 g2^3")],
        8 => &[("1", "g5"), ("-1", "g1^2"), ("-2/(n-4)", "u^-1 g2 g1")],
        9 => &[("2", "g5"), ("-2", "g3"), ("2/(n-4)", "u^-1 g4"), ("-2/n", "R g2")],
        10 => &[("1", "g4"), ("-1", "g2 g1"), ("-(n-2)/(n-4)", "u^-1 g2^2")],
        11 => &[("1", "g1"), ("-(n-6)/(n-4)", "u^-1 g2")],
        _ => unreachable!(),
    }
}

fn general_alternative(i: usize) -> Option<Terms> {
    Some(match i {
        3 => &[("1", "g6"), ("-1", "g13 g1"), ("-(n-2)/(n-4)", "u^-1 g4 g1")],
        5 => &[("1", "g2 g13"), ("-1", "g8"), ("2*(n-3)/(n-4)", "u^-1 g2 g4")],
        9 => &[("1", "g13"), ("2/(n-4)", "u^-1 g4")],
        _ => return None,
    })
}

/// General-case `A_0`: `u^{-2/(n-4)} (Δu - (n+2)/(n-4) u⁻¹|∇u|²) P_g u`, with
/// the Paneitz operator of an Einstein metric.
fn general_a0(s: &Setting) -> JetExpr {
    let left = s.lin(&[("1", "g1"), ("-(n+2)/(n-4)", "u^-1 g2")]);
    let paneitz = s.lin(&[
        ("1", "g9"),
        ("(n^2-2*n-4)/(2*n*(n-1))", "R g1"),
        ("(n-4)*(n+2)*(n-2)/(16*n*(n-1)^2)", "R^2 u"),
    ]);
    &s.u_pow("-2/(n-4)") * &(&left * &paneitz)
}

fn prefactor(s: &Setting, i: usize) -> JetExpr {
    match s.case {
        Case::Dim4 => JetExpr::exp_u(-1),
        Case::General => s.u_pow(general_weight(i)),
    }
}

/// `A_i` in its first displayed form.
pub fn a_integrand(s: &Setting, i: usize) -> Result<AIntegrand, TermError> {
    if !a_range(s.case).contains(&i) {
        return Err(TermError::BadIndex(i));
    }
    let display = match (s.case, i) {
        (Case::Dim4, _) => &prefactor(s, i) * &s.lin(dim4_terms(i)),
        (Case::General, 0) => general_a0(s),
        (Case::General, _) => &prefactor(s, i) * &s.lin(general_terms(i)),
    };
    let integrand = normal_form(&display, &s.bg);
    Ok(AIntegrand { case: s.case, index: i, display, integrand })
}

/// The second displayed form of `A_i`, when there is one.
pub fn a_alternative(s: &Setting, i: usize) -> Option<JetExpr> {
    let terms = match s.case {
        Case::Dim4 => dim4_alternative(i)?,
        Case::General => general_alternative(i)?,
    };
    Some(&prefactor(s, i) * &s.lin(terms))
}

/// Integrands whose printed display differs from the one used here. The
/// printed form of dimension-four `A_3` has `-Δu(∇Δu,∇u)`; it is not an
/// exact divergence, and the coefficient combination only closes with `-2`,
/// where `A_3 = div(2e^{-u}(∇Δu,∇u)∇u)`.
pub fn a_as_printed(s: &Setting, i: usize) -> Option<JetExpr> {
    match (s.case, i) {
        (Case::Dim4, 3) => Some(
            &prefactor(s, i) * &s.lin(&[("2", "g12"), ("1", "g6"), ("-1", "g5 g1"), ("-2", "g2 g5")]),
        ),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn displayed_examples() {
        let s = Setting::dim4();
        let a11 = a_integrand(&s, 11).unwrap().integrand;
        let e = &JetExpr::exp_u(-1) * &s.lin(&[("1", "g5"), ("-1", "g1^2"), ("-1", "g2 g1")]);
        assert_eq!(a11, e);
        let g = Setting::general_symbolic();
        let a11 = a_integrand(&g, 11).unwrap().integrand;
        let e = &g.u_pow("(n-6)/(n-4)") * &g.lin(&[("1", "g1"), ("-(n-6)/(n-4)", "u^-1 g2")]);
        assert_eq!(a11, e);
        assert!(a_integrand(&g, 12).is_err());
    }

    #[test]
    fn printed_dim4_a3_differs_by_one_term() {
        let s = Setting::dim4();
        let d = &a_integrand(&s, 3).unwrap().integrand - &a_as_printed(&s, 3).unwrap();
        assert_eq!(d, &JetExpr::exp_u(-1) * &s.lin(&[("-1", "g5 g1")]));
        assert!(a_as_printed(&Setting::general_symbolic(), 3).is_none());
    }

    #[test]
    fn all_integrands_share_one_weight() {
        for s in [Setting::dim4(), Setting::general_symbolic(), Setting::general(5).unwrap()] {
            let base = s.base_weight();
            for i in a_range(s.case) {
                let a = a_integrand(&s, i).unwrap().integrand;
                assert_eq!(a.weight(), base.weight(), "A_{i} in {}", s.label());
            }
        }
    }
}
