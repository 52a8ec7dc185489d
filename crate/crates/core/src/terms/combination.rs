//! The coefficient combinations of the `A_i` and the expanded integrands
//! they are claimed to equal, plus the two expanded halves of Θ².

use super::{Case, Setting};
use crate::jet::JetExpr;
use crate::ring::RationalFunction;

/// `Σ cᵢ R^{kᵢ} A_i = ∫ target`.
#[derive(Clone, Debug, PartialEq)]
pub struct Combination {
    /// `(i, cᵢ, kᵢ)`
    pub coefficients: Vec<(usize, RationalFunction, u32)>,
    pub target: JetExpr,
}

impl Combination {
    /// Coefficient of `A_i` as an expression (`cᵢ R^{kᵢ}`).
    pub fn coefficient(&self, s: &Setting, i: usize) -> JetExpr {
        self.coefficients
            .iter()
            .find(|(j, _, _)| *j == i)
            .map_or_else(JetExpr::zero, |(_, c, k)| s.coefficient(c, *k))
    }
}

const DIM4_COEFFS: &[(usize, &str, u32)] = &[
    (0, "36", 0),
    (1, "-36", 0),
    (2, "-18", 0),
    (3, "18", 0),
    (4, "144", 0),
    (5, "84", 0),
    (6, "42", 0),
    (7, "12", 0),
    (8, "-60", 0),
    (9, "18", 0),
    (10, "-20", 1),
    (11, "10", 1),
    (12, "-12", 1),
];

const DIM4_TARGET: &[(&str, &str)] = &[
    ("36", "g7"),
    ("-24", "g6"),
    ("-120", "g5 g1"),
    ("72", "g2 g5"),
    ("-12", "g8"),
    ("-144", "g4 g1"),
    ("48", "g2 g4"),
    ("-24", "g2 g3"),
    ("168", "g3 g1"),
    ("-42", "g1^3"),
    ("18", "g2 g1^2"),
    ("42", "g2^2 g1"),
    ("-18", "g2^3"),
    ("-24", "R g5"),
    ("-32", "R g4"),
    ("40", "R g3"),
    ("-10", "R g1^2"),
    ("20", "R g2 g1"),
    ("6", "R g2^2"),
    ("4", "R^2 g2"),
];

const GENERAL_COEFFS: &[(usize, &str, u32)] = &[
    (0, "16*(n-1)^2/(n-4)^2", 0),
    (1, "-16*(n-1)^2/(n-4)^2", 0),
    (2, "16*(n-1)^2*(n+2)/(n-4)^3", 0),
    (3, "16*(n-1)*(n^2-2)/(n-4)^3", 0),
    (4, "32*(n-1)*(n^2-2)/(n*(n-4)^3)", 0),
    (5, "32*(n-1)*(n-2)/(n-4)^4", 0),
    (6, "-16*(n-1)*(n-2)*(n^3-n^2-4*n+8)/(n*(n-4)^4)", 0),
    (7, "64*(n-1)^2*(n-2)^2/(n*(n-4)^5)", 0),
    (8, "8*n*(n-2)/(n-4)^2", 1),
    (9, "-4*(n^2+2*n-4)/(n-4)^2", 1),
    (10, "-8*(n-1)*(n^2-12)/(n-4)^3", 1),
    (11, "-(n-2)*(n+2)/(n*(n-4))", 2),
];

const GENERAL_TARGET: &[(&str, &str)] = &[
    ("2*(n-1)^2", "g7"),
    ("-2*n*(n-1)/(n-4)", "u^-1 g6"),
    ("-4*(n-1)*(n^3-n^2-3*n+4)/(n*(n-4))", "u^-1 g5 g1"),
    ("4*(n-1)^2*(n-2)*(n+4)/(n*(n-4)^2)", "u^-2 g2 g5"),
    ("-4*(n-1)*(n-2)/(n-4)^2", "u^-2 g8"),
    ("-2*(n-1)*(n-2)*(n+2)*(2*n^2-5*n+4)/(n*(n-4)^2)", "u^-2 g4 g1"),
    ("8*(n-1)*(n-2)*(3*n^2-9*n+4)/(n*(n-4)^3)", "u^-3 g2 g4"),
    ("-8*(n-1)*(n-2)/(n-4)^2", "u^-2 g2 g3"),
    ("4*(n-1)*(n^2-2)/(n-4)", "u^-1 g3 g1"),
    ("-4*(n-1)*(n^2-2)/(n*(n-4))", "u^-1 g1^3"),
    ("2*(n-1)*(n-2)^2*(n-3)*(n+2)/(n*(n-4)^2)", "u^-2 g2 g1^2"),
    ("4*(n-1)*(n-2)*(n^4-4*n^3-3*n^2+26*n-28)/(n*(n-4)^3)", "u^-3 g2^2 g1"),
    ("-8*(n-1)^2*(n-2)^2*(3*n-10)/(n*(n-4)^4)", "u^-4 g2^3"),
    ("-4*(n-1)", "R g5"),
    ("-(n^3-10*n+8)/(n-4)", "R u^-1 g4"),
    ("n^2+2*n-4", "R g3"),
    ("-(n^2+2*n-4)/n", "R g1^2"),
    ("2*(n^2-2*n+2)/(n-4)", "R u^-1 g2 g1"),
    ("(n-1)*(n-2)*(n^3-12*n-8)/(n*(n-4)^2)", "R u^-2 g2^2"),
    ("2", "R^2 g2"),
];

const DIM4_GRADIENT_PART: &[(&str, &str)] = &[
    ("9", "g7"),
    ("-6", "g6"),
    ("-30", "g5 g1"),
    ("18", "g2 g5"),
    ("-3", "g8"),
    ("6", "g4 g1"),
    ("6", "g2 g4"),
    ("24", "g2 g1^2"),
    ("-24", "g2^2 g1"),
    ("-6", "R g5"),
    ("2", "R g4"),
    ("10", "R g2 g1"),
    ("-6", "R g2^2"),
    ("1", "R^2 g2"),
];

const DIM4_NORM_PART: &[(&str, &str)] = &[
    ("-168", "g4 g1"),
    ("24", "g2 g4"),
    ("-24", "g2 g3"),
    ("168", "g3 g1"),
    ("-42", "g1^3"),
    ("-78", "g2 g1^2"),
    ("138", "g2^2 g1"),
    ("-18", "g2^3"),
    ("-40", "R g4"),
    ("40", "R g3"),
    ("-10", "R g1^2"),
    ("-20", "R g2 g1"),
    ("30", "R g2^2"),
];

const GENERAL_GRADIENT_PART: &[(&str, &str)] = &[
    ("(n-1)^2", "g7"),
    ("-n*(n-1)/(n-4)", "u^-1 g6"),
    ("-2*(n-1)*(n^3-n^2-3*n+4)/(n*(n-4))", "u^-1 g5 g1"),
    ("2*(n-1)^2*(n-2)*(n+4)/(n*(n-4)^2)", "u^-2 g2 g5"),
    ("-2*(n-1)*(n-2)/(n-4)^2", "u^-2 g8"),
    ("(n-1)*(n-2)^2*(n+4)/(n*(n-4)^2)", "u^-2 g4 g1"),
    ("4*(n-1)*(n-2)*(2*n^2-7*n+4)/(n*(n-4)^3)", "u^-3 g2 g4"),
    ("(n-1)*(n-2)*(n^2+n-4)/(n-4)^2", "u^-2 g2 g1^2"),
    ("-2*(n-1)*(n-2)*(n^3+3*n^2-16*n+16)/(n*(n-4)^3)", "u^-3 g2^2 g1"),
    ("-8*(n-1)^2*(n-2)^2/(n*(n-4)^3)", "u^-4 g2^3"),
    ("-2*(n-1)", "R g5"),
    ("n/(n-4)", "R u^-1 g4"),
    ("2*(n^3-n^2-3*n+4)/(n*(n-4))", "R u^-1 g2 g1"),
    ("-2*(n-1)*(n-2)*(n+4)/(n*(n-4)^2)", "R u^-2 g2^2"),
    ("1", "R^2 g2"),
];

const GENERAL_NORM_PART: &[(&str, &str)] = &[
    ("-4*(n-1)*(n-2)*(n^2-2)/(n-4)^2", "u^-2 g4 g1"),
    ("8*(n-1)*(n-2)^2/(n-4)^3", "u^-3 g2 g4"),
    ("-8*(n-1)*(n-2)/(n-4)^2", "u^-2 g2 g3"),
    ("4*(n-1)*(n^2-2)/(n-4)", "u^-1 g3 g1"),
    ("-4*(n-1)*(n^2-2)/(n*(n-4))", "u^-1 g1^3"),
    ("-8*(n-1)*(n-2)*(n^2-3)/(n*(n-4)^2)", "u^-2 g2 g1^2"),
    ("4*(n-1)*(n-2)^2*(n^3-n^2-2*n+6)/(n*(n-4)^3)", "u^-3 g2^2 g1"),
    ("-8*(n-1)^2*(n-2)^3/(n*(n-4)^4)", "u^-4 g2^3"),
    ("-(n-2)*(n^2+2*n-4)/(n-4)", "R u^-1 g4"),
    ("n^2+2*n-4", "R g3"),
    ("-(n^2+2*n-4)/n", "R g1^2"),
    ("-2*(n-2)*(n^2+2*n-4)/(n*(n-4))", "R u^-1 g2 g1"),
    ("(n-1)*(n-2)^2*(n^2+2*n-4)/(n*(n-4)^2)", "R u^-2 g2^2"),
];

/// The coefficient vector and the expanded target integrand.
pub fn combination(s: &Setting) -> Combination {
    let (coeffs, target) = match s.case {
        Case::Dim4 => (DIM4_COEFFS, &JetExpr::exp_u(-1) * &s.lin(DIM4_TARGET)),
        Case::General => (
            GENERAL_COEFFS,
            &s.u_pow("-2/(n-4)").scale(&s.c("8/(n-4)^2")) * &s.lin(GENERAL_TARGET),
        ),
    };
    Combination {
        coefficients: coeffs.iter().map(|(i, c, k)| (*i, s.c(c), *k)).collect(),
        target,
    }
}

/// Expanded form of `|∇S + cE∇v|² - c²|E∇v|²`.
pub fn gradient_part_display(s: &Setting) -> JetExpr {
    match s.case {
        Case::Dim4 => JetExpr::exp_u(-4).scale_int(4) * s.lin(DIM4_GRADIENT_PART),
        Case::General => s.u_pow("-2*n/(n-4)").scale(&s.c("16/(n-4)^2")) * s.lin(GENERAL_GRADIENT_PART),
    }
}

/// Expanded form of the `|E|²` half of Θ². In dimension four the factor
/// `1/(n-2)² = 1/4` is already absorbed (coefficients 7, 3, 9); otherwise it
/// is not.
pub fn norm_part_display(s: &Setting) -> JetExpr {
    match s.case {
        Case::Dim4 => JetExpr::exp_u(-4) * s.lin(DIM4_NORM_PART),
        Case::General => s.u_pow("-2*n/(n-4)").scale(&s.c("8*(n-2)^2/(n-4)^2")) * s.lin(GENERAL_NORM_PART),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quoted_coefficients() {
        let d = combination(&Setting::dim4());
        assert_eq!(d.coefficients[4], (4, RationalFunction::int(144), 0));
        let g = combination(&Setting::general_symbolic());
        let a7 = crate::ring::parse_rf("64*(n-1)^2*(n-2)^2/(n*(n-4)^5)").unwrap();
        assert_eq!(g.coefficients[7], (7, a7, 0));
        let a8 = crate::ring::parse_rf("8*n*(n-2)/(n-4)^2").unwrap();
        assert_eq!(g.coefficients[8], (8, a8, 1));
    }
}
