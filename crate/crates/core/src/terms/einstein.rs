//! Constants of the Q-curvature and the Paneitz operator on Einstein manifolds.

use super::{Case, TermError};
use crate::ring::{parse_rf, RationalFunction, UPoly};

fn rf(text: &str) -> RationalFunction {
    parse_rf(text).expect("constant formula")
}

/// `Q = (n+2)(n-2) R² / (8 n (n-1)²)`
pub fn q_einstein(r: &RationalFunction, n: &RationalFunction) -> RationalFunction {
    let f = rf("(n+2)*(n-2)/(8*n*(n-1)^2)").subs(n).expect("n = 0 or 1");
    &f * &(r * r)
}

/// `(c2, c1, c0)` with `P = c2 Δ² + c1 Δ + c0`.
pub fn paneitz_einstein(
    r: &RationalFunction,
    n: &RationalFunction,
) -> (RationalFunction, RationalFunction, RationalFunction) {
    let c1 = &rf("(n^2-2*n-4)/(2*n*(n-1))").subs(n).expect("n = 0 or 1") * r;
    let c0 = &rf("(n-4)/2").subs(n).unwrap() * &q_einstein(r, n);
    (RationalFunction::one(), c1, c0)
}

/// The general definition of Q evaluated on an Einstein metric, where
/// `ΔScal = 0` and `|Ric|² = R²/n`.
pub fn q_curvature_definition_einstein(r: &RationalFunction, n: &RationalFunction) -> RationalFunction {
    let lap_scal = RationalFunction::zero();
    let ric_sq = r * r / n.clone();
    let a = rf("1/(2*(n-1))").subs(n).unwrap();
    let b = rf("(n^3-4*n^2+16*n-16)/(8*(n-1)^2*(n-2)^2)").subs(n).unwrap();
    let c = rf("2/(n-2)^2").subs(n).unwrap();
    &(&(&a * &lap_scal) + &(&b * &(r * r))) - &(&c * &ric_sq)
}

/// `4n(n-1)² - (3n-4)²`, the slack in the Cauchy–Schwarz bound used for
/// nonnegativity of Θ².
pub fn cs_margin() -> RationalFunction {
    rf("4*n*(n-1)^2 - (3*n-4)^2")
}

/// Values of the margin for `3 ≤ n ≤ max_n` and whether all are positive
/// together with a positive leading coefficient.
pub fn cs_margin_scan(max_n: i64) -> (Vec<(i64, i64)>, bool) {
    let poly: UPoly = cs_margin().numer().clone();
    let values: Vec<(i64, i64)> = (3..=max_n)
        .map(|n| {
            let v = poly.eval(&crate::ring::q(n, 1));
            (n, v.to_integer().try_into().expect("small value"))
        })
        .collect();
    let lead_positive = poly.leading().is_some_and(|c| c > &crate::ring::q(0, 1));
    let ok = lead_positive && values.iter().all(|&(_, v)| v > 0);
    (values, ok)
}

/// How a constant-Q conformal factor is normalized to the model equation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Normalization {
    /// `ũ = u + shift` (dimension four).
    Shift(f64),
    /// `ũ = factor · u` (other dimensions).
    Factor(f64),
}

/// Dimension four: `ũ = u + ¼ ln Q̃`; otherwise `ũ = ((n-4)/2 · Q̃)^{(n-4)/8} u`.
pub fn normalize_solution(q_tilde: f64, case: Case, n: i64) -> Result<Normalization, TermError> {
    if !(q_tilde > 0.0) {
        return Err(TermError::NonPositiveQ(q_tilde));
    }
    Ok(match case {
        Case::Dim4 => Normalization::Shift(0.25 * q_tilde.ln()),
        Case::General => {
            let k = (n - 4) as f64;
            Normalization::Factor((k / 2.0 * q_tilde).powf(k / 8.0))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(k: i64) -> RationalFunction {
        RationalFunction::int(k)
    }

    #[test]
    fn round_sphere_values() {
        assert_eq!(q_einstein(&c(12), &c(4)), c(6));
        assert_eq!(q_einstein(&c(30), &c(6)), c(24));
        assert_eq!(q_einstein(&c(0), &c(6)), c(0));
        assert_eq!(paneitz_einstein(&c(12), &c(4)), (c(1), c(2), c(0)));
        assert_eq!(paneitz_einstein(&c(30), &c(6)), (c(1), c(10), c(24)));
        assert_eq!(paneitz_einstein(&c(0), &c(5)), (c(1), c(0), c(0)));
    }

    #[test]
    fn definition_agrees_with_einstein_formula() {
        let n = RationalFunction::n();
        let r = c(7);
        assert_eq!(q_curvature_definition_einstein(&r, &n), q_einstein(&r, &n));
    }

    #[test]
    fn margin_values() {
        let (vals, ok) = cs_margin_scan(64);
        assert!(ok);
        assert_eq!(vals[0], (3, 23));
        assert_eq!(vals[1], (4, 80));
    }

    #[test]
    fn normalization_constants() {
        assert_eq!(normalize_solution(1.0, Case::Dim4, 4).unwrap(), Normalization::Shift(0.0));
        let Normalization::Factor(f) = normalize_solution(24.0, Case::General, 6).unwrap() else { panic!() };
        assert!((f - 24f64.powf(0.25)).abs() < 1e-14);
        assert!(normalize_solution(0.0, Case::Dim4, 4).is_err());
    }
}
