//! Conformal change of the metric: scalar curvature, the trace-free Ricci
//! tensor and the Θ² functional, each built from its definition, plus the
//! expanded closed forms they are checked against.

use super::{Case, Setting, TermError};
use crate::jet::{
    contract, gradient, hessian_of_u_function, inner, laplacian, norm_sq, JetExpr, TensBasis, TensorExpr,
    VecBase, VectorExpr,
};

/// `√v`, where the conformal metric is `g_v = v⁻¹ g`: `e^{-u}` in dimension
/// four and `u^{-2/(n-4)}` otherwise.
pub fn sqrt_v(s: &Setting) -> JetExpr {
    match s.case {
        Case::Dim4 => JetExpr::exp_u(-1),
        Case::General => s.u_pow("-2/(n-4)"),
    }
}

fn sqrt_v_inv(s: &Setting) -> JetExpr {
    match s.case {
        Case::Dim4 => JetExpr::exp_u(1),
        Case::General => s.u_pow("2/(n-4)"),
    }
}

pub fn v_factor(s: &Setting) -> JetExpr {
    sqrt_v(s).pow(2)
}

/// Exponent prefactor `v^{(1-n)/2}` of Θ².
pub fn v_exponent_of_theta(s: &Setting) -> JetExpr {
    match s.case {
        Case::Dim4 => JetExpr::exp_u(3),
        Case::General => s.u_pow("2*(n-1)/(n-4)"),
    }
}

/// Scalar curvature of the conformal metric from the transformation law
/// for the conformal Laplacian, expanded by the chain rule.
pub fn conformal_scal_chain_rule(s: &Setting) -> Result<JetExpr, TermError> {
    let r = JetExpr::r();
    Ok(match s.case {
        Case::Dim4 => {
            let eu = JetExpr::exp_u(1);
            let inner = &laplacian(&eu, &s.bg)?.scale_int(6) + &(&r * &eu);
            &JetExpr::exp_u(-3) * &inner
        }
        Case::General => {
            let w = s.u_pow("(n-2)/(n-4)");
            let inner = &laplacian(&w, &s.bg)?.scale(&s.c("4*(n-1)/(n-2)")) + &(&r * &w);
            &s.u_pow("-(n+2)/(n-4)") * &inner
        }
    })
}

/// The expanded closed form of the conformal scalar curvature.
pub fn conformal_scal(s: &Setting) -> JetExpr {
    match s.case {
        Case::Dim4 => &JetExpr::exp_u(-2) * &s.lin(&[("6", "g1"), ("-6", "g2"), ("1", "R")]),
        Case::General => {
            &s.u_pow("-n/(n-4)")
                * &s.lin(&[("4*(n-1)/(n-4)", "g1"), ("-8*(n-1)/(n-4)^2", "u^-1 g2"), ("1", "R u")])
        }
    }
}

/// Closed form of the gradient of the conformal scalar curvature.
pub fn conformal_scal_gradient_display(s: &Setting) -> VectorExpr {
    use VecBase::*;
    match s.case {
        Case::Dim4 => s
            .vec_lin(&[
                ("6", "1", V1),
                ("-12", "g1", V3),
                ("-6", "1", V2),
                ("12", "g2", V3),
                ("-2", "R", V3),
            ])
            .mul_scalar(&JetExpr::exp_u(-2)),
        Case::General => s
            .vec_lin(&[
                ("n-1", "1", V1),
                ("-n*(n-1)/(n-4)", "u^-1 g1", V3),
                ("-2*(n-1)/(n-4)", "u^-1", V2),
                ("4*(n-1)*(n-2)/(n-4)^2", "u^-2 g2", V3),
                ("-1", "R", V3),
            ])
            .mul_scalar(&s.u_pow("-n/(n-4)").scale(&s.c("4/(n-4)"))),
    }
}

/// Trace-free Ricci tensor of `g_v` on an Einstein background:
/// `(n-2) √v⁻¹ (∇²√v + (1/n) Δ√v g)`.
pub fn einstein_tensor(s: &Setting) -> Result<TensorExpr, TermError> {
    let w = sqrt_v(s);
    let hess = hessian_of_u_function(&w)?;
    let lap = laplacian(&w, &s.bg)?;
    let trace_part = TensorExpr::term(lap.scale(&s.c("1/n")), TensBasis::G);
    let scale = sqrt_v_inv(s).scale(&s.c("n-2"));
    Ok((&hess + &trace_part).mul_scalar(&scale))
}

/// Closed form of the trace-free Ricci tensor.
pub fn einstein_tensor_display(s: &Setting) -> TensorExpr {
    let t = |c: &str, m: &str, b: TensBasis| TensorExpr::term(s.lin(&[(c, m)]), b);
    match s.case {
        Case::Dim4 => {
            let g = TensorExpr::term(s.lin(&[("-1/2", "g1"), ("-1/2", "g2")]), TensBasis::G);
            &(&t("-2", "1", TensBasis::H) + &t("2", "1", TensBasis::N)) + &g
        }
        Case::General => {
            let g = TensorExpr::term(s.lin(&[("1/n", "g1"), ("(n-2)/(n*(n-4))", "u^-1 g2")]), TensBasis::G);
            let bracket = &(&t("1", "1", TensBasis::H) + &t("-(n-2)/(n-4)", "u^-1", TensBasis::N)) + &g;
            bracket.mul_scalar(&s.lin(&[("-2*(n-2)/(n-4)", "u^-1")]))
        }
    }
}

/// Closed form of `|E|²`.
pub fn einstein_norm_display(s: &Setting) -> JetExpr {
    match s.case {
        Case::Dim4 => s.lin(&[("4", "g3"), ("-4", "g4"), ("-1", "g1^2"), ("-2", "g2 g1"), ("3", "g2^2")]),
        Case::General => {
            &s.lin(&[("4*(n-2)^2/(n-4)^2", "u^-2")])
                * &s.lin(&[
                    ("1", "g3"),
                    ("-(n-2)/(n-4)", "u^-1 g4"),
                    ("-1/n", "g1^2"),
                    ("-2*(n-2)/(n*(n-4))", "u^-1 g2 g1"),
                    ("(n-1)*(n-2)^2/(n*(n-4)^2)", "u^-2 g2^2"),
                ])
        }
    }
}

/// Closed form of `|E ∇v|²`.
pub fn einstein_on_gradient_display(s: &Setting) -> JetExpr {
    match s.case {
        Case::Dim4 => {
            &JetExpr::exp_u(-4)
                * &s.lin(&[
                    ("4", "g8"),
                    ("4", "g4 g1"),
                    ("-12", "g2 g4"),
                    ("1", "g2 g1^2"),
                    ("-6", "g2^2 g1"),
                    ("9", "g2^3"),
                ])
        }
        Case::General => {
            &s.u_pow("-4*(n-2)/(n-4)").scale(&s.c("16*(n-2)^2/(n-4)^4"))
                * &s.lin(&[
                    ("1", "g8"),
                    ("4/n", "g4 g1"),
                    ("-4*(n-1)*(n-2)/(n*(n-4))", "u^-1 g2 g4"),
                    ("4/n^2", "g2 g1^2"),
                    ("-8*(n-1)*(n-2)/(n^2*(n-4))", "u^-1 g2^2 g1"),
                    ("4*(n-1)^2*(n-2)^2/(n^2*(n-4)^2)", "u^-2 g2^3"),
                ])
        }
    }
}

/// `|∇S + c E∇v|² - c²|E∇v|²` with `c = (3n-4)/(2(n-2))`, built from the
/// definitions of `S = Scal_{g_v}` and `E`.
pub fn gradient_part(s: &Setting) -> Result<JetExpr, TermError> {
    let scal = conformal_scal_chain_rule(s)?;
    let grad_scal = gradient(&scal)?;
    let e = einstein_tensor(s)?;
    let ev = e.apply(&gradient(&v_factor(s))?);
    let c = s.c("(3*n-4)/(2*(n-2))");
    let shifted = &grad_scal + &ev.scale(&c);
    Ok(&norm_sq(&shifted) - &norm_sq(&ev).scale(&(&c * &c)))
}

/// `|E|² (2(n²-2) S v + 4(n-1) R v² + n(n-1)² |∇v|²)`, built from the
/// definitions (the factor `1/(n-2)²` of Θ² is not included).
pub fn norm_part(s: &Setting) -> Result<JetExpr, TermError> {
    let scal = conformal_scal_chain_rule(s)?;
    let e = einstein_tensor(s)?;
    let v = v_factor(s);
    let grad_v = gradient(&v)?;
    let bracket = &(&(&scal * &v).scale(&s.c("2*(n^2-2)")) + &(&JetExpr::r() * &v.pow(2)).scale(&s.c("4*(n-1)")))
        + &inner(&grad_v, &grad_v).scale(&s.c("n*(n-1)^2"));
    Ok(&contract(&e, &e, &s.bg) * &bracket)
}

/// `Θ²(v) = v^{(1-n)/2} (gradient part + |E|²(…)/(n-2)²)`.
pub fn theta2(s: &Setting) -> Result<JetExpr, TermError> {
    let body = &gradient_part(s)? + &norm_part(s)?.scale(&s.c("1/(n-2)^2"));
    Ok(&v_exponent_of_theta(s) * &body)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jet::normal_form;

    #[test]
    fn constant_factor_scalar_curvature() {
        // u constant: every jet vanishes, leaving the pure scaling of R
        let s = Setting::dim4();
        let scal = conformal_scal(&s);
        let at_const = scal.poly().coeff(&crate::ring::Monomial::var(crate::jet::Gen::R));
        assert!(at_const.is_one());
    }

    #[test]
    fn chain_rule_matches_closed_form_dim4() {
        let s = Setting::dim4();
        let d = &conformal_scal_chain_rule(&s).unwrap() - &conformal_scal(&s);
        assert!(normal_form(&d, &s.bg).is_zero());
    }

    #[test]
    fn theta_vanishes_without_gradients() {
        // every term of Θ² carries a derivative of u
        let s = Setting::general_symbolic();
        let t = normal_form(&theta2(&s).unwrap(), &s.bg);
        assert!(t.poly().terms().all(|(m, _)| m.factors().iter().any(|(g, _)| matches!(g, crate::jet::Gen::G(_)))));
    }
}
