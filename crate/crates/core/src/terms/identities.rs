//! The identity catalog and the exact verification drivers.

use super::{
    a_alternative, a_integrand, a_range, combination, conformal_scal, conformal_scal_chain_rule,
    conformal_scal_gradient_display, cs_margin_scan, einstein_norm_display, einstein_on_gradient_display,
    einstein_tensor, einstein_tensor_display, gradient_part, gradient_part_display, norm_part, norm_part_display,
    theta2, v_exponent_of_theta, v_factor, Case, Setting, TermError,
};
use crate::ibp::{certify_zero_integral, AnsatzConfig, Certificate};
use crate::jet::{contract, gradient, norm_sq, normal_form, JetExpr, TensorExpr, VectorExpr};
use crate::ring::RationalFunction;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityKind {
    /// `left - right` must vanish in normal form.
    Pointwise,
    /// `∫ left = ∫ right`; pointwise or modulo a certified divergence.
    Integral,
    /// A sign claim about a polynomial in `n`.
    Inequality,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    ScalConformal,
    ScalGradient,
    EinsteinTensor,
    EinsteinNorm,
    EinsteinOnGradient,
    GradientPart,
    NormPart,
    ThetaSplit,
    /// Second displayed form of `A_i` against the first.
    AltForm(usize),
    Combination,
    Assembly,
    CsMargin,
}

impl Identity {
    /// The pointwise identities of a case, in catalog order.
    pub fn pointwise(case: Case) -> Vec<Identity> {
        use Identity::*;
        let mut ids = vec![
            ScalConformal,
            ScalGradient,
            EinsteinTensor,
            EinsteinNorm,
            EinsteinOnGradient,
            GradientPart,
            NormPart,
            ThetaSplit,
        ];
        let alts: &[usize] = match case {
            Case::Dim4 => &[2, 5, 7, 10],
            Case::General => &[3, 5, 9],
        };
        ids.extend(alts.iter().map(|&i| AltForm(i)));
        ids
    }

    pub fn kind(self) -> IdentityKind {
        match self {
            Identity::Combination => IdentityKind::Integral,
            Identity::CsMargin => IdentityKind::Inequality,
            _ => IdentityKind::Pointwise,
        }
    }

    /// Stable identifier such as `dim4/scal-conformal` or `general/alt-form-a5`.
    pub fn id(self, case: Case) -> String {
        let tail = match self {
            Identity::ScalConformal => "scal-conformal".to_string(),
            Identity::ScalGradient => "scal-gradient".to_string(),
            Identity::EinsteinTensor => "einstein-tensor".to_string(),
            Identity::EinsteinNorm => "einstein-norm".to_string(),
            Identity::EinsteinOnGradient => "einstein-on-gradient".to_string(),
            Identity::GradientPart => "theta-gradient-part".to_string(),
            Identity::NormPart => "theta-norm-part".to_string(),
            Identity::ThetaSplit => "theta-split".to_string(),
            Identity::AltForm(i) => format!("alt-form-a{i}"),
            Identity::Combination => "combination".to_string(),
            Identity::Assembly => "assembly".to_string(),
            Identity::CsMargin => return "cs-margin".to_string(),
        };
        format!("{}/{tail}", case.name())
    }

    /// The formula the identity checks.
    pub fn anchor(self, case: Case) -> String {
        let dim4 = case == Case::Dim4;
        match self {
            Identity::ScalConformal if dim4 => "Scal_{e^{2u}g} = e^{-3u}(6Δe^u + Scal e^u)".into(),
            Identity::ScalConformal => {
                "Scal_{u^{4/(n-4)}g} = u^{-(n+2)/(n-4)}(4(n-1)/(n-2) Δ(u^{(n-2)/(n-4)}) + Scal u^{(n-2)/(n-4)})".into()
            }
            Identity::ScalGradient => "∇Scal_{g_v} in terms of ∇Δu, ∇u, ∇|∇u|²".into(),
            Identity::EinsteinTensor if dim4 => "E_{e^{2u}g} = -2∇²u + 2∇u⊗∇u - ½(Δu + |∇u|²)g".into(),
            Identity::EinsteinTensor => "E_{g_v} = (n-2)v^{-1/2}(∇²√v + (1/n)Δ√v g)".into(),
            Identity::EinsteinNorm if dim4 => "|E|² = 4|∇²u|² - 4⟨∇|∇u|²,∇u⟩ - (Δu)² - 2|∇u|²Δu + 3|∇u|⁴".into(),
            Identity::EinsteinNorm => "|E_{g_v}|² expanded in u".into(),
            Identity::EinsteinOnGradient if dim4 => "|E∇(e^{-2u})|² expanded in u".into(),
            Identity::EinsteinOnGradient => "|E∇(u^{-4/(n-4)})|² = 16(n-2)²/(n-4)⁴ u^{-4(n-2)/(n-4)}(…)".into(),
            Identity::GradientPart => "|∇Scal_{g_v} + (3n-4)/(2(n-2)) E∇v|² - ((3n-4)/(2(n-2)))²|E∇v|²".into(),
            Identity::NormPart => "|E|²(2(n²-2)Scal_{g_v} v + 4(n-1)Scal v² + n(n-1)²|∇v|²)".into(),
            Identity::ThetaSplit => "Θ²(v) = v^{(1-n)/2}(gradient part + norm part/(n-2)²)".into(),
            Identity::AltForm(i) => format!("A_{i}: second displayed form = first displayed form"),
            Identity::Combination if dim4 => {
                "36A_0 - 36A_1 - 18A_2 + 18A_3 + 144A_4 + 84A_5 + 42A_6 + 12A_7 - 60A_8 + 18A_9 - 20Scal A_10 + 10Scal A_11 - 12Scal A_12".into()
            }
            Identity::Combination => "16(n-1)²/(n-4)² A_0 - 16(n-1)²/(n-4)² A_1 + … = ∫ target".into(),
            Identity::Assembly if dim4 => "36(p-4)∫ e^{(p-1)u}|∇u|² = ∫ Θ²(e^{-2u})".into(),
            Identity::Assembly => "… = ∫ Θ²(u^{-4/(n-4)})".into(),
            Identity::CsMargin => "4n(n-1)² - (3n-4)² > 0".into(),
        }
    }
}

/// Named components of `left - right` after normal form.
#[derive(Clone, Debug, PartialEq)]
pub struct Residual {
    pub parts: Vec<(String, JetExpr)>,
}

impl Residual {
    fn scalar(left: &JetExpr, right: &JetExpr, s: &Setting) -> Self {
        Residual { parts: vec![("scalar".into(), normal_form(&(left - right), &s.bg))] }
    }

    fn vector(left: &VectorExpr, right: &VectorExpr, s: &Setting) -> Self {
        let d = left - right;
        Residual {
            parts: d.terms().map(|(t, c)| (t.notation(), normal_form(c, &s.bg))).collect(),
        }
    }

    fn tensor(left: &TensorExpr, right: &TensorExpr, s: &Setting) -> Self {
        let d = left - right;
        Residual {
            parts: d.terms().map(|(b, c)| (b.notation().to_string(), normal_form(c, &s.bg))).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|(_, e)| e.is_zero())
    }

    pub fn notation(&self) -> String {
        let nz: Vec<String> = self
            .parts
            .iter()
            .filter(|(_, e)| !e.is_zero())
            .map(|(k, e)| if k == "scalar" { e.notation() } else { format!("[{k}] {}", e.notation()) })
            .collect();
        if nz.is_empty() {
            "0".into()
        } else {
            nz.join("; ")
        }
    }
}

/// `left - right` for a pointwise identity.
pub fn verify_pointwise(s: &Setting, id: Identity) -> Result<Residual, TermError> {
    let general = s.case == Case::General;
    Ok(match id {
        Identity::ScalConformal => Residual::scalar(&conformal_scal_chain_rule(s)?, &conformal_scal(s), s),
        Identity::ScalGradient => {
            Residual::vector(&gradient(&conformal_scal_chain_rule(s)?)?, &conformal_scal_gradient_display(s), s)
        }
        Identity::EinsteinTensor => Residual::tensor(&einstein_tensor(s)?, &einstein_tensor_display(s), s),
        Identity::EinsteinNorm => {
            let e = einstein_tensor(s)?;
            Residual::scalar(&contract(&e, &e, &s.bg), &einstein_norm_display(s), s)
        }
        Identity::EinsteinOnGradient => {
            let ev = einstein_tensor(s)?.apply(&gradient(&v_factor(s))?);
            Residual::scalar(&norm_sq(&ev), &einstein_on_gradient_display(s), s)
        }
        Identity::GradientPart => Residual::scalar(&gradient_part(s)?, &gradient_part_display(s), s),
        Identity::NormPart => {
            let built = norm_part(s)?;
            let built = if general { built } else { built.scale(&RationalFunction::ratio(1, 4)) };
            Residual::scalar(&built, &norm_part_display(s), s)
        }
        Identity::ThetaSplit => {
            let norm = if general { norm_part_display(s).scale(&s.c("1/(n-2)^2")) } else { norm_part_display(s) };
            let split = &v_exponent_of_theta(s) * &(&gradient_part_display(s) + &norm);
            Residual::scalar(&theta2(s)?, &split, s)
        }
        Identity::AltForm(i) => {
            let first = a_integrand(s, i)?.integrand;
            let second = a_alternative(s, i).ok_or(TermError::BadIndex(i))?;
            Residual::scalar(&second, &first, s)
        }
        Identity::Assembly => final_assembly(s)?,
        Identity::Combination => {
            let out = verify_combination(s)?;
            Residual { parts: vec![("scalar".into(), out.pointwise)] }
        }
        Identity::CsMargin => {
            let (_, ok) = cs_margin_scan(64);
            let r = if ok { JetExpr::zero() } else { JetExpr::one() };
            Residual { parts: vec![("scalar".into(), r)] }
        }
    })
}

#[derive(Clone, Debug, PartialEq)]
pub enum CombinationStatus {
    PointwiseZero,
    /// The residual is an exact divergence.
    CertifiedDivergence(Certificate),
    Fail(String),
}

impl CombinationStatus {
    pub fn passed(&self) -> bool {
        !matches!(self, CombinationStatus::Fail(_))
    }

    pub fn name(&self) -> &'static str {
        match self {
            CombinationStatus::PointwiseZero => "exact-zero",
            CombinationStatus::CertifiedDivergence(_) => "certified-divergence",
            CombinationStatus::Fail(_) => "fail",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CombinationOutcome {
    /// `Σ cᵢ R^{kᵢ} A_i - target` in normal form.
    pub pointwise: JetExpr,
    pub status: CombinationStatus,
}

/// Checks the stated coefficient combination against its target.
pub fn verify_combination(s: &Setting) -> Result<CombinationOutcome, TermError> {
    let combo = combination(s);
    verify_combination_with(s, &combo.coefficients, &combo.target)
}

/// Same check with caller-supplied coefficients, used for negative controls.
pub fn verify_combination_with(
    s: &Setting,
    coefficients: &[(usize, RationalFunction, u32)],
    target: &JetExpr,
) -> Result<CombinationOutcome, TermError> {
    let mut acc = JetExpr::zero();
    for i in a_range(s.case) {
        let Some((_, c, k)) = coefficients.iter().find(|(j, _, _)| *j == i) else { continue };
        let a = a_integrand(s, i)?.integrand;
        acc = &acc + &(&s.coefficient(c, *k) * &a);
    }
    let pointwise = normal_form(&(&acc - target), &s.bg);
    if pointwise.is_zero() {
        return Ok(CombinationOutcome { pointwise, status: CombinationStatus::PointwiseZero });
    }
    let cfg = AnsatzConfig::new(s.case == Case::General);
    let status = match certify_zero_integral("combination", &pointwise, &s.bg, &cfg) {
        Ok(cert) => CombinationStatus::CertifiedDivergence(cert),
        Err(e) => CombinationStatus::Fail(e.to_string()),
    };
    Ok(CombinationOutcome { pointwise, status })
}

/// The combination target against Θ² built from its definition.
pub fn final_assembly(s: &Setting) -> Result<Residual, TermError> {
    Ok(Residual::scalar(&combination(s).target, &theta2(s)?, s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_all(s: &Setting) {
        for id in Identity::pointwise(s.case) {
            let r = verify_pointwise(s, id).unwrap();
            assert!(r.is_zero(), "{} at {}: {}", id.id(s.case), s.label(), r.notation());
        }
    }

    #[test]
    fn pointwise_dim4() {
        check_all(&Setting::dim4());
    }

    #[test]
    fn pointwise_general_symbolic() {
        check_all(&Setting::general_symbolic());
    }

    #[test]
    fn pointwise_general_specialized() {
        for s in Setting::specializations() {
            check_all(&s);
        }
    }

    #[test]
    fn assembly_both_cases() {
        for s in [Setting::dim4(), Setting::general_symbolic()] {
            let r = final_assembly(&s).unwrap();
            assert!(r.is_zero(), "{}: {}", s.label(), r.notation());
        }
    }

    #[test]
    fn combination_both_cases() {
        for s in [Setting::dim4(), Setting::general_symbolic()] {
            let out = verify_combination(&s).unwrap();
            assert!(out.status.passed(), "{}: {:?}", s.label(), out.status);
        }
    }

    #[test]
    fn perturbed_combination_fails() {
        let s = Setting::dim4();
        let mut combo = combination(&s);
        combo.coefficients[0].1 = RationalFunction::int(35);
        let out = verify_combination_with(&s, &combo.coefficients, &combo.target).unwrap();
        assert!(!out.status.passed());
    }

    #[test]
    fn ids_are_descriptive() {
        assert_eq!(Identity::ScalConformal.id(Case::Dim4), "dim4/scal-conformal");
        assert_eq!(Identity::AltForm(5).id(Case::General), "general/alt-form-a5");
    }
}
