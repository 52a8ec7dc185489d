//! Named objects of the uniqueness argument: Einstein constants, conformal
//! transformation formulas, the Θ² functional, the integrands `A_i` and the
//! coefficient combinations, together with the pointwise verification driver.

mod combination;
mod conformal;
mod einstein;
mod identities;
mod integrands;

pub use combination::{combination, gradient_part_display, norm_part_display, Combination};
pub use conformal::{
    conformal_scal, conformal_scal_chain_rule, conformal_scal_gradient_display, einstein_norm_display,
    einstein_on_gradient_display, einstein_tensor, einstein_tensor_display, gradient_part, norm_part,
    sqrt_v, theta2, v_factor, v_exponent_of_theta,
};
pub use einstein::{
    cs_margin, cs_margin_scan, normalize_solution, paneitz_einstein, q_curvature_definition_einstein,
    q_einstein, Normalization,
};
pub use identities::{
    final_assembly, verify_combination, verify_combination_with, verify_pointwise, CombinationStatus,
    CombinationOutcome, Identity, IdentityKind, Residual,
};
pub use integrands::{a_alternative, a_as_printed, a_integrand, a_range, AIntegrand};

use crate::jet::{parse_monomial, Background, JetExpr, VecBase, VecTerm, VectorExpr};
use crate::ring::{parse_rf, RationalFunction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Case {
    /// `n = 4`, conformal factor `e^{2u}`.
    Dim4,
    /// `n ≠ 4`, conformal factor `u^{4/(n-4)}`.
    General,
}

impl Case {
    pub fn name(self) -> &'static str {
        match self {
            Case::Dim4 => "dim4",
            Case::General => "general",
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum TermError {
    #[error("dimension {0} is not admissible for this case")]
    BadDimension(i64),
    #[error("no integrand A_{0} in this case")]
    BadIndex(usize),
    #[error("normalization needs a positive Q-curvature, got {0}")]
    NonPositiveQ(f64),
    #[error(transparent)]
    Jet(#[from] crate::jet::JetError),
    #[error(transparent)]
    Ibp(#[from] crate::ibp::IbpError),
}

/// A case together with the dimension in which expressions are built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Setting {
    pub case: Case,
    pub bg: Background,
}

impl Setting {
    pub fn dim4() -> Self {
        Setting { case: Case::Dim4, bg: Background::fixed(4) }
    }

    pub fn general_symbolic() -> Self {
        Setting { case: Case::General, bg: Background::symbolic() }
    }

    pub fn general(n: i64) -> Result<Self, TermError> {
        if n < 3 || n == 4 {
            return Err(TermError::BadDimension(n));
        }
        Ok(Setting { case: Case::General, bg: Background::fixed(n) })
    }

    /// Human label, e.g. `general(n)` or `general(n=6)`.
    pub fn label(&self) -> String {
        match (self.case, self.bg.is_symbolic()) {
            (Case::Dim4, _) => "dim4".into(),
            (Case::General, true) => "general(n)".into(),
            (Case::General, false) => format!("general(n={})", self.bg.n),
        }
    }

    pub fn n(&self) -> &RationalFunction {
        &self.bg.n
    }

    /// A coefficient written in `n`, specialized to this setting.
    pub fn c(&self, text: &str) -> RationalFunction {
        let f = parse_rf(text).unwrap_or_else(|e| panic!("coefficient `{text}`: {e}"));
        self.bg.coef(&f).unwrap_or_else(|e| panic!("coefficient `{text}` at n={}: {e}", self.bg.n))
    }

    /// `Σ cᵢ mᵢ` from `(coefficient, monomial)` pairs.
    pub fn lin(&self, terms: &[(&str, &str)]) -> JetExpr {
        let mut acc = JetExpr::zero();
        for (c, m) in terms {
            let mono = parse_monomial(m).unwrap_or_else(|e| panic!("{e}"));
            acc = &acc + &JetExpr::monomial(self.c(c), mono);
        }
        acc
    }

    /// `Σ cᵢ mᵢ Vᵢ` from `(coefficient, monomial, vector)` triples.
    pub fn vec_lin(&self, terms: &[(&str, &str, VecBase)]) -> VectorExpr {
        let mut acc = VectorExpr::zero();
        for (c, m, v) in terms {
            let coef = self.lin(&[(c, m)]);
            acc = &acc + &VectorExpr::term(coef, VecTerm::base(*v));
        }
        acc
    }

    /// `u^α` with α written in `n` (general case).
    pub fn u_pow(&self, alpha: &str) -> JetExpr {
        JetExpr::u_pow(&self.c(alpha))
    }

    /// The prefactor shared by every integrand after rebasing:
    /// `e^{-u}` in dimension four and `u^{-2/(n-4)}` otherwise.
    pub fn base_weight(&self) -> JetExpr {
        match self.case {
            Case::Dim4 => JetExpr::exp_u(-1),
            Case::General => self.u_pow("-2/(n-4)"),
        }
    }

    /// `α(n)·R^k` as an expression.
    pub fn coefficient(&self, c: &RationalFunction, r_power: u32) -> JetExpr {
        JetExpr::constant(c.clone()) * JetExpr::r().pow(r_power)
    }

    pub fn specializations() -> Vec<Setting> {
        [3, 5, 6, 7, 8, 10].iter().map(|&n| Setting::general(n).unwrap()).collect()
    }
}
