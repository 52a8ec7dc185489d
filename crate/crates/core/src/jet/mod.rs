//! Symbolic jets of a function `u` on an Einstein background.
//!
//! Laplacians follow the geometer's sign, `Δ = -div ∇`, so the trace of
//! the Hessian of `u` is `-Δu`.

mod calculus;
mod expr;
mod generator;
mod parse;
mod rewrite;
mod tensor;
mod weight;

pub use calculus::{divergence, gradient, hessian_of_u_function, laplacian, u_derivative, div_tensor};
pub use expr::{sum, JetExpr, JetMonomial, JetPoly};
pub use generator::{Gen, Tens, VecBase};
pub use parse::{parse_monomial, JetParseError};
pub use rewrite::{
    bochner_reduce, bochner_rule, normal_form, normal_poly, weitzenbock_dual_rule, weitzenbock_reduce,
    weitzenbock_rule,
};
pub use tensor::{contract, contract_basis, inner, norm_sq, pair_terms, TensBasis, TensorExpr, VecTerm, VectorExpr};
pub use weight::Weight;

use crate::ring::{RationalFunction, RingError};

/// The ambient dimension, either the formal symbol or a fixed value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Background {
    pub n: RationalFunction,
}

impl Background {
    pub fn symbolic() -> Self {
        Background { n: RationalFunction::n() }
    }

    pub fn fixed(n: i64) -> Self {
        Background { n: RationalFunction::int(n) }
    }

    pub fn is_symbolic(&self) -> bool {
        !self.n.is_constant()
    }

    /// `R/n`, the Ricci eigenvalue.
    pub fn r_over_n(&self) -> JetExpr {
        JetExpr::r().scale(&RationalFunction::one().checked_div(&self.n).expect("dimension is zero"))
    }

    /// Specializes a coefficient written in terms of `n`.
    pub fn coef(&self, c: &RationalFunction) -> Result<RationalFunction, RingError> {
        if self.is_symbolic() {
            Ok(c.clone())
        } else {
            c.subs(&self.n)
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum JetError {
    #[error("incompatible prefactors {0} and {1}")]
    WeightMismatch(String, String),
    #[error("gradient of {0} is outside the vector catalog")]
    GradientNotClosed(Gen),
    #[error("divergence of {0} is outside the catalog")]
    DivergenceNotClosed(String),
    #[error("{0} is not a function of u alone")]
    NotAFunctionOfU(String),
    #[error("specialization hits a pole")]
    Singular,
    #[error(transparent)]
    Ring(#[from] RingError),
}
