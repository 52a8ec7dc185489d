//! Replayable proofs that an integrand is an exact divergence.

use crate::jet::{divergence, normal_form, Background, JetExpr, VectorExpr};
use crate::ring::RationalFunction;

use super::IbpError;

/// `target = Σ cᵢ div(Wᵢ)`, so `∫ target = 0` on a closed manifold.
#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub label: String,
    pub target: JetExpr,
    pub terms: Vec<(RationalFunction, VectorExpr)>,
    /// Number of ansatz columns that were searched.
    pub searched: usize,
}

impl Certificate {
    /// The vector field `Σ cᵢ Wᵢ`.
    pub fn field(&self) -> VectorExpr {
        self.terms
            .iter()
            .fold(VectorExpr::zero(), |acc, (c, w)| &acc + &w.scale(c))
    }

    /// Recomputes every divergence and checks the sum against the target.
    pub fn replay(&self, bg: &Background) -> Result<JetExpr, IbpError> {
        let mut acc = JetExpr::zero();
        for (c, w) in &self.terms {
            acc = &acc + &divergence(w, bg)?.scale(c);
        }
        Ok(normal_form(&(&acc - &self.target), bg))
    }

    pub fn verifies(&self, bg: &Background) -> bool {
        self.replay(bg).is_ok_and(|r| r.is_zero())
    }

    /// The same certificate with `n` fixed (for a symbolic certificate).
    pub fn specialize(&self, n: &RationalFunction) -> Result<Certificate, IbpError> {
        let map = |e: &JetExpr| e.subs_n(n);
        let mut terms = Vec::new();
        for (c, w) in &self.terms {
            let c = c.subs(n).map_err(crate::jet::JetError::from)?;
            let mut nw = VectorExpr::zero();
            for (t, coef) in w.terms() {
                nw = &nw + &VectorExpr::term(map(coef)?, t.clone());
            }
            terms.push((c, nw));
        }
        Ok(Certificate {
            label: self.label.clone(),
            target: map(&self.target)?,
            terms,
            searched: self.searched,
        })
    }

    /// `(coefficient, vector field)` pairs in conventional notation.
    pub fn notation(&self) -> Vec<(String, String)> {
        self.terms
            .iter()
            .map(|(c, w)| (c.to_string(), w.notation()))
            .collect()
    }
}
