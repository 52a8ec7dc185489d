//! Gradient, divergence and Hessian on the jet algebra.

use super::expr::{JetExpr, JetPoly};
use super::generator::{Gen, Tens, VecBase};
use super::tensor::{contract_basis, inner, TensBasis, TensorExpr, VecTerm, VectorExpr};
use super::weight::Weight;
use super::{Background, JetError};
use crate::ring::{Monomial, RationalFunction};

fn grad_gen(g: &Gen) -> Result<Option<VectorExpr>, JetError> {
    let b = |v| Some(VectorExpr::basis(v));
    match g {
        Gen::R => Ok(None),
        Gen::U => Ok(b(VecBase::V3)),
        Gen::G(1) => Ok(b(VecBase::V1)),
        Gen::G(2) => Ok(b(VecBase::V2)),
        Gen::G(9) => Ok(b(VecBase::V4)),
        // ∇(∇Δu,∇u) = ∇²Δu(∇u) + ∇²u(∇Δu)
        Gen::G(5) => Ok(Some(
            &VectorExpr::basis(VecBase::V3).apply(Tens::T) + &VectorExpr::basis(VecBase::V1).apply(Tens::H),
        )),
        other => Err(JetError::GradientNotClosed(other.clone())),
    }
}

/// `∇f`. Only functions of `u`, `Δu`, `|∇u|²`, `(∇Δu,∇u)` and `Δ²u` have
/// gradients inside the vector catalog; anything else is an error.
pub fn gradient(f: &JetExpr) -> Result<VectorExpr, JetError> {
    let w = JetExpr::new(f.weight().clone(), JetPoly::one());
    let mut out = VectorExpr::zero();
    // derivative of the prefactor
    let dw = match f.weight() {
        Weight::Unit => JetExpr::zero(),
        Weight::Exp(k) => JetExpr::int(*k),
        Weight::Pow(a) => JetExpr::monomial(a.clone(), Monomial::power(Gen::U, -1)),
    };
    if !dw.is_zero() {
        let coef = &(&dw * &w) * &JetExpr::new(Weight::Unit, f.poly().clone());
        out = &out + &VectorExpr::term(coef, VecTerm::base(VecBase::V3));
    }
    for g in f.generators() {
        let Some(v) = grad_gen(&g)? else { continue };
        let partial = f.poly().partial(&g);
        let coef = &w * &JetExpr::new(Weight::Unit, partial);
        out = &out + &v.mul_scalar(&coef);
    }
    Ok(out)
}

fn div_term(t: &VecTerm, bg: &Background) -> Result<JetExpr, JetError> {
    let base = t.base_vector();
    match t.tensors() {
        [] => match base {
            VecBase::V3 => Ok(-JetExpr::g(1)),
            VecBase::V1 => Ok(-JetExpr::g(9)),
            VecBase::V2 => Ok(-JetExpr::g(13)),
            VecBase::V4 => Err(JetError::DivergenceNotClosed(t.notation())),
        },
        [s] => {
            let b = VectorExpr::basis(base);
            let div_s = div_tensor(*s, bg);
            let grad_b = match base {
                VecBase::V3 => TensBasis::H,
                VecBase::V1 => TensBasis::T,
                _ => return Err(JetError::DivergenceNotClosed(t.notation())),
            };
            let s_basis = match s {
                Tens::H => TensBasis::H,
                Tens::T => TensBasis::T,
            };
            Ok(&inner(&div_s, &b) + &contract_basis(s_basis, grad_b, bg))
        }
        _ => Err(JetError::DivergenceNotClosed(t.notation())),
    }
}

/// `div(∇²u) = -∇Δu + (R/n)∇u` and `div(∇²Δu) = -∇Δ²u + (R/n)∇Δu`.
pub fn div_tensor(s: Tens, bg: &Background) -> VectorExpr {
    let (lead, tail) = match s {
        Tens::H => (VecBase::V1, VecBase::V3),
        Tens::T => (VecBase::V4, VecBase::V1),
    };
    &VectorExpr::basis(tail).mul_scalar(&bg.r_over_n()) - &VectorExpr::basis(lead)
}

/// `div W` (the result still contains aliases; apply the normal form).
pub fn divergence(w: &VectorExpr, bg: &Background) -> Result<JetExpr, JetError> {
    let mut acc = JetExpr::zero();
    for (t, phi) in w.terms() {
        let own = phi * &div_term(t, bg)?;
        let lead = inner(&gradient(phi)?, &VectorExpr::term(JetExpr::one(), t.clone()));
        acc = &(&acc + &own) + &lead;
    }
    Ok(acc)
}

/// `Δf = -div ∇f`
pub fn laplacian(f: &JetExpr, bg: &Background) -> Result<JetExpr, JetError> {
    Ok(-divergence(&gradient(f)?, bg)?)
}

/// `d f / d u` for an expression that depends on `u` alone.
pub fn u_derivative(f: &JetExpr) -> Result<JetExpr, JetError> {
    if f.generators().iter().any(|g| !matches!(g, Gen::U | Gen::R)) {
        return Err(JetError::NotAFunctionOfU(f.notation()));
    }
    let alpha = f.weight().u_exponent();
    let k = match f.weight() {
        Weight::Exp(k) => *k,
        _ => 0,
    };
    let mut poly = JetPoly::zero();
    for (m, c) in f.poly().terms() {
        let j = m.exponent(&Gen::U);
        let factor = &(&alpha + &RationalFunction::int(j as i64)) * c;
        poly.add_term(m.mul(&Monomial::power(Gen::U, -1)), factor);
        if k != 0 {
            poly.add_term(m.clone(), c * &RationalFunction::int(k));
        }
    }
    Ok(JetExpr::new(f.weight().clone(), poly))
}

/// `∇²F(u) = F'(u)∇²u + F''(u)∇u⊗∇u`
pub fn hessian_of_u_function(f: &JetExpr) -> Result<TensorExpr, JetError> {
    let d1 = u_derivative(f)?;
    let d2 = u_derivative(&d1)?;
    Ok(&TensorExpr::term(d1, TensBasis::H) + &TensorExpr::term(d2, TensBasis::N))
}
