//! Conformal factors of the dilations of the round sphere. The formula is
//! admitted only through its residual in the constant-Q equation.

use super::datum::Datum;
use super::pde::Equation;
use super::quad::Quadrature;
use super::{Geometry, SphereError};
use crate::terms::{normalize_solution, Case, Normalization};

/// Dimension four: `u_s = -ln(cosh s + sinh s cos θ)` with `e^{2u_s} g`
/// round. Otherwise: `w_s = (cosh s + sinh s cos θ)^{-(n-4)/2}` with
/// `w_s^{4/(n-4)} g` round.
pub fn mobius_factor(geom: Geometry, s: f64) -> Result<Datum, SphereError> {
    let Geometry::RoundSphere(n) = geom else {
        return Err(SphereError::BadInput("Möbius factors exist only on round spheres".into()));
    };
    let (a, b) = (s.cosh(), s.sinh());
    Ok(if n == 4 {
        Datum::LogLinear { shift: 0.0, a, b }
    } else {
        Datum::PowLinear { scale: 1.0, a, b, gamma: -(n as f64 - 4.0) / 2.0 }
    })
}

/// The Möbius factor normalized to solve the model equation with the
/// critical exponent (`Q̃` of the round metric).
pub fn mobius_solution(geom: Geometry, s: f64) -> Result<Datum, SphereError> {
    let eq = Equation::critical(geom);
    let case = eq.case();
    let norm = normalize_solution(eq.q, case, geom.n() as i64)?;
    Ok(match (mobius_factor(geom, s)?, norm) {
        (Datum::LogLinear { shift, a, b }, Normalization::Shift(c)) => Datum::LogLinear { shift: shift + c, a, b },
        (Datum::PowLinear { scale, a, b, gamma }, Normalization::Factor(c)) => {
            Datum::PowLinear { scale: scale * c, a, b, gamma }
        }
        _ => unreachable!("normalization matches the case"),
    })
}

/// Both sides of the volume bookkeeping for the un-normalized factor:
/// `Q Vol` against `Q̃ ∫e^{4u}` (dimension four), and `Q ∫w` against
/// `Q̃ ∫w^{(n+4)/(n-4)}` otherwise.
pub fn volume_bookkeeping(geom: Geometry, s: f64, quad: &Quadrature) -> Result<(f64, f64), SphereError> {
    let eq = Equation::critical(geom);
    let factor = mobius_factor(geom, s)?;
    let n = geom.n() as f64;
    // the pulled-back metric is round, so Q̃ = Q
    let q_tilde = eq.q;
    Ok(match eq.case() {
        Case::Dim4 => {
            let lhs = eq.q * geom.volume();
            let rhs = q_tilde * quad.integrate(|x| (4.0 * factor.value(x)).exp());
            (lhs, rhs)
        }
        Case::General => {
            let lhs = eq.q * quad.integrate(|x| factor.value(x));
            let rhs = q_tilde * quad.integrate(|x| factor.value(x).powf((n + 4.0) / (n - 4.0)));
            (lhs, rhs)
        }
    })
}

/// The member of the normalized Möbius family with the same value at the
/// pole `x = 1` as `datum`, and the sup distance to it over `nodes`.
pub fn identify_mobius(geom: Geometry, datum: &Datum, nodes: &[f64]) -> Result<(f64, f64), SphereError> {
    // at x = 1 the normalized family is shift - s, or scale e^{γ s}
    let top = datum.value(1.0);
    let s = match mobius_solution(geom, 0.0)? {
        Datum::LogLinear { shift, .. } => shift - top,
        Datum::PowLinear { scale, gamma, .. } => {
            if top <= 0.0 {
                return Err(SphereError::NonPositive { x: 1.0, value: top });
            }
            (top / scale).ln() / gamma
        }
        _ => unreachable!(),
    };
    let m = mobius_solution(geom, s)?;
    let sup = nodes.iter().fold(0.0f64, |a, x| a.max((m.value(*x) - datum.value(*x)).abs()));
    Ok((s, sup))
}
