//! Numeric double entry for the integral identities: each `∫A_i` against
//! zero and the assembled identity `∫Θ² = c₀ ∫A₀`, by quadrature with a
//! doubling check.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::datum::Datum;
use super::jets::NodeJet;
use super::quad::Quadrature;
use super::theta::theta2_eval;
use super::{Geometry, SphereError};
use crate::jet::JetExpr;
use crate::ring::{q, UPoly};
use crate::terms::{a_integrand, a_range, combination, Case, Setting};

#[derive(Clone, Debug, PartialEq)]
pub struct IntegralRecord {
    pub id: String,
    pub anchor: String,
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    /// Change of the residual's numerator when the node count is doubled.
    pub doubling_change: f64,
    pub passed: bool,
}

/// `|l - r| / (|l| + |r| + 1)`
pub fn relative_residual(lhs: f64, rhs: f64) -> f64 {
    (lhs - rhs).abs() / (lhs.abs() + rhs.abs() + 1.0)
}

/// Cubic with coefficients `k/16`, `|k| ≤ 8`, from a seed.
pub fn random_cubic(seed: u64) -> Datum {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let c = (0..4).map(|_| q(rng.gen_range(-8..=8), 16)).collect();
    Datum::Poly(UPoly::from_coeffs(c))
}

/// `1 + a x + b x² + c x³` with `|a|, |b|, |c| ≤ 1/4`, so the minimum on
/// `[-1, 1]` is at least `1/4`.
pub fn random_positive_cubic(seed: u64) -> Datum {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c = vec![q(1, 1)];
    c.extend((0..3).map(|_| q(rng.gen_range(-4..=4), 16)));
    Datum::Poly(UPoly::from_coeffs(c))
}

/// `base + a·(c₁x + c₂x² + c₃x³)` with `cᵢ` uniform in `[-1, 1]`: random
/// initial data for Newton runs.
pub fn random_perturbation(base: f64, amplitude: f64, seed: u64) -> Datum {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c = vec![base];
    c.extend((0..3).map(|_| amplitude * rng.gen_range(-1.0..=1.0)));
    Datum::FloatPoly(c)
}

/// `(∫f, ∫|f|)` for several expressions at once.
fn integrate_all(
    geom: Geometry,
    datum: &Datum,
    exprs: &[JetExpr],
    count: usize,
) -> Result<Vec<(f64, f64)>, SphereError> {
    let quad = Quadrature::new(geom, count)?;
    let mut out = vec![(0.0, 0.0); exprs.len()];
    for (x, w) in quad.nodes.iter().zip(&quad.weights) {
        let jet = NodeJet::new(geom, datum, *x);
        for (slot, e) in out.iter_mut().zip(exprs) {
            let v = jet.eval(e)?;
            slot.0 += w * v;
            slot.1 += w * v.abs();
        }
    }
    Ok(out)
}

fn setting_for(geom: Geometry) -> Result<Setting, SphereError> {
    match geom.n() {
        4 => Ok(Setting::dim4()),
        n => Ok(Setting::general(n as i64)?),
    }
}

/// Every `∫A_i = 0` (`i ≥ 1`) and the assembled identity on one datum. The
/// residual of `∫A_i = 0` is `|∫A_i| / (∫|A_i| + 1)`; the assembled identity
/// uses [`relative_residual`].
pub fn integral_identities(
    geom: Geometry,
    datum: &Datum,
    nodes: usize,
    tol: f64,
) -> Result<Vec<IntegralRecord>, SphereError> {
    let s = setting_for(geom)?;
    let case = s.case;
    if case == Case::General {
        let quad = Quadrature::new(geom, nodes)?;
        if let Some(x) = quad.nodes.iter().find(|x| datum.value(**x) <= 0.0) {
            return Err(SphereError::NonPositive { x: *x, value: datum.value(*x) });
        }
    }
    let mut exprs = Vec::new();
    for i in a_range(case) {
        exprs.push(a_integrand(&s, i)?.integrand);
    }
    let c0 = combination(&s).coefficient(&s, 0);
    exprs[0] = &c0 * &exprs[0];
    let base = integrate_all(geom, datum, &exprs, nodes)?;
    let fine = integrate_all(geom, datum, &exprs, 2 * nodes)?;
    let label = case.name();

    let mut records = Vec::new();
    for i in a_range(case).skip(1) {
        let (v, a) = base[i];
        let residual = v.abs() / (a + 1.0);
        let doubling_change = (v - fine[i].0).abs() / (a + 1.0);
        records.push(IntegralRecord {
            id: format!("{label}/integral-a{i}"),
            anchor: format!("∫ A_{i} dv = 0"),
            lhs: v,
            rhs: 0.0,
            residual,
            doubling_change,
            passed: residual < tol && doubling_change < tol,
        });
    }

    let theta = |count| -> Result<f64, SphereError> {
        let quad = Quadrature::new(geom, count)?;
        Ok(quad.integrate_values(&theta2_eval(case, datum, &quad)?.values))
    };
    let (lhs, lhs_fine) = (theta(nodes)?, theta(2 * nodes)?);
    let rhs = base[0].0;
    let residual = relative_residual(lhs, rhs);
    let doubling_change = relative_residual(lhs, lhs_fine).max(relative_residual(rhs, fine[0].0));
    let anchor = match case {
        Case::Dim4 => "∫ Θ²(e^{-2u}) dv = 36 ∫ A_0 dv",
        Case::General => "∫ Θ²(u^{-4/(n-4)}) dv = 16(n-1)²/(n-4)² ∫ A_0 dv",
    };
    records.push(IntegralRecord {
        id: format!("{label}/assembly-integral"),
        anchor: anchor.into(),
        lhs,
        rhs,
        residual,
        doubling_change,
        passed: residual < tol && doubling_change < tol,
    });
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_profiles_are_reproducible() {
        assert_eq!(random_cubic(3), random_cubic(3));
        assert_ne!(random_cubic(3), random_cubic(4));
        let Datum::Poly(p) = random_positive_cubic(9) else { panic!() };
        for k in 0..=20 {
            assert!(p.eval_f64(-1.0 + 0.1 * k as f64) >= 0.25);
        }
    }

    #[test]
    fn identities_on_s4() {
        let recs = integral_identities(Geometry::RoundSphere(4), &random_cubic(1), 200, 1e-9).unwrap();
        assert_eq!(recs.len(), 13);
        for r in &recs {
            assert!(r.passed, "{} {}", r.id, r.residual);
        }
    }

    #[test]
    fn identities_on_s5() {
        let recs = integral_identities(Geometry::RoundSphere(5), &random_positive_cubic(2), 200, 1e-9).unwrap();
        assert_eq!(recs.len(), 12);
        for r in &recs {
            assert!(r.passed, "{} {}", r.id, r.residual);
        }
    }

    #[test]
    fn constant_datum_assembly_is_zero() {
        let recs = integral_identities(Geometry::ProductS2xS2, &Datum::constant(0.3), 64, 1e-12).unwrap();
        let last = recs.last().unwrap();
        assert!(last.lhs.abs() < 1e-12 && last.rhs.abs() < 1e-12);
    }

    #[test]
    fn nonpositive_datum_rejected() {
        let d = Datum::FloatPoly(vec![0.0, 1.0]);
        assert!(integral_identities(Geometry::RoundSphere(6), &d, 64, 1e-9).is_err());
    }
}
