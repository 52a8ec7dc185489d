//! Θ² computed directly from the conformal factor, without the jet algebra.
//!
//! With `g_v = v⁻¹ g = e^{2φ} g`, `φ = -½ ln v`:
//! `Scal_{g_v} = e^{-2φ}(R + 2(n-1)Δφ - (n-1)(n-2)|∇φ|²)` and
//! `E_{g_v} = (n-2)(-∇²φ + dφ⊗dφ)₀`.

use super::datum::Datum;
use super::quad::Quadrature;
use super::series::Series;
use super::{Geometry, SphereError};
use super::jets::SERIES_LEN;
use crate::terms::Case;

fn dot(a: &Series, b: &Series) -> f64 {
    let x = a.x0;
    (1.0 - x * x) * a.derivative_at(1) * b.derivative_at(1)
}

/// `φ` as a series at `x₀` for the case's conformal factor.
fn phi_series(geom: Geometry, case: Case, datum: &Datum, x0: f64) -> Result<Series, SphereError> {
    let u = datum.series(x0, SERIES_LEN);
    match case {
        Case::Dim4 => Ok(u),
        Case::General => {
            if u.value() <= 0.0 {
                return Err(SphereError::NonPositive { x: x0, value: u.value() });
            }
            let n = geom.n() as f64;
            Ok(u.ln().scale(2.0 / (n - 4.0)))
        }
    }
}

fn scal_series(geom: Geometry, phi: &Series) -> Series {
    let n = geom.n() as f64;
    let len = phi.len();
    let grad_sq = &Series::one_minus_x2(phi.x0, len) * &(&phi.deriv() * &phi.deriv());
    let inner = &(&Series::constant(phi.x0, geom.scal(), len) + &phi.laplacian(geom.factor_dim() as f64).scale(2.0 * (n - 1.0)))
        - &grad_sq.scale((n - 1.0) * (n - 2.0));
    &phi.scale(-2.0).exp() * &inner
}

/// Scalar curvature of `e^{2φ} g` at the node of `φ`.
pub fn conformal_scal_numeric(geom: Geometry, phi: &Series) -> f64 {
    scal_series(geom, phi).value()
}

/// `Θ²(v)` at the node of `φ = -½ ln v`.
pub fn theta2_direct(geom: Geometry, phi: &Series) -> f64 {
    let n = geom.n() as f64;
    let m = geom.factor_dim() as f64;
    let x = phi.x0;
    let s2 = 1.0 - x * x;
    let (p1, p2) = (phi.derivative_at(1), phi.derivative_at(2));
    // A = -∇²φ + dφ⊗dφ: radial, factor-tangential, flat directions
    let a_r = -(-x * p1 + s2 * p2) + s2 * p1 * p1;
    let a_t = x * p1;
    let tr = a_r + (m - 1.0) * a_t;
    let e = |a: f64| (n - 2.0) * (a - tr / n);
    let (e_r, e_t, e_0) = (e(a_r), e(a_t), e(0.0));
    let norm_e = e_r * e_r + (m - 1.0) * e_t * e_t + (n - m) * e_0 * e_0;

    let scal = scal_series(geom, phi);
    let v = phi.scale(-2.0).exp();
    let c = (3.0 * n - 4.0) / (2.0 * (n - 2.0));
    let gradient_part = dot(&scal, &scal) + 2.0 * c * e_r * dot(&scal, &v);
    let vv = v.value();
    let norm_part = norm_e
        * (2.0 * (n * n - 2.0) * scal.value() * vv
            + 4.0 * (n - 1.0) * geom.scal() * vv * vv
            + n * (n - 1.0) * (n - 1.0) * dot(&v, &v));
    vv.powf((1.0 - n) / 2.0) * (gradient_part + norm_part / ((n - 2.0) * (n - 2.0)))
}

#[derive(Clone, Debug, PartialEq)]
pub struct ThetaReport {
    pub values: Vec<f64>,
    pub min: f64,
    pub sup: f64,
    pub l2: f64,
    /// Minimum over nodes of the scalar curvature of the conformal metric.
    pub scal_min: f64,
}

impl ThetaReport {
    pub fn scal_positive(&self) -> bool {
        self.scal_min > 0.0
    }
}

/// Θ² of `e^{-2u}` (dimension four) or `u^{-4/(n-4)}` at every node.
pub fn theta2_eval(case: Case, datum: &Datum, quad: &Quadrature) -> Result<ThetaReport, SphereError> {
    let geom = quad.geom;
    let mut values = Vec::with_capacity(quad.len());
    let mut scal_min = f64::INFINITY;
    for &x in &quad.nodes {
        let phi = phi_series(geom, case, datum, x)?;
        scal_min = scal_min.min(conformal_scal_numeric(geom, &phi));
        values.push(theta2_direct(geom, &phi));
    }
    let min = values.iter().cloned().fold(f64::INFINITY, f64::min);
    let sup = values.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    let sq: Vec<f64> = values.iter().map(|v| v * v).collect();
    let l2 = quad.integrate_values(&sq).sqrt();
    Ok(ThetaReport { values, min, sup, l2, scal_min })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jet::normal_form;
    use crate::sphere::NodeJet;
    use crate::terms::{conformal_scal, theta2, Setting};

    #[test]
    fn conformal_scal_matches_closed_form() {
        let d = Datum::FloatPoly(vec![0.2, 0.3, -0.1, 0.2]);
        let geom = Geometry::RoundSphere(4);
        let s = Setting::dim4();
        let closed = normal_form(&conformal_scal(&s), &s.bg);
        for &x in &[-0.6, 0.1, 0.8] {
            let phi = phi_series(geom, Case::Dim4, &d, x).unwrap();
            let j = NodeJet::new(geom, &d, x);
            let a = conformal_scal_numeric(geom, &phi);
            let b = j.eval(&closed).unwrap();
            assert!((a - b).abs() < 1e-11 * (1.0 + b.abs()), "{a} vs {b}");
        }
    }

    #[test]
    fn direct_theta_matches_jet_algebra() {
        let cases: [(Geometry, Setting, Datum); 4] = [
            (Geometry::RoundSphere(4), Setting::dim4(), Datum::FloatPoly(vec![0.2, 0.3, -0.1, 0.2])),
            (Geometry::ProductS2xS2, Setting::dim4(), Datum::FloatPoly(vec![-0.1, 0.25, 0.3, -0.2])),
            (Geometry::RoundSphere(5), Setting::general(5).unwrap(), Datum::FloatPoly(vec![1.3, 0.2, -0.1, 0.15])),
            (Geometry::RoundSphere(6), Setting::general(6).unwrap(), Datum::FloatPoly(vec![1.1, -0.2, 0.1, 0.1])),
        ];
        for (geom, s, d) in cases {
            let t = normal_form(&theta2(&s).unwrap(), &s.bg);
            for &x in &[-0.7, 0.05, 0.55] {
                let phi = phi_series(geom, s.case, &d, x).unwrap();
                let a = theta2_direct(geom, &phi);
                let b = NodeJet::new(geom, &d, x).eval(&t).unwrap();
                assert!((a - b).abs() < 1e-9 * (1.0 + b.abs()), "{geom:?} x={x}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn constant_datum_has_zero_theta() {
        let quad = Quadrature::new(Geometry::RoundSphere(6), 30).unwrap();
        let r = theta2_eval(Case::General, &Datum::constant(2.0), &quad).unwrap();
        assert!(r.sup < 1e-12);
        assert!(r.scal_positive());
    }
}
