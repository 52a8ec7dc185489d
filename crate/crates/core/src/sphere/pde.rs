//! Residuals of the constant-Q equations `P u + Q = e^{pu}` (dimension four)
//! and `P u = u^{p-1}`, `u > 0` (other dimensions).

use super::datum::Datum;
use super::jets::SERIES_LEN;
use super::{Geometry, SphereError};
use crate::ring::{rational_to_f64, RationalFunction};
use crate::terms::{paneitz_einstein, q_einstein, Case};

/// The equation solved on a geometry: `p` and the Paneitz coefficients.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Equation {
    pub geom: Geometry,
    pub p: f64,
    /// `P = Δ² + c1 Δ + c0`
    pub c1: f64,
    pub c0: f64,
    pub q: f64,
}

impl Equation {
    pub fn new(geom: Geometry, p: f64) -> Self {
        let n = RationalFunction::int(geom.n() as i64);
        let r = match geom {
            Geometry::RoundSphere(k) => RationalFunction::int((k * (k - 1)) as i64),
            Geometry::ProductS2xS2 => RationalFunction::int(4),
        };
        let (_, c1, c0) = paneitz_einstein(&r, &n);
        let f = |c: &RationalFunction| rational_to_f64(&c.as_constant().expect("numeric"));
        Equation { geom, p, c1: f(&c1), c0: f(&c0), q: f(&q_einstein(&r, &n)) }
    }

    /// The critical exponent: 4 in dimension four, `2n/(n-4)` otherwise.
    pub fn critical(geom: Geometry) -> Self {
        let n = geom.n() as f64;
        let p = if geom.n() == 4 { 4.0 } else { 2.0 * n / (n - 4.0) };
        Self::new(geom, p)
    }

    pub fn case(&self) -> Case {
        if self.geom.n() == 4 {
            Case::Dim4
        } else {
            Case::General
        }
    }

    /// Multiplier of `φ_k` under `P`, where `Δφ_k = λ φ_k`.
    pub fn symbol(&self, lambda: f64) -> f64 {
        lambda * lambda + self.c1 * lambda + self.c0
    }

    /// Nonlinearity `N(u)` and `N'(u)`.
    pub fn nonlinearity(&self, u: f64) -> (f64, f64) {
        match self.case() {
            Case::Dim4 => {
                let e = (self.p * u).exp();
                (e - self.q, self.p * e)
            }
            Case::General => {
                let e = u.powf(self.p - 2.0);
                (e * u, (self.p - 1.0) * e)
            }
        }
    }

    /// Constant solution: `e^{pu} = Q` or `c0 u = u^{p-1}`.
    pub fn constant_solution(&self) -> f64 {
        match self.case() {
            Case::Dim4 => self.q.ln() / self.p,
            Case::General => self.c0.powf(1.0 / (self.p - 2.0)),
        }
    }

    /// `P u - N(u)` at a point.
    pub fn residual_at(&self, datum: &Datum, x: f64) -> Result<f64, SphereError> {
        let m = self.geom.factor_dim() as f64;
        let u = datum.series(x, SERIES_LEN);
        if self.case() == Case::General && u.value() <= 0.0 {
            return Err(SphereError::NonPositive { x, value: u.value() });
        }
        let lap = u.laplacian(m);
        let bilap = lap.laplacian(m);
        let pu = bilap.value() + self.c1 * lap.value() + self.c0 * u.value();
        Ok(pu - self.nonlinearity(u.value()).0)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PdeResidual {
    pub values: Vec<f64>,
    pub sup: f64,
}

/// Residual of the geometry's equation at the given points.
pub fn pde_residual(eq: &Equation, datum: &Datum, nodes: &[f64]) -> Result<PdeResidual, SphereError> {
    let values: Vec<f64> = nodes.iter().map(|&x| eq.residual_at(datum, x)).collect::<Result<_, _>>()?;
    let sup = values.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    Ok(PdeResidual { values, sup })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paneitz_constants() {
        let e = Equation::critical(Geometry::RoundSphere(4));
        assert_eq!((e.c1, e.c0, e.q), (2.0, 0.0, 6.0));
        let e = Equation::critical(Geometry::RoundSphere(6));
        assert_eq!((e.c1, e.c0, e.q, e.p), (10.0, 24.0, 24.0, 6.0));
        let e = Equation::critical(Geometry::ProductS2xS2);
        assert!((e.c1 - 2.0 / 3.0).abs() < 1e-15 && (e.q - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn constants_solve() {
        for (geom, p) in [(Geometry::RoundSphere(4), 4.0), (Geometry::ProductS2xS2, 4.0), (Geometry::RoundSphere(5), 6.0)] {
            let eq = Equation::new(geom, p);
            let d = Datum::constant(eq.constant_solution());
            let r = pde_residual(&eq, &d, &[-0.5, 0.0, 0.7]).unwrap();
            assert!(r.sup < 1e-12, "{geom:?}: {}", r.sup);
        }
    }

    #[test]
    fn nonsolution_has_large_residual() {
        let eq = Equation::critical(Geometry::RoundSphere(4));
        let d = Datum::FloatPoly(vec![0.3, 0.4, -0.2, 0.3]);
        assert!(pde_residual(&eq, &d, &[0.0, 0.5]).unwrap().sup > 1e-3);
    }
}
