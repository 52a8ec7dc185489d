//! Gauss-Legendre quadrature in the polar angle of the factor sphere.

use gauss_quad::GaussLegendre;

use super::{Geometry, SphereError};

/// Nodes `x_i = cos θ_i` and weights that include `sin^{m-1} θ` and every
/// sphere-volume constant, so `Σ w_i f(x_i) ≈ ∫_M f dv`.
#[derive(Clone, Debug, PartialEq)]
pub struct Quadrature {
    pub geom: Geometry,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl Quadrature {
    pub fn new(geom: Geometry, count: usize) -> Result<Self, SphereError> {
        let rule = GaussLegendre::new(count).map_err(|e| SphereError::BadInput(e.to_string()))?;
        let m = geom.factor_dim() as i32;
        let half = std::f64::consts::FRAC_PI_2;
        let c = geom.measure_constant();
        let (nodes, weights) = rule
            .as_node_weight_pairs()
            .iter()
            .map(|&(z, w)| {
                let theta = half * (z + 1.0);
                (theta.cos(), c * half * w * theta.sin().powi(m - 1))
            })
            .unzip();
        Ok(Quadrature { geom, nodes, weights })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate_values(&self, values: &[f64]) -> f64 {
        values.iter().zip(&self.weights).map(|(v, w)| v * w).sum()
    }

    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(x, w)| w * f(*x)).sum()
    }
}

/// An integral at two resolutions.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CheckedIntegral {
    pub value: f64,
    pub doubled: f64,
}

impl CheckedIntegral {
    pub fn change(&self) -> f64 {
        (self.value - self.doubled).abs() / (1.0 + self.doubled.abs())
    }
}

/// `∫_M f` with `count` nodes, failing when doubling the nodes moves the
/// result by more than `tol` (relative, with unit floor).
pub fn integrate_checked(
    geom: Geometry,
    count: usize,
    tol: f64,
    f: impl Fn(f64) -> f64,
) -> Result<CheckedIntegral, SphereError> {
    let a = Quadrature::new(geom, count)?.integrate(&f);
    let b = Quadrature::new(geom, 2 * count)?.integrate(&f);
    let r = CheckedIntegral { value: a, doubled: b };
    if r.change() > tol {
        return Err(SphereError::Quadrature { nodes: count, change: r.change() });
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn volumes() {
        let q = Quadrature::new(Geometry::RoundSphere(4), 40).unwrap();
        assert!((q.integrate(|_| 1.0) - 8.0 * PI * PI / 3.0).abs() < 1e-12);
        let q = Quadrature::new(Geometry::ProductS2xS2, 40).unwrap();
        assert!((q.integrate(|_| 1.0) - 16.0 * PI * PI).abs() < 1e-11);
        let q = Quadrature::new(Geometry::RoundSphere(5), 40).unwrap();
        assert!((q.integrate(|_| 1.0) - Geometry::RoundSphere(5).volume()).abs() < 1e-12);
        assert!((Geometry::RoundSphere(5).volume() - PI.powi(3)).abs() < 1e-12);
    }

    #[test]
    fn odd_moment_vanishes() {
        let q = Quadrature::new(Geometry::RoundSphere(6), 50).unwrap();
        assert!(q.integrate(|x| x).abs() < 1e-13);
    }

    #[test]
    fn doubling_detects_unresolved_integrand() {
        let f = |x: f64| (60.0 * x).sin().powi(2);
        assert!(integrate_checked(Geometry::RoundSphere(4), 8, 1e-9, f).is_err());
        assert!(integrate_checked(Geometry::RoundSphere(4), 200, 1e-9, f).is_ok());
    }
}
