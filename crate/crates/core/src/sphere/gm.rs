//! Scalar curvature along the path `e^{2tu} g` (dimension four) or
//! `(1 - t + tu)^{4/(n-4)} g` from the background to the conformal metric.

use super::datum::Datum;
use super::jets::NodeJet;
use super::{Geometry, SphereError};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PathScan {
    pub min: f64,
    pub t_at_min: f64,
    pub x_at_min: f64,
}

impl PathScan {
    pub fn positive(&self) -> bool {
        self.min > 0.0
    }
}

/// The minimum over nodes at each of `steps + 1` equally spaced `t`.
pub fn gm_path_curve(geom: Geometry, datum: &Datum, steps: usize, nodes: &[f64]) -> Result<Vec<PathScan>, SphereError> {
    let n = geom.n() as f64;
    let r = geom.scal();
    let jets: Vec<NodeJet> = nodes.iter().map(|&x| NodeJet::new(geom, datum, x)).collect();
    let mut curve = Vec::with_capacity(steps + 1);
    for i in 0..=steps {
        let t = i as f64 / steps.max(1) as f64;
        let mut best = PathScan { min: f64::INFINITY, t_at_min: t, x_at_min: 0.0 };
        for j in &jets {
            let (u, lap, grad) = (j.value(), j.g[1], j.g[2]);
            let scal = if geom.n() == 4 {
                (-2.0 * t * u).exp() * (r + 6.0 * t * lap - 6.0 * t * t * grad)
            } else {
                let w = 1.0 - t + t * u;
                if w <= 0.0 {
                    return Err(SphereError::NonPositive { x: j.x, value: w });
                }
                let k = n - 4.0;
                w.powf(-n / k)
                    * (4.0 * (n - 1.0) / k * t * lap - 8.0 * (n - 1.0) / (k * k) * t * t * grad / w + r * w)
            };
            if scal < best.min {
                best = PathScan { min: scal, t_at_min: t, x_at_min: j.x };
            }
        }
        curve.push(best);
    }
    Ok(curve)
}

pub fn gm_path_scan(geom: Geometry, datum: &Datum, steps: usize, nodes: &[f64]) -> Result<PathScan, SphereError> {
    let curve = gm_path_curve(geom, datum, steps, nodes)?;
    Ok(curve.into_iter().fold(PathScan { min: f64::INFINITY, t_at_min: 0.0, x_at_min: 0.0 }, |a, b| {
        if b.min < a.min {
            b
        } else {
            a
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sphere::{mobius_solution, Quadrature};

    #[test]
    fn trivial_path() {
        let q = Quadrature::new(Geometry::RoundSphere(5), 20).unwrap();
        let scan = gm_path_scan(Geometry::RoundSphere(5), &Datum::constant(1.0), 10, &q.nodes).unwrap();
        assert!((scan.min - 20.0).abs() < 1e-12);
    }

    #[test]
    fn mobius_path_stays_positive() {
        let g = Geometry::RoundSphere(4);
        let q = Quadrature::new(g, 60).unwrap();
        let scan = gm_path_scan(g, &mobius_solution(g, 0.5).unwrap(), 50, &q.nodes).unwrap();
        assert!(scan.positive());
    }

    #[test]
    fn steep_profile_goes_negative() {
        let g = Geometry::RoundSphere(4);
        let q = Quadrature::new(g, 60).unwrap();
        let scan = gm_path_scan(g, &Datum::FloatPoly(vec![0.0, 0.0, 4.0]), 50, &q.nodes).unwrap();
        assert!(!scan.positive());
    }
}
