//! Damped Newton iteration for the constant-Q equation in the zonal
//! eigenbasis, with Galerkin projection of the nonlinearity.

use nalgebra::{DMatrix, DVector};

use super::datum::{Datum, SpectralBasis};
use super::pde::{pde_residual, Equation};
use super::quad::Quadrature;
use super::SphereError;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NewtonConfig {
    pub modes: usize,
    pub nodes: usize,
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for NewtonConfig {
    fn default() -> Self {
        NewtonConfig { modes: 32, nodes: 400, tol: 1e-10, max_iter: 80 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct NewtonReport {
    pub coeffs: Vec<f64>,
    pub converged: bool,
    /// Galerkin residual norm before each step and at the end.
    pub trace: Vec<f64>,
    pub residual: f64,
    /// Supremum of the pointwise residual at the quadrature nodes.
    pub pointwise: f64,
    /// `‖u - ū‖_{L²}`, the mass outside the constant mode.
    pub nonconstant_mass: f64,
    /// Modes dominating a numerically null direction of the Jacobian, in the
    /// order they were met.
    pub singular_modes: Vec<usize>,
    pub datum: Datum,
}

struct Galerkin<'a> {
    eq: &'a Equation,
    quad: Quadrature,
    phi: DMatrix<f64>,
    symbol: Vec<f64>,
}

impl Galerkin<'_> {
    fn values(&self, c: &DVector<f64>) -> DVector<f64> {
        &self.phi * c
    }

    /// `F(c)`, or `None` if `u` leaves the admissible set.
    fn residual(&self, c: &DVector<f64>) -> Option<DVector<f64>> {
        let u = self.values(c);
        let mut weighted = DVector::zeros(u.len());
        for i in 0..u.len() {
            if self.eq.case() == crate::terms::Case::General && u[i] <= 0.0 {
                return None;
            }
            let (nl, _) = self.eq.nonlinearity(u[i]);
            if !nl.is_finite() {
                return None;
            }
            weighted[i] = self.quad.weights[i] * nl;
        }
        let proj = self.phi.transpose() * weighted;
        Some(DVector::from_fn(c.len(), |j, _| self.symbol[j] * c[j] - proj[j]))
    }

    fn jacobian(&self, c: &DVector<f64>) -> DMatrix<f64> {
        let u = self.values(c);
        let mut scaled = self.phi.clone();
        for i in 0..u.len() {
            let d = self.quad.weights[i] * self.eq.nonlinearity(u[i]).1;
            scaled.row_mut(i).scale_mut(d);
        }
        let mut j = -(self.phi.transpose() * scaled);
        for k in 0..c.len() {
            j[(k, k)] += self.symbol[k];
        }
        j
    }
}

/// Coefficients of a datum in the zonal basis.
pub fn project(datum: &Datum, basis: &SpectralBasis, quad: &Quadrature) -> Vec<f64> {
    let mut c = vec![0.0; basis.len()];
    for (x, w) in quad.nodes.iter().zip(&quad.weights) {
        let u = datum.value(*x);
        for (ck, pk) in c.iter_mut().zip(basis.values(*x)) {
            *ck += w * u * pk;
        }
    }
    c
}

pub fn newton_solve(eq: &Equation, initial: &Datum, cfg: &NewtonConfig) -> Result<NewtonReport, SphereError> {
    let geom = eq.geom;
    let quad = Quadrature::new(geom, cfg.nodes)?;
    let basis = SpectralBasis::new(geom, cfg.modes);
    let mut phi = DMatrix::zeros(quad.len(), cfg.modes);
    for (i, x) in quad.nodes.iter().enumerate() {
        for (k, v) in basis.values(*x).into_iter().enumerate() {
            phi[(i, k)] = v;
        }
    }
    let symbol: Vec<f64> = (0..cfg.modes).map(|k| eq.symbol(basis.eigenvalue(k))).collect();
    let sys = Galerkin { eq, quad, phi, symbol };

    let mut c = DVector::from_vec(project(initial, &basis, &sys.quad));
    let mut f = sys
        .residual(&c)
        .ok_or_else(|| SphereError::BadInput("initial datum outside the admissible set".into()))?;
    let mut trace = Vec::new();
    let mut singular_modes = Vec::new();
    let mut converged = false;
    for _ in 0..cfg.max_iter {
        let norm = f.norm();
        trace.push(norm);
        if norm < cfg.tol {
            converged = true;
            break;
        }
        let j = sys.jacobian(&c);
        let svd = j.svd(true, true);
        let smax = svd.singular_values.max();
        let eps = 1e-10 * smax.max(1.0);
        if let Some(vt) = &svd.v_t {
            for (idx, s) in svd.singular_values.iter().enumerate() {
                if *s <= eps {
                    let row = vt.row(idx);
                    let mode = row.iter().enumerate().fold(0, |b, (k, v)| if v.abs() > row[b].abs() { k } else { b });
                    if !singular_modes.contains(&mode) {
                        singular_modes.push(mode);
                    }
                }
            }
        }
        let step = svd.solve(&(-&f), eps).map_err(|e| SphereError::BadInput(e.to_string()))?;
        let mut alpha = 1.0;
        let next = loop {
            let trial = &c + &step * alpha;
            if let Some(ft) = sys.residual(&trial) {
                if ft.norm() <= (1.0 - 1e-4 * alpha) * norm || alpha < 1e-6 {
                    break Some((trial, ft));
                }
            }
            alpha *= 0.5;
            if alpha < 1e-6 {
                break None;
            }
        };
        match next {
            Some((cn, fnext)) => {
                c = cn;
                f = fnext;
            }
            None => break,
        }
    }
    let residual = f.norm();
    if !converged && residual < cfg.tol {
        converged = true;
        trace.push(residual);
    }
    let coeffs: Vec<f64> = c.iter().cloned().collect();
    let nonconstant_mass = coeffs[1..].iter().map(|v| v * v).sum::<f64>().sqrt();
    let datum = Datum::Spectral { basis, coeffs: coeffs.clone() };
    let pointwise = pde_residual(eq, &datum, &sys.quad.nodes).map(|r| r.sup).unwrap_or(f64::INFINITY);
    Ok(NewtonReport { coeffs, converged, trace, residual, pointwise, nonconstant_mass, singular_modes, datum })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sphere::{mobius_solution, Geometry};

    fn cfg() -> NewtonConfig {
        NewtonConfig { nodes: 120, ..NewtonConfig::default() }
    }

    #[test]
    fn product_converges_to_constant() {
        let eq = Equation::critical(Geometry::ProductS2xS2);
        let c0 = eq.constant_solution();
        let init = Datum::FloatPoly(vec![c0 + 0.05, 0.08, -0.06, 0.04]);
        let r = newton_solve(&eq, &init, &cfg()).unwrap();
        assert!(r.converged, "{:?}", r.trace);
        assert!(r.nonconstant_mass < 1e-8);
        assert!(r.pointwise < 1e-8);
    }

    #[test]
    fn sphere_keeps_a_mobius_solution() {
        let g = Geometry::RoundSphere(4);
        let eq = Equation::critical(g);
        let init = mobius_solution(g, 0.5).unwrap();
        let r = newton_solve(&eq, &init, &cfg()).unwrap();
        assert!(r.converged, "{:?}", r.trace);
        assert!(r.nonconstant_mass > 0.1);
        assert!(r.pointwise < 1e-8, "{}", r.pointwise);
    }
}
