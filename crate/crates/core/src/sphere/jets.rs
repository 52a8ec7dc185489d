//! Values of the jet generators of an axially symmetric datum at one point,
//! and numeric evaluation of jet expressions.
//!
//! Every vector field in the catalog is radial, `∇F = -sin θ F'(x) ∂_θ`, so
//! `(∇F, ∇G) = (1 - x²) F'G'`. A symmetric 2-tensor `∇²F` acts on radial
//! vectors by `h_r(F) = -xF' + (1-x²)F''` and has eigenvalue `h_t(F) = -xF'`
//! on the `m - 1` tangential directions of the factor sphere.

use super::datum::Datum;
use super::series::Series;
use super::{Geometry, SphereError};
use crate::jet::{Gen, JetExpr, Tens, VecBase, Weight};

/// Series length: enough for five derivatives of `Δ²u`.
pub const SERIES_LEN: usize = 12;

#[derive(Clone, Debug)]
pub struct NodeJet {
    pub geom: Geometry,
    pub x: f64,
    pub u: Series,
    pub lap: Series,
    pub bilap: Series,
    pub g: [f64; 16],
}

fn radial(f: &Series) -> f64 {
    // sign chosen consistently; only products of two appear
    (1.0 - f.x0 * f.x0).sqrt() * f.derivative_at(1)
}

fn hess_radial(f: &Series) -> f64 {
    let x = f.x0;
    -x * f.derivative_at(1) + (1.0 - x * x) * f.derivative_at(2)
}

fn hess_tangential(f: &Series) -> f64 {
    -f.x0 * f.derivative_at(1)
}

impl NodeJet {
    pub fn new(geom: Geometry, datum: &Datum, x: f64) -> Self {
        let m = geom.factor_dim() as f64;
        let u = datum.series(x, SERIES_LEN);
        let lap = u.laplacian(m);
        let bilap = lap.laplacian(m);
        let s2 = 1.0 - x * x;
        let (p1, l1) = (u.derivative_at(1), lap.derivative_at(1));
        let grad_sq = &Series::one_minus_x2(x, SERIES_LEN) * &(&u.deriv() * &u.deriv());
        let q1 = grad_sq.derivative_at(1);
        let (hr, ht) = (hess_radial(&u), hess_tangential(&u));
        let (tr, tt) = (hess_radial(&lap), hess_tangential(&lap));
        let mut g = [0.0; 16];
        g[1] = lap.value();
        g[2] = grad_sq.value();
        g[3] = hr * hr + (m - 1.0) * ht * ht;
        g[4] = s2 * q1 * p1;
        g[5] = s2 * l1 * p1;
        g[6] = s2 * l1 * q1;
        g[7] = s2 * l1 * l1;
        g[8] = s2 * q1 * q1;
        g[9] = bilap.value();
        g[10] = s2 * bilap.derivative_at(1) * p1;
        g[11] = tr * hr + (m - 1.0) * tt * ht;
        g[12] = tr * g[2];
        // aliases from their definitions rather than from rewrite rules
        g[13] = grad_sq.laplacian(m).value();
        g[14] = rough_laplacian_radial(&lap, geom) * radial_theta(&u);
        g[15] = rough_laplacian_radial(&u, geom) * radial_theta(&lap);
        NodeJet { geom, x, u, lap, bilap, g }
    }

    pub fn value(&self) -> f64 {
        self.u.value()
    }

    fn vec_radial(&self, b: VecBase) -> f64 {
        match b {
            VecBase::V1 => radial(&self.lap),
            VecBase::V2 => {
                let gs = &Series::one_minus_x2(self.x, SERIES_LEN) * &(&self.u.deriv() * &self.u.deriv());
                radial(&gs)
            }
            VecBase::V3 => radial(&self.u),
            VecBase::V4 => radial(&self.bilap),
        }
    }

    fn tens_radial(&self, t: Tens) -> f64 {
        match t {
            Tens::H => hess_radial(&self.u),
            Tens::T => hess_radial(&self.lap),
        }
    }

    pub fn gen_value(&self, g: &Gen) -> f64 {
        match g {
            Gen::R => self.geom.scal(),
            Gen::U => self.u.value(),
            Gen::G(i) => self.g[*i as usize],
            Gen::Pairing { left, mids, right } => {
                let (l, r) = (self.vec_radial(*left), self.vec_radial(*right));
                l * mids.iter().map(|t| self.tens_radial(*t)).product::<f64>() * r
            }
            Gen::HessLapSq => {
                let m = self.geom.factor_dim() as f64;
                let (tr, tt) = (hess_radial(&self.lap), hess_tangential(&self.lap));
                tr * tr + (m - 1.0) * tt * tt
            }
        }
    }

    /// An expression evaluated at this node, with `n` set to the geometry's
    /// dimension.
    pub fn eval(&self, e: &JetExpr) -> Result<f64, SphereError> {
        let n = self.geom.n() as f64;
        let u = self.u.value();
        let w = match e.weight() {
            Weight::Unit => 1.0,
            Weight::Exp(k) => (*k as f64 * u).exp(),
            Weight::Pow(a) => {
                if u <= 0.0 {
                    return Err(SphereError::NonPositive { x: self.x, value: u });
                }
                u.powf(a.eval_f64(n))
            }
        };
        let mut acc = 0.0;
        for (m, c) in e.poly().terms() {
            let mut t = c.eval_f64(n);
            for (g, k) in m.factors() {
                t *= self.gen_value(g).powi(*k);
            }
            acc += t;
        }
        Ok(w * acc)
    }
}

/// `∂_θ F` for `F(cos θ)`: `-sin θ F'(x)`.
fn radial_theta(f: &Series) -> f64 {
    -(1.0 - f.x0 * f.x0).sqrt() * f.derivative_at(1)
}

/// `θ`-component of the rough Laplacian `∇*∇` of the 1-form `dF` on the
/// factor sphere: `-a'' - (m-1) cot θ a' + (m-1) cot² θ a` with `a = ∂_θ F`.
fn rough_laplacian_radial(f: &Series, geom: Geometry) -> f64 {
    let m = geom.factor_dim() as f64;
    let x = f.x0;
    let s = (1.0 - x * x).sqrt();
    let (f1, f2, f3) = (f.derivative_at(1), f.derivative_at(2), f.derivative_at(3));
    let a = -s * f1;
    let a1 = -x * f1 + s * s * f2;
    let a2 = s * f1 + 3.0 * x * s * f2 - s * s * s * f3;
    let cot = x / s;
    -a2 - (m - 1.0) * cot * a1 + (m - 1.0) * cot * cot * a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jet::{normal_form, Background};
    use crate::ring::parse_rf;

    fn cubic() -> Datum {
        Datum::FloatPoly(vec![0.1, -0.4, 0.3, 0.25])
    }

    /// The reductions written out term by term.
    fn oracle(geom: Geometry, p: &[f64], x: f64) -> [f64; 13] {
        let m = geom.factor_dim() as f64;
        let p1 = float_deriv(p, x, 1);
        let p2 = float_deriv(p, x, 2);
        // L(P) as a polynomial: m x P' - (1-x²) P''
        let lp = lap_poly(p, m);
        let llp = lap_poly(&lp, m);
        let l1 = float_deriv(&lp, x, 1);
        let l2 = float_deriv(&lp, x, 2);
        let s2 = 1.0 - x * x;
        let hr = -x * p1 + s2 * p2;
        let g2 = s2 * p1 * p1;
        let g2p = -2.0 * x * p1 * p1 + 2.0 * s2 * p1 * p2;
        let mut g = [0.0; 13];
        g[1] = float_deriv(&lp, x, 0);
        g[2] = g2;
        g[3] = hr * hr + (m - 1.0) * x * x * p1 * p1;
        g[4] = 2.0 * s2 * p1 * p1 * hr;
        g[5] = s2 * l1 * p1;
        g[6] = s2 * l1 * g2p;
        g[7] = s2 * l1 * l1;
        g[8] = 4.0 * g2 * hr * hr;
        g[9] = float_deriv(&llp, x, 0);
        g[10] = s2 * float_deriv(&llp, x, 1) * p1;
        g[11] = hr * (-x * l1 + s2 * l2) + (m - 1.0) * x * x * p1 * l1;
        g[12] = (-x * l1 + s2 * l2) * s2 * p1 * p1;
        g
    }

    fn float_deriv(c: &[f64], x: f64, k: usize) -> f64 {
        let mut c = c.to_vec();
        for _ in 0..k {
            c = (1..c.len()).map(|i| i as f64 * c[i]).collect();
        }
        c.iter().rev().fold(0.0, |acc, a| acc * x + a)
    }

    fn lap_poly(c: &[f64], m: f64) -> Vec<f64> {
        let n = c.len() + 1;
        let mut out = vec![0.0; n];
        for (k, a) in c.iter().enumerate() {
            let k = k as f64;
            let i = k as usize;
            // m x (k a x^{k-1}) = m k a x^k ; -(1-x²) k(k-1) a x^{k-2}
            out[i] += m * k * a + k * (k - 1.0) * a;
            if i >= 2 {
                out[i - 2] -= k * (k - 1.0) * a;
            }
        }
        out
    }

    #[test]
    fn generators_match_written_reductions() {
        let p = [0.1, -0.4, 0.3, 0.25];
        for geom in [Geometry::RoundSphere(4), Geometry::RoundSphere(5), Geometry::ProductS2xS2] {
            for &x in &[-0.83, -0.2, 0.41, 0.9] {
                let j = NodeJet::new(geom, &Datum::FloatPoly(p.to_vec()), x);
                let o = oracle(geom, &p, x);
                for i in 1..=12 {
                    assert!((j.g[i] - o[i]).abs() < 1e-11 * (1.0 + o[i].abs()), "{geom:?} x={x} g{i}: {} vs {}", j.g[i], o[i]);
                }
            }
        }
    }

    #[test]
    fn first_harmonic() {
        let j = NodeJet::new(Geometry::RoundSphere(5), &Datum::FloatPoly(vec![0.0, 1.0]), 0.3);
        assert!((j.g[1] - 5.0 * 0.3).abs() < 1e-14);
        assert!((j.g[3] - 5.0 * 0.09).abs() < 1e-14);
    }

    #[test]
    fn cauchy_schwarz_at_nodes() {
        for &x in &[-0.9, -0.1, 0.5, 0.8] {
            let j = NodeJet::new(Geometry::RoundSphere(4), &cubic(), x);
            assert!(j.g[4] * j.g[4] <= j.g[2] * j.g[8] * (1.0 + 1e-12) + 1e-15);
            assert!(j.g[5] * j.g[5] <= j.g[2] * j.g[7] * (1.0 + 1e-12) + 1e-15);
        }
    }

    #[test]
    fn alias_definitions_agree_with_rewrites() {
        // g13, g14, g15 are computed from their definitions; their rewrite
        // rules are an independent route
        for geom in [Geometry::RoundSphere(4), Geometry::RoundSphere(6), Geometry::ProductS2xS2] {
            let bg = Background::fixed(geom.n() as i64);
            for &x in &[-0.7, 0.15, 0.66] {
                let j = NodeJet::new(geom, &cubic(), x);
                for alias in [13u8, 14, 15] {
                    let rewritten = normal_form(&JetExpr::g(alias), &bg);
                    let v = j.eval(&rewritten).unwrap();
                    assert!((v - j.g[alias as usize]).abs() < 1e-11, "{geom:?} g{alias}: {v} vs {}", j.g[alias as usize]);
                }
            }
        }
    }

    #[test]
    fn weighted_evaluation() {
        let j = NodeJet::new(Geometry::RoundSphere(5), &Datum::FloatPoly(vec![2.0, 0.1]), 0.0);
        let e = JetExpr::u_pow(&parse_rf("1/(n-4)").unwrap());
        assert!((j.eval(&e).unwrap() - 2.0).abs() < 1e-14);
    }
}
