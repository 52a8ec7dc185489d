//! Axially symmetric data `u = F(cos θ)`.

use super::series::Series;
use super::Geometry;
use crate::ring::{rational_to_f64, UPoly};

/// `Γ(j/2)`.
pub fn gamma_half(j: u32) -> f64 {
    assert!(j > 0, "Γ(0) is undefined");
    if j % 2 == 0 {
        (1..j / 2).map(|i| i as f64).product()
    } else {
        // Γ(1/2) = √π, Γ(k + 1/2) = (k - 1/2) Γ(k - 1/2)
        (0..j / 2).fold(std::f64::consts::PI.sqrt(), |acc, i| acc * (i as f64 + 0.5))
    }
}

/// Orthonormal zonal eigenfunctions `φ_k = C_k^λ / ‖C_k^λ‖` of the Laplacian,
/// `λ = (m-1)/2`, normalized in `L²(M)`. `Δφ_k = k(k+m-1) φ_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralBasis {
    pub m: u32,
    pub norms: Vec<f64>,
}

impl SpectralBasis {
    pub fn new(geom: Geometry, size: usize) -> Self {
        let m = geom.factor_dim();
        let lambda = (m as f64 - 1.0) / 2.0;
        // ∫_{-1}^{1} (C_k^λ)² (1-x²)^{λ-1/2} dx = π 2^{1-2λ} Γ(k+2λ) / (k! (k+λ) Γ(λ)²)
        let g_lambda = gamma_half(m - 1);
        let mut ratio = gamma_half(2 * (m - 1)); // Γ(k+2λ)/k! at k = 0
        let mut norms = Vec::with_capacity(size);
        for k in 0..size {
            if k > 0 {
                ratio *= (k as f64 - 1.0 + 2.0 * lambda) / k as f64;
            }
            let line = std::f64::consts::PI * 2f64.powf(1.0 - 2.0 * lambda) * ratio
                / ((k as f64 + lambda) * g_lambda * g_lambda);
            norms.push((line * geom.measure_constant()).sqrt());
        }
        SpectralBasis { m, norms }
    }

    pub fn len(&self) -> usize {
        self.norms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.norms.is_empty()
    }

    pub fn eigenvalue(&self, k: usize) -> f64 {
        (k * (k + self.m as usize - 1)) as f64
    }

    /// Series of every `φ_k` at `x₀`.
    pub fn series(&self, x0: f64, len: usize) -> Vec<Series> {
        let lambda = (self.m as f64 - 1.0) / 2.0;
        let x = Series::x(x0, len);
        let mut raw: Vec<Series> = Vec::with_capacity(self.len());
        for k in 0..self.len() {
            let next = match k {
                0 => Series::constant(x0, 1.0, len),
                1 => x.scale(2.0 * lambda),
                _ => {
                    let kf = k as f64;
                    let a = (&x * &raw[k - 1]).scale(2.0 * (kf + lambda - 1.0));
                    let b = raw[k - 2].scale(kf + 2.0 * lambda - 2.0);
                    (&a - &b).scale(1.0 / kf)
                }
            };
            raw.push(next);
        }
        raw.into_iter().zip(&self.norms).map(|(s, nk)| s.scale(1.0 / nk)).collect()
    }

    /// Values of every `φ_k` at `x`.
    pub fn values(&self, x: f64) -> Vec<f64> {
        self.series(x, 1).into_iter().map(|s| s.value()).collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Datum {
    /// Polynomial in `x = cos θ` with exact coefficients.
    Poly(UPoly),
    /// Polynomial with floating coefficients, ascending.
    FloatPoly(Vec<f64>),
    /// `shift - ln(a + b x)`.
    LogLinear { shift: f64, a: f64, b: f64 },
    /// `scale · (a + b x)^γ`.
    PowLinear { scale: f64, a: f64, b: f64, gamma: f64 },
    /// `Σ c_k φ_k`.
    Spectral { basis: SpectralBasis, coeffs: Vec<f64> },
}

impl Datum {
    pub fn constant(c: f64) -> Self {
        Datum::FloatPoly(vec![c])
    }

    pub fn series(&self, x0: f64, len: usize) -> Series {
        match self {
            Datum::Poly(p) => {
                let coeffs: Vec<f64> = p.coeffs().iter().map(rational_to_f64).collect();
                float_poly_series(&coeffs, x0, len)
            }
            Datum::FloatPoly(c) => float_poly_series(c, x0, len),
            Datum::LogLinear { shift, a, b } => {
                let lin = linear(x0, *a, *b, len);
                &Series::constant(x0, *shift, len) - &lin.ln()
            }
            Datum::PowLinear { scale, a, b, gamma } => linear(x0, *a, *b, len).powf(*gamma).scale(*scale),
            Datum::Spectral { basis, coeffs } => {
                let phis = basis.series(x0, len);
                phis.iter()
                    .zip(coeffs)
                    .fold(Series::constant(x0, 0.0, len), |acc, (p, c)| &acc + &p.scale(*c))
            }
        }
    }

    pub fn value(&self, x: f64) -> f64 {
        self.series(x, 1).value()
    }
}

fn linear(x0: f64, a: f64, b: f64, len: usize) -> Series {
    &Series::constant(x0, a, len) + &Series::x(x0, len).scale(b)
}

fn float_poly_series(c: &[f64], x0: f64, len: usize) -> Series {
    // Horner on series
    let x = Series::x(x0, len);
    c.iter()
        .rev()
        .fold(Series::constant(x0, 0.0, len), |acc, a| &(&acc * &x) + &Series::constant(x0, *a, len))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_half_values() {
        assert_eq!(gamma_half(2), 1.0);
        assert_eq!(gamma_half(8), 6.0);
        assert!((gamma_half(3) - std::f64::consts::PI.sqrt() / 2.0).abs() < 1e-15);
    }

    #[test]
    fn spectral_modes_are_eigenfunctions() {
        for geom in [Geometry::RoundSphere(4), Geometry::ProductS2xS2, Geometry::RoundSphere(5)] {
            let b = SpectralBasis::new(geom, 8);
            let m = geom.factor_dim() as f64;
            for (k, s) in b.series(0.37, 6).iter().enumerate() {
                let l = s.laplacian(m);
                assert!((l.value() - b.eigenvalue(k) * s.value()).abs() < 1e-10, "{geom:?} k={k}");
            }
        }
    }

    #[test]
    fn log_linear_series() {
        let d = Datum::LogLinear { shift: 0.0, a: 2.0, b: 1.0 };
        let s = d.series(0.0, 4);
        assert!((s.value() + 2f64.ln()).abs() < 1e-15);
        assert!((s.derivative_at(1) + 0.5).abs() < 1e-15);
    }
}
