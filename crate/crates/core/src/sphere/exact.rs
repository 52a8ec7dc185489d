//! Exact jets of polynomial profiles and exact integrals on even-dimensional
//! factor spheres.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Geometry, SphereError};
use crate::ring::{q, rational_to_f64, UPoly};

/// `c · π^k`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactIntegral {
    pub coefficient: BigRational,
    pub pi_power: u32,
}

impl ExactIntegral {
    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.coefficient) * std::f64::consts::PI.powi(self.pi_power as i32)
    }
}

fn mul(a: &UPoly, b: &UPoly) -> UPoly {
    a * b
}

/// `m x f' - (1 - x²) f''`
pub fn laplacian_poly(f: &UPoly, m: u32) -> UPoly {
    let x = UPoly::var();
    let one_minus = UPoly::from_ints(&[1, 0, -1]);
    let d1 = f.deriv();
    let d2 = d1.deriv();
    &mul(&x, &d1).scale(&q(m as i64, 1)) - &mul(&one_minus, &d2)
}

/// Exact `g1 … g12` of a polynomial profile, as polynomials in `x`.
pub fn exact_generators(geom: Geometry, p: &UPoly) -> [UPoly; 13] {
    let m = geom.factor_dim();
    let x = UPoly::var();
    let s2 = UPoly::from_ints(&[1, 0, -1]);
    let mm1 = UPoly::constant(q(m as i64 - 1, 1));
    let hess_r = |f: &UPoly| &(&s2 * &f.deriv().deriv()) - &(&x * &f.deriv());
    let hess_t = |f: &UPoly| -&(&x * &f.deriv());
    let dot = |f: &UPoly, g: &UPoly| &s2 * &(&f.deriv() * &g.deriv());
    let lap = laplacian_poly(p, m);
    let bilap = laplacian_poly(&lap, m);
    let g2 = dot(p, p);
    let (hr, ht) = (hess_r(p), hess_t(p));
    let (tr, tt) = (hess_r(&lap), hess_t(&lap));
    [
        UPoly::zero(),
        lap.clone(),
        g2.clone(),
        &(&hr * &hr) + &(&mm1 * &(&ht * &ht)),
        dot(&g2, p),
        dot(&lap, p),
        dot(&lap, &g2),
        dot(&lap, &lap),
        dot(&g2, &g2),
        bilap.clone(),
        dot(&bilap, p),
        &(&tr * &hr) + &(&mm1 * &(&tt * &ht)),
        &tr * &g2,
    ]
}

/// `∫_{-1}^{1} x^k (1-x²)^j dx`
fn moment(k: usize, j: u32) -> BigRational {
    if k % 2 == 1 {
        return BigRational::zero();
    }
    // expand (1-x²)^j
    let mut acc = BigRational::zero();
    let mut binom = BigInt::one();
    for i in 0..=j {
        if i > 0 {
            binom = binom * BigInt::from(j - i + 1) / BigInt::from(i);
        }
        let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        acc += BigRational::new(sign * &binom * 2, BigInt::from(k + 2 * i as usize + 1));
    }
    acc
}

/// `∫_M f dv` for a polynomial `f(cos θ)` when the factor sphere has even
/// dimension.
pub fn integrate_exact(geom: Geometry, f: &UPoly) -> Result<ExactIntegral, SphereError> {
    let m = geom.factor_dim();
    if m % 2 != 0 {
        return Err(SphereError::BadInput(format!("exact moments need an even factor dimension, got {m}")));
    }
    let j = (m - 2) / 2;
    let line: BigRational = f.coeffs().iter().enumerate().map(|(k, c)| c * moment(k, j)).sum();
    // ω_{m-1} = 2π^{m/2}/(m/2-1)!, times 4π for the second factor
    let fact: BigInt = (1..m / 2).map(BigInt::from).product();
    let mut c = line * BigRational::new(BigInt::from(2), fact);
    let mut pi_power = m / 2;
    if geom == Geometry::ProductS2xS2 {
        c *= BigRational::from_integer(4.into());
        pi_power += 1;
    }
    Ok(ExactIntegral { coefficient: c, pi_power })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sphere::{Datum, NodeJet, Quadrature};

    #[test]
    fn calibrated_volumes() {
        let one = UPoly::one();
        let s4 = integrate_exact(Geometry::RoundSphere(4), &one).unwrap();
        assert_eq!(s4, ExactIntegral { coefficient: q(8, 3), pi_power: 2 });
        let p = integrate_exact(Geometry::ProductS2xS2, &one).unwrap();
        assert_eq!(p, ExactIntegral { coefficient: q(16, 1), pi_power: 2 });
        assert!(integrate_exact(Geometry::RoundSphere(5), &one).is_err());
        let x = UPoly::var();
        assert!(integrate_exact(Geometry::RoundSphere(6), &x).unwrap().coefficient.is_zero());
    }

    #[test]
    fn first_harmonic_exact() {
        let g = exact_generators(Geometry::RoundSphere(6), &UPoly::var());
        assert_eq!(g[1], UPoly::from_ints(&[0, 6]));
        assert_eq!(g[3], UPoly::from_ints(&[0, 0, 6]));
    }

    #[test]
    fn exact_jets_match_numeric_jets() {
        let p = UPoly::from_coeffs(vec![q(1, 3), q(-1, 2), q(2, 5), q(1, 4)]);
        for geom in [Geometry::RoundSphere(4), Geometry::ProductS2xS2] {
            let g = exact_generators(geom, &p);
            let j = NodeJet::new(geom, &Datum::Poly(p.clone()), 0.37);
            for i in 1..=12 {
                let e = g[i].eval_f64(0.37);
                assert!((e - j.g[i]).abs() < 1e-12 * (1.0 + e.abs()), "g{i}");
            }
        }
    }

    #[test]
    fn exact_and_quadrature_agree() {
        let p = UPoly::from_coeffs(vec![q(1, 3), q(-1, 2), q(2, 5), q(1, 4)]);
        for geom in [Geometry::RoundSphere(4), Geometry::RoundSphere(6), Geometry::ProductS2xS2] {
            let g = exact_generators(geom, &p);
            let quad = Quadrature::new(geom, 400).unwrap();
            for f in [g[3].clone(), &g[2] * &g[1], g[11].clone(), &g[7] - &(&g[2] * &g[9])] {
                let exact = integrate_exact(geom, &f).unwrap().to_f64();
                let numeric = quad.integrate(|x| f.eval_f64(x));
                assert!((exact - numeric).abs() < 1e-12 * (1.0 + exact.abs()), "{geom:?}: {exact} vs {numeric}");
            }
        }
    }
}
