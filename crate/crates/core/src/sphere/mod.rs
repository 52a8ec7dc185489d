//! Numeric backend on round spheres and on `S² × S²`, restricted to data
//! that depend only on one polar angle.

mod checks;
mod datum;
mod exact;
mod gm;
mod jets;
mod mobius;
mod newton;
mod pde;
mod quad;
mod series;
mod theta;

pub use checks::{
    integral_identities, random_cubic, random_perturbation, random_positive_cubic, relative_residual, IntegralRecord,
};
pub use datum::{gamma_half, Datum, SpectralBasis};
pub use exact::{exact_generators, integrate_exact, laplacian_poly, ExactIntegral};
pub use gm::{gm_path_curve, gm_path_scan, PathScan};
pub use jets::{NodeJet, SERIES_LEN};
pub use mobius::{identify_mobius, mobius_factor, mobius_solution, volume_bookkeeping};
pub use newton::{newton_solve, project, NewtonConfig, NewtonReport};
pub use pde::{pde_residual, Equation, PdeResidual};
pub use quad::{integrate_checked, CheckedIntegral, Quadrature};
pub use series::Series;
pub use theta::{conformal_scal_numeric, theta2_direct, theta2_eval, ThetaReport};

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Geometry {
    /// Unit round `Sⁿ`, `Scal = n(n-1)`.
    RoundSphere(u32),
    /// Product of two unit round 2-spheres, `Scal = 4`; data depend on the
    /// polar angle of the first factor.
    ProductS2xS2,
}

impl Geometry {
    pub fn sphere(n: u32) -> Result<Self, SphereError> {
        if n < 3 {
            return Err(SphereError::BadInput(format!("sphere dimension must be at least 3, got {n}")));
        }
        Ok(Geometry::RoundSphere(n))
    }

    pub fn n(self) -> u32 {
        match self {
            Geometry::RoundSphere(n) => n,
            Geometry::ProductS2xS2 => 4,
        }
    }

    /// Dimension of the sphere on which data vary.
    pub fn factor_dim(self) -> u32 {
        match self {
            Geometry::RoundSphere(n) => n,
            Geometry::ProductS2xS2 => 2,
        }
    }

    pub fn scal(self) -> f64 {
        match self {
            Geometry::RoundSphere(n) => (n * (n - 1)) as f64,
            Geometry::ProductS2xS2 => 4.0,
        }
    }

    /// `∫_M f dv = C ∫_0^π f(cos θ) sin^{m-1} θ dθ`.
    pub fn measure_constant(self) -> f64 {
        let m = self.factor_dim();
        let pi = std::f64::consts::PI;
        // ω_{m-1} = 2π^{m/2} / Γ(m/2)
        let omega = 2.0 * pi.powf(m as f64 / 2.0) / gamma_half(m);
        match self {
            Geometry::RoundSphere(_) => omega,
            Geometry::ProductS2xS2 => omega * 4.0 * pi,
        }
    }

    pub fn volume(self) -> f64 {
        let m = self.factor_dim();
        // ∫_0^π sin^{m-1} = √π Γ(m/2) / Γ((m+1)/2)
        let line = std::f64::consts::PI.sqrt() * gamma_half(m) / gamma_half(m + 1);
        self.measure_constant() * line
    }

    pub fn name(self) -> String {
        match self {
            Geometry::RoundSphere(n) => format!("S^{n}"),
            Geometry::ProductS2xS2 => "S^2xS^2".into(),
        }
    }
}

impl fmt::Display for Geometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SphereError {
    #[error("datum must be positive, found {value} at x = {x}")]
    NonPositive { x: f64, value: f64 },
    #[error("quadrature with {nodes} nodes not converged: doubling changed the result by {change:e}")]
    Quadrature { nodes: usize, change: f64 },
    #[error("{0}")]
    BadInput(String),
    #[error(transparent)]
    Terms(#[from] crate::terms::TermError),
}
