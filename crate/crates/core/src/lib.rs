//! Exact and numeric verification of the integral identities behind the
//! uniqueness of constant Q-curvature metrics on closed Einstein manifolds.

pub mod ibp;
pub mod jet;
pub mod profile;
pub mod ring;
pub mod sphere;
pub mod terms;
