//! Exact arithmetic kernel: rationals, polynomials, the field Q(n) and
//! exact linear solving.

mod matrix;
mod mpoly;
mod parse;
mod ratfunc;
mod upoly;

pub use matrix::{solve_exact, ExactMatrix};
pub use mpoly::{MPoly, Monomial};
pub use num_rational::BigRational;
pub use parse::parse_rf;
pub use ratfunc::RationalFunction;
pub use upoly::{q, rational_to_f64, UPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("solution failed exact re-verification")]
    VerificationFailed,
}
