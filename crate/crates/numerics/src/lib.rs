//! Precision policy shared by every detector: tolerances, tolerance-aware
//! comparison, recognition of small rationals, and the scalar abstraction that
//! lets geometry run in `f64` or in extended precision.

mod ratio;
mod real;
mod tolerance;

pub use ratio::{recognize_ratio, recognize_ratio_eps, SmallRational};
pub use real::{Hp, Real};
pub use tolerance::{approx_eq, Tolerance};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumericsError {
    #[error("non-finite input: {0}")]
    NonFinite(f64),
    #[error("invalid tolerance: {0}")]
    InvalidTolerance(String),
}
