//! Quadrilateral shapes: seeded generators, residual checks and the ancestor
//! lattice used to decide novelty.

mod generate;
mod lattice;
mod verify;

pub use generate::generate;
pub use lattice::{lattice_dot, Shape};
pub use verify::{verify_shape, Constraint, Residual, ShapeReport};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ShapeError {
    #[error("unknown shape `{0}`")]
    Unknown(String),
    #[error("could not generate a {shape} sample after {attempts} attempts")]
    GenerationFailed { shape: &'static str, attempts: usize },
}

/// Residual bound a generated sample must meet for its own constraints.
pub const GENERATION_EPS: f64 = 1e-10;
