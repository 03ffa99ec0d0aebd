//! Registry of triangle centers indexed by their encyclopedia number, the
//! named center sets, the parametric families and the first Brocard point.

// `!(x > 0)` is deliberate: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod catalog;
mod family;
mod sets;

pub use catalog::{Catalog, CatalogEntry, Tag, DEFAULT_CATALOG};
pub use family::{brocard_point_first, family, Family};
pub use sets::{CenterSet, CIRCUMCIRCLE_SET, SHINAGAWA_SET};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: X{index}: {source}")]
    Invalid { line: usize, index: u32, source: cqe_dsl::DslError },
    #[error("line {line}: duplicate entry X{index}")]
    Duplicate { line: usize, index: u32 },
    #[error("line {line}: X{index} fails tag `{tag}` (residual {residual:.3e})")]
    TagViolation { line: usize, index: u32, tag: &'static str, residual: f64 },
    #[error("X{0} is not in the catalog")]
    Missing(u32),
    #[error("X{index}: {source}")]
    Undefined { index: u32, source: cqe_dsl::DslError },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
