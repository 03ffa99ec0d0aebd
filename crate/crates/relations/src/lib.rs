//! Detectors for relationships between a quadrilateral and its central
//! quadrilateral, the exclusion rules between them, and the table notation.

// `!(x > 0)` is deliberate: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod alignment;
mod detect;
mod notation;
mod relation;

pub use alignment::{Alignment, Pairing};
pub use detect::{
    apply_exclusions, common_circumconic, detect_all, detect_raw, diagonal_point_pairings, is_homothetic,
    is_orthogonal, is_perspective, is_similar, CommonConic, DetectOptions, Homothety, Similar,
};
pub use notation::{parse_statement, Atom, IdPattern, Located, Statement};
pub use relation::{CenterRef, Relation, RelationKind, Role};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NotationError {
    #[error("at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("`{0}` does not name a relation")]
    Unsupported(String),
}
