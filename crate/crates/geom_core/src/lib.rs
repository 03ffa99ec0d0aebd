//! Plane primitives generic over the scalar field: points, barycentric points,
//! lines, circles, conics, triangles and quadrilaterals.

// `!(x > 0)` is deliberate: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod circle;
mod conic;
mod linalg;
mod line;
mod point;
mod quad;
mod similarity;
mod triangle;

pub use circle::Circle;
pub use conic::{conic_through, Conic};
pub use linalg::{det, null_vector};
pub use line::Line;
pub use point::{distance, midpoint, BaryPoint, Point};
pub use quad::{perimeter, polygon_area, Quad};
pub use similarity::Similarity;
pub use triangle::{circumcircle_condition, Triangle};

pub use cqe_numerics::{Hp, Real};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeomError {
    #[error("degenerate configuration: {0}")]
    Degenerate(&'static str),
    #[error("point at infinity")]
    AtInfinity,
    #[error("lines are parallel")]
    Parallel,
    #[error("circles do not meet")]
    NoIntersection,
    #[error("conic has no center")]
    NoCenter,
    #[error("conic system is rank deficient")]
    RankDeficient,
}

/// Scalars the geometry layer can run on. The only operation that differs
/// between precisions is the conic null-space solve.
pub trait Scalar: Real {
    /// Unit null vector of the 5x6 conic incidence matrix.
    fn conic_null(rows: &[[Self; 6]; 5], rel_eps: f64) -> Result<[Self; 6], GeomError>;
}

impl Scalar for f64 {
    fn conic_null(rows: &[[f64; 6]; 5], rel_eps: f64) -> Result<[f64; 6], GeomError> {
        // Square 6x6 with a zero row so the SVD exposes the full right basis.
        let m = nalgebra::DMatrix::from_fn(6, 6, |i, j| if i < 5 { rows[i][j] } else { 0.0 });
        let svd = m.svd(false, true);
        let v_t = svd.v_t.ok_or(GeomError::RankDeficient)?;
        let mut idx: Vec<usize> = (0..6).collect();
        idx.sort_by(|&a, &b| svd.singular_values[a].total_cmp(&svd.singular_values[b]));
        let (s_min, s_next, s_max) = (
            svd.singular_values[idx[0]],
            svd.singular_values[idx[1]],
            svd.singular_values[idx[5]],
        );
        if s_max == 0.0 || s_next - s_min <= rel_eps * s_max {
            return Err(GeomError::RankDeficient);
        }
        let row = v_t.row(idx[0]);
        Ok(std::array::from_fn(|j| row[j]))
    }
}

impl Scalar for Hp {
    fn conic_null(rows: &[[Hp; 6]; 5], rel_eps: f64) -> Result<[Hp; 6], GeomError> {
        let m: Vec<Vec<Hp>> = rows.iter().map(|r| r.to_vec()).collect();
        let v = null_vector(&m, rel_eps)?;
        Ok(std::array::from_fn(|j| v[j]))
    }
}
