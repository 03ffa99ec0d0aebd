//! Quadrilateral centers and the central-quadrilateral construction.

mod central;
mod kinds;

pub use central::{central_points, central_quad, central_quad_of, CentralError, COLLAPSE};
pub use kinds::{circumcircle, incircle, quad_center, Caps, QuadCenterKind, Requirement};

use cqe_geom::GeomError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CenterError {
    #[error("{kind} is only defined for {req} quadrilaterals")]
    Requires { kind: QuadCenterKind, req: Requirement },
    #[error("construction failed: {0}")]
    Construction(#[from] GeomError),
    #[error("{kind}: constructed point misses a defining locus by {residual:e}")]
    Inconsistent { kind: QuadCenterKind, residual: f64 },
}
