use cqe_dsl::CenterFunction;
use cqe_geom::{GeomError, Point, Quad, Real, Triangle};
use std::fmt::Display;
use thiserror::Error;

/// Reasons a sample yields no central quadrilateral. Callers skip the sample.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum CentralError {
    #[error("center undefined in half triangle {triangle}: {reason}")]
    Undefined { triangle: usize, reason: String },
    #[error("degenerate central quadrilateral: {0}")]
    Degenerate(GeomError),
}

/// Central quadrilaterals smaller than this fraction of the reference are
/// treated as a single point.
pub const COLLAPSE: f64 = 1e-9;

/// E, F, G, H: the center `f` of triangles BCD, ACD, ABD, ABC in that order.
pub fn central_points<T: Real, E: Display>(
    q: &Quad<T>,
    f: impl Fn(&Triangle<T>) -> Result<Point<T>, E>,
) -> Result<[Point<T>; 4], CentralError> {
    let tris = q.half_triangles().map_err(CentralError::Degenerate)?;
    let mut out = [Point::origin(); 4];
    for (i, t) in tris.iter().enumerate() {
        let p = f(t).map_err(|e| CentralError::Undefined { triangle: i, reason: e.to_string() })?;
        if !p.is_finite() {
            return Err(CentralError::Undefined { triangle: i, reason: "non-finite point".into() });
        }
        out[i] = p;
    }
    Ok(out)
}

/// Central quadrilateral EFGH; it need not be convex, but three collinear
/// vertices make it unusable for the detectors.
pub fn central_quad<T: Real, E: Display>(
    q: &Quad<T>,
    f: impl Fn(&Triangle<T>) -> Result<Point<T>, E>,
) -> Result<Quad<T>, CentralError> {
    let e = Quad::new(central_points(q, f)?).map_err(CentralError::Degenerate)?;
    if e.diameter() <= T::lit(COLLAPSE) * q.diameter() {
        return Err(CentralError::Degenerate(GeomError::Degenerate("central quadrilateral collapses to a point")));
    }
    Ok(e)
}

pub fn central_quad_of<T: Real>(q: &Quad<T>, center: &CenterFunction) -> Result<Quad<T>, CentralError> {
    central_quad(q, |t| center.point(t))
}
