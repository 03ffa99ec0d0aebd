use crate::{GeomError, Line, Point};
use cqe_numerics::Real;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle<T = f64> {
    pub center: Point<T>,
    pub radius: T,
}

impl<T: Real> Circle<T> {
    pub fn new(center: Point<T>, radius: T) -> Result<Self, GeomError> {
        if radius > T::zero() && radius.is_finite() && center.is_finite() {
            Ok(Circle { center, radius })
        } else {
            Err(GeomError::Degenerate("circle radius must be positive"))
        }
    }

    pub fn through(p: Point<T>, q: Point<T>, r: Point<T>) -> Result<Self, GeomError> {
        let b1 = Line::perpendicular_bisector(p, q)?;
        let b2 = Line::perpendicular_bisector(q, r)?;
        let c = b1.intersect(&b2).map_err(|_| GeomError::Degenerate("collinear points"))?;
        Circle::new(c, crate::distance(c, p))
    }

    /// Distance from `p` to the circle.
    pub fn residual(&self, p: Point<T>) -> T {
        (crate::distance(self.center, p) - self.radius).abs()
    }

    /// Both intersection points; tangency returns the point twice. Circles that
    /// miss by less than `slack` (relative to the radii) are treated as tangent.
    pub fn intersect(&self, o: &Circle<T>, slack: f64) -> Result<[Point<T>; 2], GeomError> {
        let d_vec = o.center - self.center;
        let d = d_vec.norm();
        let scale = self.radius.max(o.radius);
        if d <= T::lit(slack) * scale {
            return Err(GeomError::Degenerate("concentric circles"));
        }
        let a = (self.radius * self.radius - o.radius * o.radius + d * d) / (T::two() * d);
        let mut h2 = self.radius * self.radius - a * a;
        if h2 < T::zero() {
            if -h2 > T::lit(slack) * scale * scale {
                return Err(GeomError::NoIntersection);
            }
            h2 = T::zero();
        }
        let h = h2.sqrt();
        let u = d_vec / d;
        let m = self.center + u * a;
        let n = u.perp();
        Ok([m + n * h, m - n * h])
    }
}
