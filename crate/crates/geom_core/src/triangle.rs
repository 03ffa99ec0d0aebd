use crate::{BaryPoint, Circle, GeomError, Line, Point};
use cqe_numerics::Real;

/// Non-degenerate triangle; a = |BC|, b = |CA|, c = |AB|.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle<T = f64> {
    pub a_pt: Point<T>,
    pub b_pt: Point<T>,
    pub c_pt: Point<T>,
}

impl<T: Real> Triangle<T> {
    pub fn new(a_pt: Point<T>, b_pt: Point<T>, c_pt: Point<T>) -> Result<Self, GeomError> {
        let t = Triangle { a_pt, b_pt, c_pt };
        let (a, b, c) = t.sides();
        let m = a.max(b).max(c);
        if !(m > T::zero()) || t.s().abs() <= T::lit(1e-12) * m * m {
            return Err(GeomError::Degenerate("collinear triangle"));
        }
        Ok(t)
    }

    pub fn vertices(&self) -> [Point<T>; 3] {
        [self.a_pt, self.b_pt, self.c_pt]
    }

    pub fn sides(&self) -> (T, T, T) {
        (
            crate::distance(self.b_pt, self.c_pt),
            crate::distance(self.c_pt, self.a_pt),
            crate::distance(self.a_pt, self.b_pt),
        )
    }

    /// Twice the signed area (counterclockwise positive).
    pub fn signed_s(&self) -> T {
        (self.b_pt - self.a_pt).cross(self.c_pt - self.a_pt)
    }

    /// Twice the area.
    pub fn s(&self) -> T {
        self.signed_s().abs()
    }

    /// (SA, SB, SC) with SA = (b² + c² − a²)/2.
    pub fn conway(&self) -> (T, T, T) {
        let (a, b, c) = self.sides();
        let (a2, b2, c2) = (a * a, b * b, c * c);
        let h = T::half();
        ((b2 + c2 - a2) * h, (c2 + a2 - b2) * h, (a2 + b2 - c2) * h)
    }

    /// Interior angles (A, B, C) in radians.
    pub fn angles(&self) -> (T, T, T) {
        let (sa, sb, sc) = self.conway();
        let s = self.s();
        (s.atan2(sa), s.atan2(sb), s.atan2(sc))
    }

    pub fn bary_to_cartesian(&self, p: &BaryPoint<T>) -> Result<Point<T>, GeomError> {
        let sum = p.sum();
        if p.is_zero() {
            return Err(GeomError::Degenerate("zero barycentric triple"));
        }
        if sum.abs() <= T::lit(1e-12) * p.norm() {
            return Err(GeomError::AtInfinity);
        }
        let q = (self.a_pt * p.u + self.b_pt * p.v + self.c_pt * p.w) / sum;
        if !q.is_finite() {
            return Err(GeomError::AtInfinity);
        }
        Ok(q)
    }

    /// Normalized (sum 1) barycentrics from signed sub-areas.
    pub fn cartesian_to_bary(&self, p: Point<T>) -> BaryPoint<T> {
        let s = self.signed_s();
        let u = (self.b_pt - p).cross(self.c_pt - p) / s;
        let v = (self.c_pt - p).cross(self.a_pt - p) / s;
        let w = (self.a_pt - p).cross(self.b_pt - p) / s;
        BaryPoint::new(u, v, w)
    }

    pub fn centroid(&self) -> Point<T> {
        (self.a_pt + self.b_pt + self.c_pt) / T::lit(3.0)
    }

    pub fn circumcircle(&self) -> Circle<T> {
        Circle::through(self.a_pt, self.b_pt, self.c_pt).expect("non-degenerate triangle")
    }

    pub fn circumcenter(&self) -> Point<T> {
        self.circumcircle().center
    }

    /// H = A + B + C − 2O.
    pub fn orthocenter(&self) -> Point<T> {
        self.a_pt + self.b_pt + self.c_pt - self.circumcenter() * T::two()
    }

    pub fn nine_point_circle(&self) -> Circle<T> {
        let c = (self.circumcenter() + self.orthocenter()) * T::half();
        Circle { center: c, radius: self.circumcircle().radius * T::half() }
    }

    pub fn altitude_foot(&self, i: usize) -> Point<T> {
        let v = self.vertices();
        let side = Line::through(v[(i + 1) % 3], v[(i + 2) % 3]).expect("non-degenerate triangle");
        side.foot(v[i])
    }
}

/// a²vw + b²uw + c²uv divided by (u²+v²+w²)(a²+b²+c²); zero iff the point is
/// on the circumcircle of `tri`.
pub fn circumcircle_condition<T: Real>(d: &BaryPoint<T>, tri: &Triangle<T>) -> T {
    let (a, b, c) = tri.sides();
    let (a2, b2, c2) = (a * a, b * b, c * c);
    let raw = a2 * d.v * d.w + b2 * d.u * d.w + c2 * d.u * d.v;
    let n = d.norm();
    raw / (n * n * (a2 + b2 + c2))
}
