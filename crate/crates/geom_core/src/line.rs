use crate::{GeomError, Point};
use cqe_numerics::Real;

/// `l x + m y + n = 0` with `(l, m) != (0, 0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line<T = f64> {
    pub l: T,
    pub m: T,
    pub n: T,
}

impl<T: Real> Line<T> {
    pub fn new(l: T, m: T, n: T) -> Result<Self, GeomError> {
        if l == T::zero() && m == T::zero() {
            return Err(GeomError::Degenerate("line with zero normal"));
        }
        Ok(Line { l, m, n })
    }

    pub fn through(p: Point<T>, q: Point<T>) -> Result<Self, GeomError> {
        if p == q {
            return Err(GeomError::Degenerate("line through coincident points"));
        }
        Line::new(p.y - q.y, q.x - p.x, p.x * q.y - p.y * q.x)
    }

    /// Line through `p` with direction `d`.
    pub fn point_dir(p: Point<T>, d: Point<T>) -> Result<Self, GeomError> {
        Line::through(p, p + d)
    }

    pub fn normal(&self) -> Point<T> {
        Point::new(self.l, self.m)
    }

    pub fn direction(&self) -> Point<T> {
        Point::new(-self.m, self.l)
    }

    pub fn eval(&self, p: Point<T>) -> T {
        self.l * p.x + self.m * p.y + self.n
    }

    pub fn distance(&self, p: Point<T>) -> T {
        self.eval(p).abs() / self.normal().norm()
    }

    pub fn foot(&self, p: Point<T>) -> Point<T> {
        let nrm = self.normal();
        p - nrm * (self.eval(p) / nrm.norm2())
    }

    pub fn reflect(&self, p: Point<T>) -> Point<T> {
        let f = self.foot(p);
        f * T::two() - p
    }

    pub fn intersect(&self, o: &Line<T>) -> Result<Point<T>, GeomError> {
        let d = self.l * o.m - self.m * o.l;
        let scale = self.normal().norm() * o.normal().norm();
        if d.abs() <= T::epsilon() * T::lit(16.0) * scale {
            return Err(GeomError::Parallel);
        }
        let x = (self.m * o.n - self.n * o.m) / d;
        let y = (self.n * o.l - self.l * o.n) / d;
        let p = Point::new(x, y);
        if !p.is_finite() {
            return Err(GeomError::AtInfinity);
        }
        Ok(p)
    }

    pub fn perpendicular_through(&self, p: Point<T>) -> Line<T> {
        Line { l: -self.m, m: self.l, n: self.m * p.x - self.l * p.y }
    }

    pub fn parallel_through(&self, p: Point<T>) -> Line<T> {
        Line { l: self.l, m: self.m, n: -(self.l * p.x + self.m * p.y) }
    }

    pub fn perpendicular_bisector(p: Point<T>, q: Point<T>) -> Result<Line<T>, GeomError> {
        let base = Line::through(p, q)?;
        Ok(base.perpendicular_through(crate::midpoint(p, q)))
    }
}
