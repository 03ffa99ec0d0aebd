use crate::{GeomError, Point, Scalar};
use cqe_numerics::Real;

/// αx² + βxy + γy² + δx + εy + ζ = 0, coefficient vector of unit norm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Conic<T = f64> {
    pub coef: [T; 6],
}

impl<T: Real> Conic<T> {
    pub fn new(coef: [T; 6]) -> Result<Self, GeomError> {
        let n = coef.iter().fold(T::zero(), |acc, c| acc + *c * *c).sqrt();
        if !(n > T::zero()) || !n.is_finite() {
            return Err(GeomError::Degenerate("zero conic"));
        }
        // Sign fixed so the first significant coefficient is positive.
        let lead = coef.iter().find(|c| c.abs() > n * T::lit(1e-12)).copied().unwrap_or(n);
        let s = if lead < T::zero() { -n } else { n };
        Ok(Conic { coef: coef.map(|c| c / s) })
    }

    pub fn eval(&self, p: Point<T>) -> T {
        let [a, b, c, d, e, f] = self.coef;
        a * p.x * p.x + b * p.x * p.y + c * p.y * p.y + d * p.x + e * p.y + f
    }

    pub fn gradient(&self, p: Point<T>) -> Point<T> {
        let [a, b, c, d, e, _] = self.coef;
        Point::new(T::two() * a * p.x + b * p.y + d, b * p.x + T::two() * c * p.y + e)
    }

    /// β² − 4αγ.
    pub fn discriminant(&self) -> T {
        let [a, b, c, ..] = self.coef;
        b * b - T::lit(4.0) * a * c
    }

    fn quadratic_norm(&self) -> T {
        let [a, b, c, ..] = self.coef;
        (a * a + b * b + c * c).sqrt()
    }

    /// Determinant of the 3x3 symmetric matrix; zero for line pairs.
    pub fn projective_det(&self) -> T {
        let [a, b, c, d, e, f] = self.coef;
        let h = T::half();
        let m = [[a, b * h, d * h], [b * h, c, e * h], [d * h, e * h, f]];
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    pub fn is_degenerate(&self, tol: f64) -> bool {
        self.quadratic_norm() <= T::lit(tol) || self.projective_det().abs() <= T::lit(tol)
    }

    /// α = γ and β = 0 up to `tol` relative to the quadratic part.
    pub fn is_circle(&self, tol: f64) -> bool {
        let [a, b, c, ..] = self.coef;
        let q = self.quadratic_norm();
        q > T::zero() && (a - c).abs() <= T::lit(tol) * q && b.abs() <= T::lit(tol) * q
    }

    pub fn is_rectangular_hyperbola(&self, tol: f64) -> Result<bool, GeomError> {
        if self.quadratic_norm() <= T::lit(tol) {
            return Err(GeomError::Degenerate("conic without quadratic part"));
        }
        let [a, _, c, ..] = self.coef;
        let q = self.quadratic_norm();
        Ok((a + c).abs() <= T::lit(tol) * q && self.discriminant() > T::zero())
    }

    pub fn center(&self, tol: f64) -> Result<Point<T>, GeomError> {
        let [a, b, c, d, e, _] = self.coef;
        let det = T::lit(4.0) * a * c - b * b;
        let q = self.quadratic_norm();
        if det.abs() <= T::lit(tol) * q * q {
            return Err(GeomError::NoCenter);
        }
        let x = (b * e - T::two() * c * d) / det;
        let y = (b * d - T::two() * a * e) / det;
        Ok(Point::new(x, y))
    }

    /// Approximate Euclidean distance of `p` to the conic (first-order).
    pub fn residual(&self, p: Point<T>) -> T {
        let g = self.gradient(p).norm();
        let v = self.eval(p).abs();
        if g > T::zero() {
            v / g
        } else {
            v
        }
    }
}

/// Unique conic through five points. Works in a centered, unit-scaled frame
/// and maps the coefficients back.
pub fn conic_through<T: Scalar>(pts: &[Point<T>; 5], rel_eps: f64) -> Result<Conic<T>, GeomError> {
    let c = pts.iter().fold(Point::origin(), |acc, p| acc + *p) / T::lit(5.0);
    let s = pts.iter().fold(T::zero(), |acc, p| acc.max(crate::distance(*p, c)));
    if !(s > T::zero()) {
        return Err(GeomError::Degenerate("coincident points"));
    }
    let rows: [[T; 6]; 5] = std::array::from_fn(|i| {
        let q = (pts[i] - c) / s;
        [q.x * q.x, q.x * q.y, q.y * q.y, q.x, q.y, T::one()]
    });
    let [a, b, g, d, e, z] = T::conic_null(&rows, rel_eps)?;
    let (cx, cy) = (c.x, c.y);
    let two = T::two();
    let coef = [
        a,
        b,
        g,
        -two * a * cx - b * cy + d * s,
        -b * cx - two * g * cy + e * s,
        a * cx * cx + b * cx * cy + g * cy * cy - d * s * cx - e * s * cy + z * s * s,
    ];
    Conic::new(coef)
}
