use crate::{GeomError, Point, Triangle};
use cqe_numerics::Real;

/// Four vertices A, B, C, D in cyclic order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quad<T = f64> {
    pub v: [Point<T>; 4],
}

impl<T: Real> Quad<T> {
    /// Rejects non-finite input and any three collinear vertices.
    pub fn new(v: [Point<T>; 4]) -> Result<Self, GeomError> {
        if v.iter().any(|p| !p.is_finite()) {
            return Err(GeomError::AtInfinity);
        }
        for skip in 0..4 {
            let t: Vec<Point<T>> = (0..4).filter(|&i| i != skip).map(|i| v[i]).collect();
            Triangle::new(t[0], t[1], t[2])?;
        }
        Ok(Quad { v })
    }

    pub fn a(&self) -> Point<T> {
        self.v[0]
    }
    pub fn b(&self) -> Point<T> {
        self.v[1]
    }
    pub fn c(&self) -> Point<T> {
        self.v[2]
    }
    pub fn d(&self) -> Point<T> {
        self.v[3]
    }

    /// [|AB|, |BC|, |CD|, |DA|].
    pub fn sides(&self) -> [T; 4] {
        std::array::from_fn(|i| crate::distance(self.v[i], self.v[(i + 1) % 4]))
    }

    /// (|AC|, |BD|).
    pub fn diagonals(&self) -> (T, T) {
        (crate::distance(self.v[0], self.v[2]), crate::distance(self.v[1], self.v[3]))
    }

    /// Unsigned angle between the two edges at each vertex.
    pub fn angles(&self) -> [T; 4] {
        std::array::from_fn(|i| {
            let p = self.v[(i + 3) % 4] - self.v[i];
            let q = self.v[(i + 1) % 4] - self.v[i];
            p.cross(q).abs().atan2(p.dot(q))
        })
    }

    /// Half triangles in the order BCD, ACD, ABD, ABC.
    pub fn half_triangles(&self) -> Result<[Triangle<T>; 4], GeomError> {
        let [a, b, c, d] = self.v;
        Ok([
            Triangle::new(b, c, d)?,
            Triangle::new(a, c, d)?,
            Triangle::new(a, b, d)?,
            Triangle::new(a, b, c)?,
        ])
    }

    pub fn signed_area(&self) -> T {
        polygon_area(&self.v)
    }

    pub fn area(&self) -> T {
        self.signed_area().abs()
    }

    pub fn perimeter(&self) -> T {
        perimeter(&self.v)
    }

    /// Vertex centroid (A+B+C+D)/4.
    pub fn vertex_centroid(&self) -> Point<T> {
        (self.v[0] + self.v[1] + self.v[2] + self.v[3]) / T::lit(4.0)
    }

    /// Largest pairwise vertex distance.
    pub fn diameter(&self) -> T {
        let mut m = T::zero();
        for i in 0..4 {
            for j in i + 1..4 {
                m = m.max(crate::distance(self.v[i], self.v[j]));
            }
        }
        m
    }

    pub fn is_convex(&self) -> bool {
        let s: Vec<T> = (0..4)
            .map(|i| {
                let e1 = self.v[(i + 1) % 4] - self.v[i];
                let e2 = self.v[(i + 2) % 4] - self.v[(i + 1) % 4];
                e1.cross(e2)
            })
            .collect();
        s.iter().all(|x| *x > T::zero()) || s.iter().all(|x| *x < T::zero())
    }

    /// Vertices reordered so that result[i] = self[perm[i]].
    pub fn permuted(&self, perm: [usize; 4]) -> Quad<T> {
        Quad { v: perm.map(|i| self.v[i]) }
    }

    pub fn map(&self, f: impl Fn(Point<T>) -> Point<T>) -> Quad<T> {
        Quad { v: self.v.map(f) }
    }

    pub fn to_f64(&self) -> Quad<f64> {
        Quad { v: self.v.map(|p| p.to_f64()) }
    }
}

/// Shoelace area, counterclockwise positive.
pub fn polygon_area<T: Real>(pts: &[Point<T>]) -> T {
    let n = pts.len();
    let mut s = T::zero();
    for i in 0..n {
        s = s + pts[i].cross(pts[(i + 1) % n]);
    }
    s * T::half()
}

/// Closed-polygon perimeter.
pub fn perimeter<T: Real>(pts: &[Point<T>]) -> T {
    let n = pts.len();
    (0..n).fold(T::zero(), |acc, i| acc + crate::distance(pts[i], pts[(i + 1) % n]))
}
