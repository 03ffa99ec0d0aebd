use crate::{GeomError, Triangle};
use cqe_numerics::Real;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point<T = f64> {
    pub x: T,
    pub y: T,
}

impl<T: Real> Point<T> {
    pub fn new(x: T, y: T) -> Self {
        Point { x, y }
    }

    pub fn from_f64(x: f64, y: f64) -> Self {
        Point { x: T::lit(x), y: T::lit(y) }
    }

    pub fn origin() -> Self {
        Point { x: T::zero(), y: T::zero() }
    }

    pub fn dot(self, o: Self) -> T {
        self.x * o.x + self.y * o.y
    }

    pub fn cross(self, o: Self) -> T {
        self.x * o.y - self.y * o.x
    }

    pub fn norm2(self) -> T {
        self.dot(self)
    }

    pub fn norm(self) -> T {
        self.norm2().sqrt()
    }

    /// Counterclockwise quarter turn.
    pub fn perp(self) -> Self {
        Point { x: -self.y, y: self.x }
    }

    pub fn rotated(self, angle: T) -> Self {
        let (s, c) = (angle.sin(), angle.cos());
        Point { x: c * self.x - s * self.y, y: s * self.x + c * self.y }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn to_f64(self) -> Point<f64> {
        Point { x: self.x.as_f64(), y: self.y.as_f64() }
    }

    pub fn cast<U: Real>(self) -> Point<U> {
        Point { x: U::lit(self.x.as_f64()), y: U::lit(self.y.as_f64()) }
    }
}

impl<T: Real> Add for Point<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Point { x: self.x + o.x, y: self.y + o.y }
    }
}

impl<T: Real> Sub for Point<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Point { x: self.x - o.x, y: self.y - o.y }
    }
}

impl<T: Real> Mul<T> for Point<T> {
    type Output = Self;
    fn mul(self, k: T) -> Self {
        Point { x: self.x * k, y: self.y * k }
    }
}

impl<T: Real> Div<T> for Point<T> {
    type Output = Self;
    fn div(self, k: T) -> Self {
        Point { x: self.x / k, y: self.y / k }
    }
}

impl<T: Real> Neg for Point<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Point { x: -self.x, y: -self.y }
    }
}

pub fn distance<T: Real>(p: Point<T>, q: Point<T>) -> T {
    (p - q).norm()
}

pub fn midpoint<T: Real>(p: Point<T>, q: Point<T>) -> Point<T> {
    (p + q) * T::half()
}

/// Homogeneous barycentric weights; equality is projective.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BaryPoint<T = f64> {
    pub u: T,
    pub v: T,
    pub w: T,
}

impl<T: Real> BaryPoint<T> {
    pub fn new(u: T, v: T, w: T) -> Self {
        BaryPoint { u, v, w }
    }

    pub fn sum(&self) -> T {
        self.u + self.v + self.w
    }

    pub fn norm(&self) -> T {
        (self.u * self.u + self.v * self.v + self.w * self.w).sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.u == T::zero() && self.v == T::zero() && self.w == T::zero()
    }

    /// Projective equality: the normalized cross product vanishes.
    pub fn proj_eq(&self, o: &Self, eps: f64) -> bool {
        let c = [
            self.v * o.w - self.w * o.v,
            self.w * o.u - self.u * o.w,
            self.u * o.v - self.v * o.u,
        ];
        let n = (c[0] * c[0] + c[1] * c[1] + c[2] * c[2]).sqrt();
        n <= T::lit(eps) * self.norm() * o.norm()
    }

    pub fn to_cartesian(&self, tri: &Triangle<T>) -> Result<Point<T>, GeomError> {
        tri.bary_to_cartesian(self)
    }
}
