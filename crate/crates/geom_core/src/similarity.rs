use crate::Point;
use cqe_numerics::Real;

/// p ↦ scale · R(angle) · p + shift.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Similarity<T = f64> {
    pub angle: T,
    pub scale: T,
    pub shift: Point<T>,
}

impl<T: Real> Similarity<T> {
    pub fn identity() -> Self {
        Similarity { angle: T::zero(), scale: T::one(), shift: Point::origin() }
    }

    pub fn apply(&self, p: Point<T>) -> Point<T> {
        p.rotated(self.angle) * self.scale + self.shift
    }

    pub fn apply_len(&self, l: T) -> T {
        l * self.scale
    }
}
