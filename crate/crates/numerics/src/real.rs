use num_traits::Float;
use std::fmt::{Debug, Display};

/// Extended-precision scalar (about 40 significant decimal digits).
pub type Hp = num_bigfloat::BigFloat;

/// Scalar field used by all geometric code. Implemented for `f64` (the
/// default) and [`Hp`] (the confirmation pass).
pub trait Real: Float + Debug + Display + Send + Sync + 'static {
    /// Human-readable name, used in diagnostics.
    const NAME: &'static str;

    fn lit(x: f64) -> Self;

    fn as_f64(self) -> f64;

    fn two() -> Self {
        Self::one() + Self::one()
    }

    fn half() -> Self {
        Self::lit(0.5)
    }

    fn pi() -> Self;
}

impl Real for f64 {
    const NAME: &'static str = "f64";

    fn lit(x: f64) -> Self {
        x
    }

    fn as_f64(self) -> f64 {
        self
    }

    fn pi() -> Self {
        std::f64::consts::PI
    }
}

impl Real for Hp {
    const NAME: &'static str = "bigfloat";

    fn lit(x: f64) -> Self {
        Hp::from_f64(x)
    }

    fn as_f64(self) -> f64 {
        self.to_f64()
    }

    fn pi() -> Self {
        num_bigfloat::PI
    }
}
