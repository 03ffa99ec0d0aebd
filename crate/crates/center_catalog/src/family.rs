use cqe_dsl::{parse_expr, CenterFunction, CoordKind, DslError};
use cqe_geom::{BaryPoint, Point, Triangle};
use cqe_numerics::Real;
use std::str::FromStr;

/// One-parameter families of trilinear center functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// a^k
    Power,
    /// cos B cos C + k cos A
    CosEuler,
    /// a (k (a² − b² − c²) − S)
    HarmonicLine,
}

impl Family {
    pub fn source(self) -> &'static str {
        match self {
            Family::Power => "a^k",
            Family::CosEuler => "cos(B)*cos(C)+k*cos(A)",
            Family::HarmonicLine => "a*(k*(a^2-b^2-c^2)-S)",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Power => "power",
            Family::CosEuler => "cos_euler",
            Family::HarmonicLine => "harmonic_line",
        }
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "power" => Ok(Family::Power),
            "cos_euler" => Ok(Family::CosEuler),
            "harmonic_line" => Ok(Family::HarmonicLine),
            _ => Err(format!("unknown family `{s}` (power, cos_euler, harmonic_line)")),
        }
    }
}

pub fn family(f: Family, k: f64) -> Result<CenterFunction, DslError> {
    if !k.is_finite() {
        return Err(DslError::Undefined("non-finite family parameter"));
    }
    let expr = parse_expr(f.source())?;
    CenterFunction::new(expr, CoordKind::Trilinear)?.bind(k)
}

/// First Brocard point, barycentrics (a²c² : a²b² : b²c²).
pub fn brocard_point_first<T: Real>(tri: &Triangle<T>) -> Point<T> {
    let (a, b, c) = tri.sides();
    let (a2, b2, c2) = (a * a, b * b, c * c);
    tri.bary_to_cartesian(&BaryPoint::new(a2 * c2, a2 * b2, b2 * c2))
        .expect("weights are positive")
}
