use crate::CenterError;
use cqe_geom::{midpoint, Circle, Line, Point, Quad, Real, Triangle};
use cqe_numerics::Tolerance;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "&'static str", try_from = "String")]
pub enum QuadCenterKind {
    /// QA-P1.
    VertexCentroid,
    /// QA-P2, common point of the half-triangle nine-point circles.
    Poncelet,
    /// QA-P3, common point of the midray circles.
    Steiner,
    DiagonalPoint,
    Anticenter,
    Circumcenter,
    /// QA-P7, center of the circle through the half-triangle centroids.
    Centrocenter,
    Orthocenter,
    Incenter,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Requirement {
    Cyclic,
    Tangential,
}

impl fmt::Display for Requirement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Requirement::Cyclic => "cyclic",
            Requirement::Tangential => "tangential",
        })
    }
}

impl QuadCenterKind {
    pub const ALL: [QuadCenterKind; 9] = [
        QuadCenterKind::VertexCentroid,
        QuadCenterKind::Poncelet,
        QuadCenterKind::Steiner,
        QuadCenterKind::DiagonalPoint,
        QuadCenterKind::Anticenter,
        QuadCenterKind::Circumcenter,
        QuadCenterKind::Centrocenter,
        QuadCenterKind::Orthocenter,
        QuadCenterKind::Incenter,
    ];

    /// Short name used in relation notation, e.g. `ponce[ABCD]`.
    pub fn symbol(self) -> &'static str {
        match self {
            QuadCenterKind::VertexCentroid => "m",
            QuadCenterKind::Poncelet => "ponce",
            QuadCenterKind::Steiner => "stein",
            QuadCenterKind::DiagonalPoint => "dp",
            QuadCenterKind::Anticenter => "anti",
            QuadCenterKind::Circumcenter => "o",
            QuadCenterKind::Centrocenter => "centro",
            QuadCenterKind::Orthocenter => "h",
            QuadCenterKind::Incenter => "i",
        }
    }

    pub fn requirement(self) -> Option<Requirement> {
        match self {
            QuadCenterKind::Anticenter
            | QuadCenterKind::Circumcenter
            | QuadCenterKind::Centrocenter
            | QuadCenterKind::Orthocenter => Some(Requirement::Cyclic),
            QuadCenterKind::Incenter => Some(Requirement::Tangential),
            _ => None,
        }
    }
}

impl fmt::Display for QuadCenterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl From<QuadCenterKind> for &'static str {
    fn from(k: QuadCenterKind) -> Self {
        k.symbol()
    }
}

impl TryFrom<String> for QuadCenterKind {
    type Error = String;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl FromStr for QuadCenterKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_lowercase();
        let alias = match t.as_str() {
            "qa-p1" | "centroid" | "vertex_centroid" => "m",
            "qa-p2" | "poncelet" => "ponce",
            "qa-p3" | "steiner" => "stein",
            "qa-p7" | "centrocenter" => "centro",
            "diagonal_point" => "dp",
            "anticenter" => "anti",
            "circumcenter" => "o",
            "orthocenter" => "h",
            "incenter" => "i",
            other => other,
        };
        QuadCenterKind::ALL
            .into_iter()
            .find(|k| k.symbol() == alias)
            .ok_or_else(|| format!("unknown quadrilateral center `{s}`"))
    }
}

/// Which shape-restricted centers a quadrilateral admits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Caps {
    pub cyclic: bool,
    pub tangential: bool,
}

impl Caps {
    pub fn of<T: Real>(q: &Quad<T>, tol: &Tolerance) -> Caps {
        Caps { cyclic: circumcircle(q, tol).is_ok(), tangential: incircle(q, tol).is_ok() }
    }

    pub fn allows(&self, kind: QuadCenterKind) -> bool {
        match kind.requirement() {
            None => true,
            Some(Requirement::Cyclic) => self.cyclic,
            Some(Requirement::Tangential) => self.tangential,
        }
    }

    /// Kinds to evaluate. On cyclic quadrilaterals the Poncelet point is the
    /// anticenter and the Steiner point is the circumcenter, so only the
    /// cyclic names are listed.
    pub fn kinds(&self) -> impl Iterator<Item = QuadCenterKind> + '_ {
        let cyclic = self.cyclic;
        QuadCenterKind::ALL.into_iter().filter(move |k| {
            self.allows(*k) && !(cyclic && matches!(k, QuadCenterKind::Poncelet | QuadCenterKind::Steiner))
        })
    }
}

fn dist_tol<T: Real>(tol: &Tolerance, scale: T) -> T {
    T::lit(tol.abs_eps).max(T::lit(tol.rel_eps) * scale)
}

fn requires(kind: QuadCenterKind) -> CenterError {
    CenterError::Requires { kind, req: kind.requirement().expect("restricted kind") }
}

/// Circle through A, B, C, accepted when D lies on it within tolerance.
/// Works for any vertex order, convex or not.
pub fn circumcircle<T: Real>(q: &Quad<T>, tol: &Tolerance) -> Result<Circle<T>, CenterError> {
    let c = Circle::through(q.a(), q.b(), q.c())?;
    if c.residual(q.d()) <= dist_tol(tol, c.radius) {
        Ok(c)
    } else {
        Err(requires(QuadCenterKind::Circumcenter))
    }
}

/// Circle tangent to the four side lines, centered where the internal angle
/// bisectors at A and B meet.
pub fn incircle<T: Real>(q: &Quad<T>, tol: &Tolerance) -> Result<Circle<T>, CenterError> {
    let v = q.v;
    let bisector = |i: usize| -> Result<Line<T>, CenterError> {
        let u = v[(i + 1) % 4] - v[i];
        let w = v[(i + 3) % 4] - v[i];
        Ok(Line::point_dir(v[i], u / u.norm() + w / w.norm())?)
    };
    let center = bisector(0)?.intersect(&bisector(1)?)?;
    let mut d = [T::zero(); 4];
    for (i, di) in d.iter_mut().enumerate() {
        *di = Line::through(v[i], v[(i + 1) % 4])?.distance(center);
    }
    let lo = d.iter().fold(d[0], |m, x| m.min(*x));
    let hi = d.iter().fold(d[0], |m, x| m.max(*x));
    if hi - lo <= dist_tol(tol, q.diameter()) {
        Ok(Circle::new(center, (lo + hi) * T::half())?)
    } else {
        Err(requires(QuadCenterKind::Incenter))
    }
}

/// Common point of concurrent circles: the intersection of the first two that
/// lies nearest the third, then checked against the rest.
fn common_point<T: Real>(
    kind: QuadCenterKind,
    circles: &[Circle<T>; 4],
    tol: &Tolerance,
    scale: T,
) -> Result<Point<T>, CenterError> {
    let [p, r] = circles[0].intersect(&circles[1], tol.rel_eps)?;
    let pick = if circles[2].residual(p) <= circles[2].residual(r) { p } else { r };
    let residual = circles[2..].iter().fold(T::zero(), |m, c| m.max(c.residual(pick)));
    if residual <= dist_tol(tol, scale) {
        Ok(pick)
    } else {
        Err(CenterError::Inconsistent { kind, residual: residual.as_f64() })
    }
}

/// Circle through the first three points, checked against the fourth.
fn circle4<T: Real>(kind: QuadCenterKind, pts: [Point<T>; 4], tol: &Tolerance) -> Result<Circle<T>, CenterError> {
    let c = Circle::through(pts[0], pts[1], pts[2])?;
    let residual = c.residual(pts[3]);
    if residual <= dist_tol(tol, c.radius) {
        Ok(c)
    } else {
        Err(CenterError::Inconsistent { kind, residual: residual.as_f64() })
    }
}

pub fn quad_center<T: Real>(kind: QuadCenterKind, q: &Quad<T>, tol: &Tolerance) -> Result<Point<T>, CenterError> {
    let scale = q.diameter();
    let v = q.v;
    match kind {
        QuadCenterKind::VertexCentroid => Ok(q.vertex_centroid()),
        QuadCenterKind::Poncelet => {
            let tris = q.half_triangles()?;
            let circles = tris.map(|t| t.nine_point_circle());
            common_point(kind, &circles, tol, scale)
        }
        QuadCenterKind::Steiner => {
            let midray = |i: usize| -> Result<Circle<T>, CenterError> {
                let m: Vec<Point<T>> = (0..4).filter(|&j| j != i).map(|j| midpoint(v[i], v[j])).collect();
                Ok(Circle::through(m[0], m[1], m[2])?)
            };
            let circles = [midray(0)?, midray(1)?, midray(2)?, midray(3)?];
            common_point(kind, &circles, tol, scale)
        }
        QuadCenterKind::DiagonalPoint => Ok(Line::through(v[0], v[2])?.intersect(&Line::through(v[1], v[3])?)?),
        QuadCenterKind::Circumcenter => {
            circumcircle(q, tol)?;
            let b1 = Line::perpendicular_bisector(v[0], v[1])?;
            let b2 = Line::perpendicular_bisector(v[1], v[2])?;
            Ok(b1.intersect(&b2)?)
        }
        QuadCenterKind::Anticenter => {
            let o = quad_center(QuadCenterKind::Circumcenter, q, tol)?;
            Ok(q.vertex_centroid() * T::two() - o)
        }
        QuadCenterKind::Centrocenter => {
            circumcircle(q, tol).map_err(|_| requires(kind))?;
            let g = q.half_triangles()?.map(|t| t.centroid());
            Ok(circle4(kind, g, tol)?.center)
        }
        QuadCenterKind::Orthocenter => {
            circumcircle(q, tol).map_err(|_| requires(kind))?;
            let h = q.half_triangles()?.map(|t: Triangle<T>| t.orthocenter());
            Ok(circle4(kind, h, tol)?.center)
        }
        QuadCenterKind::Incenter => Ok(incircle(q, tol)?.center),
    }
}
