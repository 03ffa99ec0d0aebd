use crate::ShapeError;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Shape {
    General,
    Cyclic,
    Tangential,
    Extangential,
    Parallelogram,
    EqualProdOpp,
    EqualProdAdj,
    Orthodiagonal,
    Equidiagonal,
    Pythagorean,
    Kite,
    Trapezoid,
    Rhombus,
    Rectangle,
    Hjelmslev,
    IsoscelesTrapezoid,
    Ap,
    Bicentric,
    Exbicentric,
    BicentricTrapezoid,
    CyclicOrthodiagonal,
    EquidiagonalKite,
    EqOrtho,
    EqOrthoTrapezoid,
    Harmonic,
    OrthodiagonalTrapezoid,
    TangentialTrapezoid,
    Square,
    Orthoptic,
    Orthocentric,
}

use Shape::*;

impl Shape {
    pub const ALL: [Shape; 30] = [
        General,
        Cyclic,
        Tangential,
        Extangential,
        Parallelogram,
        EqualProdOpp,
        EqualProdAdj,
        Orthodiagonal,
        Equidiagonal,
        Pythagorean,
        Kite,
        Trapezoid,
        Rhombus,
        Rectangle,
        Hjelmslev,
        IsoscelesTrapezoid,
        Ap,
        Bicentric,
        Exbicentric,
        BicentricTrapezoid,
        CyclicOrthodiagonal,
        EquidiagonalKite,
        EqOrtho,
        EqOrthoTrapezoid,
        Harmonic,
        OrthodiagonalTrapezoid,
        TangentialTrapezoid,
        Square,
        Orthoptic,
        Orthocentric,
    ];

    /// The 28 shapes of the main study (everything but the two extras).
    pub fn studied() -> impl Iterator<Item = Shape> {
        Shape::ALL.into_iter().filter(|s| !s.is_extra())
    }

    pub fn is_extra(self) -> bool {
        matches!(self, Orthoptic | Orthocentric)
    }

    pub fn name(self) -> &'static str {
        match self {
            General => "general",
            Cyclic => "cyclic",
            Tangential => "tangential",
            Extangential => "extangential",
            Parallelogram => "parallelogram",
            EqualProdOpp => "equalProdOpp",
            EqualProdAdj => "equalProdAdj",
            Orthodiagonal => "orthodiagonal",
            Equidiagonal => "equidiagonal",
            Pythagorean => "pythagorean",
            Kite => "kite",
            Trapezoid => "trapezoid",
            Rhombus => "rhombus",
            Rectangle => "rectangle",
            Hjelmslev => "hjelmslev",
            IsoscelesTrapezoid => "isosceles_trapezoid",
            Ap => "ap",
            Bicentric => "bicentric",
            Exbicentric => "exbicentric",
            BicentricTrapezoid => "bicentric_trapezoid",
            CyclicOrthodiagonal => "cyclic_orthodiagonal",
            EquidiagonalKite => "equidiagonal_kite",
            EqOrtho => "eq_ortho",
            EqOrthoTrapezoid => "eq_ortho_trapezoid",
            Harmonic => "harmonic",
            OrthodiagonalTrapezoid => "orthodiagonal_trapezoid",
            TangentialTrapezoid => "tangential_trapezoid",
            Square => "square",
            Orthoptic => "orthoptic",
            Orthocentric => "orthocentric",
        }
    }

    /// Direct parents: every `self` quadrilateral is also of each parent type.
    pub fn parents(self) -> &'static [Shape] {
        match self {
            General => &[],
            Cyclic | Tangential | Extangential | EqualProdOpp | EqualProdAdj | Orthodiagonal | Equidiagonal
            | Pythagorean | Trapezoid | Ap | Orthoptic | Orthocentric => &[General],
            Kite => &[Orthodiagonal, Tangential, EqualProdOpp],
            Parallelogram => &[Trapezoid],
            Rhombus => &[Parallelogram, Kite],
            Rectangle => &[Parallelogram, IsoscelesTrapezoid, Equidiagonal, Hjelmslev],
            IsoscelesTrapezoid => &[Trapezoid, Cyclic, Equidiagonal],
            Hjelmslev => &[Cyclic],
            Bicentric => &[Cyclic, Tangential],
            Exbicentric => &[Cyclic, Extangential],
            BicentricTrapezoid => &[Bicentric, IsoscelesTrapezoid, TangentialTrapezoid],
            CyclicOrthodiagonal => &[Cyclic, Orthodiagonal],
            EquidiagonalKite => &[Kite, Equidiagonal],
            EqOrtho => &[Equidiagonal, Orthodiagonal],
            EqOrthoTrapezoid => &[EqOrtho, OrthodiagonalTrapezoid, IsoscelesTrapezoid, CyclicOrthodiagonal],
            Harmonic => &[Cyclic, EqualProdOpp],
            OrthodiagonalTrapezoid => &[Trapezoid, Orthodiagonal],
            TangentialTrapezoid => &[Trapezoid, Tangential],
            Square => &[Rectangle, Rhombus, BicentricTrapezoid, EquidiagonalKite, EqOrthoTrapezoid, Harmonic],
        }
    }

    /// Transitive closure of `parents`, excluding `self`.
    pub fn ancestors(self) -> BTreeSet<Shape> {
        let mut out = BTreeSet::new();
        let mut stack: Vec<Shape> = self.parents().to_vec();
        while let Some(s) = stack.pop() {
            if out.insert(s) {
                stack.extend_from_slice(s.parents());
            }
        }
        out
    }

    pub fn is_a(self, other: Shape) -> bool {
        self == other || self.ancestors().contains(&other)
    }

    /// Cyclic-family samples are scaled to circumradius 1.
    pub fn is_cyclic_family(self) -> bool {
        self.is_a(Cyclic)
    }

    pub fn is_convex_family(self) -> bool {
        !matches!(self, Orthoptic | Orthocentric)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn fold(s: &str) -> String {
    s.chars().filter(|c| *c != '_' && *c != '-' && *c != ' ').flat_map(char::to_lowercase).collect()
}

impl FromStr for Shape {
    type Err = ShapeError;
    fn from_str(s: &str) -> Result<Self, ShapeError> {
        let key = fold(s);
        let alias = match key.as_str() {
            "apquad" => Some(Ap),
            "isotrap" => Some(IsoscelesTrapezoid),
            "equidiagonalorthodiagonal" => Some(EqOrtho),
            "equidiagonalorthodiagonaltrapezoid" => Some(EqOrthoTrapezoid),
            _ => None,
        };
        alias
            .or_else(|| Shape::ALL.into_iter().find(|sh| fold(sh.name()) == key))
            .ok_or_else(|| ShapeError::Unknown(s.to_string()))
    }
}

/// The lattice as a Graphviz digraph, parent → child.
pub fn lattice_dot() -> String {
    let mut out = String::from("digraph shapes {\n  rankdir=TB;\n");
    for s in Shape::ALL {
        for p in s.parents() {
            out.push_str(&format!("  \"{p}\" -> \"{s}\";\n"));
        }
    }
    out.push_str("}\n");
    out
}
