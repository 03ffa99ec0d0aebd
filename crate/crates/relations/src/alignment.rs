use cqe_geom::{Point, Quad, Real};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Correspondence between ABCD and a reordering of EFGH: vertex i of ABCD is
/// matched with vertex `perm[i]` of EFGH.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Alignment(pub [usize; 4]);

impl Alignment {
    pub const IDENTITY: Alignment = Alignment([0, 1, 2, 3]);

    /// Canonical search order: the four rotations, then the four reflections.
    pub const DIHEDRAL: [Alignment; 8] = [
        Alignment([0, 1, 2, 3]),
        Alignment([1, 2, 3, 0]),
        Alignment([2, 3, 0, 1]),
        Alignment([3, 0, 1, 2]),
        Alignment([3, 2, 1, 0]),
        Alignment([2, 1, 0, 3]),
        Alignment([1, 0, 3, 2]),
        Alignment([0, 3, 2, 1]),
    ];

    pub fn rotations() -> &'static [Alignment] {
        &Self::DIHEDRAL[..4]
    }

    pub fn name(&self) -> String {
        self.0.iter().map(|&i| (b'E' + i as u8) as char).collect()
    }

    /// Parses names such as `GHEF`; only the eight dihedral orders are legal.
    pub fn parse(s: &str) -> Option<Alignment> {
        Self::DIHEDRAL.into_iter().find(|a| a.name() == s.trim())
    }

    pub fn apply<T: Real>(&self, e: &Quad<T>) -> Quad<T> {
        e.permuted(self.0)
    }
}

impl fmt::Display for Alignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl From<Alignment> for String {
    fn from(a: Alignment) -> String {
        a.name()
    }
}

impl TryFrom<String> for Alignment {
    type Error = String;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        Alignment::parse(&s).ok_or_else(|| format!("`{s}` is not a dihedral alignment"))
    }
}

/// The three ways of splitting four points into two joins. The diagonal
/// point of a pairing is where its two joins meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Pairing {
    /// AC and BD.
    Diagonals,
    /// AD and BC.
    AdBc,
    /// AB and CD.
    AbCd,
}

impl Pairing {
    pub const ALL: [Pairing; 3] = [Pairing::Diagonals, Pairing::AdBc, Pairing::AbCd];

    /// Vertex order whose diagonals are this pairing's joins.
    pub fn order(self) -> [usize; 4] {
        match self {
            Pairing::Diagonals => [0, 1, 2, 3],
            Pairing::AdBc => [0, 1, 3, 2],
            Pairing::AbCd => [0, 2, 1, 3],
        }
    }

    pub fn names(self) -> (String, String) {
        let o = self.order();
        (o.iter().map(|&i| (b'A' + i as u8) as char).collect(), o.iter().map(|&i| (b'E' + i as u8) as char).collect())
    }

    pub fn point<T: Real>(self, q: &Quad<T>) -> Option<Point<T>> {
        let o = self.order();
        let l1 = cqe_geom::Line::through(q.v[o[0]], q.v[o[2]]).ok()?;
        let l2 = cqe_geom::Line::through(q.v[o[1]], q.v[o[3]]).ok()?;
        l1.intersect(&l2).ok()
    }
}
