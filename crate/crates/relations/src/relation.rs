use crate::{Alignment, Pairing};
use cqe_numerics::SmallRational;
use cqe_quadcenters::QuadCenterKind;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Which of the two quadrilaterals a center belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    Reference,
    Central,
}

/// A named center of ABCD or EFGH that a located point coincides with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CenterRef {
    pub role: Role,
    pub kind: QuadCenterKind,
}

impl CenterRef {
    /// `QA-Pn` for quadrangle centers, `kind[ABCD]` otherwise. The anticenter
    /// and circumcenter of a cyclic quadrilateral are its QA-P2 and QA-P3.
    pub fn label(&self) -> String {
        let qa = match self.kind {
            QuadCenterKind::VertexCentroid => Some(1),
            QuadCenterKind::Poncelet | QuadCenterKind::Anticenter => Some(2),
            QuadCenterKind::Steiner | QuadCenterKind::Circumcenter => Some(3),
            QuadCenterKind::Centrocenter => Some(7),
            _ => None,
        };
        match qa {
            Some(n) => format!("QA-P{n}"),
            None => format!("{}[{}]", self.kind, quad_name(self.role)),
        }
    }
}

fn quad_name(r: Role) -> &'static str {
    match r {
        Role::Reference => "ABCD",
        Role::Central => "EFGH",
    }
}

mod rational {
    use cqe_numerics::SmallRational;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &SmallRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<SmallRational, D::Error> {
        let s = String::deserialize(d)?;
        super::parse_rational(&s).ok_or_else(|| D::Error::custom(format!("bad rational `{s}`")))
    }
}

pub(crate) fn parse_rational(s: &str) -> Option<SmallRational> {
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let d: u64 = d.trim().parse().ok()?;
    (d > 0).then_some(())?;
    Some(SmallRational::new(n.trim().parse().ok()?, d))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RelationKind {
    AreaEqual,
    /// [ABCD] = k·[EFGH].
    AreaRatio {
        #[serde(with = "rational")]
        k: SmallRational,
    },
    Congruent,
    /// Linear ratio |ABCD| / |EFGH|.
    Similar { ratio: f64 },
    /// EFGH = X + λ(ABCD − X); `ratio` is 1/λ, signed.
    Homothetic { center: [f64; 2], ratio: f64, ids: Vec<CenterRef> },
    Perspective { perspector: [f64; 2], ids: Vec<CenterRef> },
    PerimeterEqual,
    CircumcircleCongruent,
    CircumcircleSame,
    /// Radius of ⊙EFGH over radius of ⊙ABCD.
    CircumcircleConcentric {
        #[serde(with = "rational")]
        ratio: SmallRational,
    },
    CircumcenterSame,
    IncenterSame,
    DpSame { pairing: Pairing },
    ConicCommon { center: Option<[f64; 2]>, ids: Vec<CenterRef> },
    HyperbCommon { center: [f64; 2], ids: Vec<CenterRef> },
    CentersCoincide { on_ref: QuadCenterKind, on_central: QuadCenterKind },
    Orthogonal,
}

impl RelationKind {
    /// Stable discriminant name, also the JSON tag.
    pub fn name(&self) -> &'static str {
        match self {
            RelationKind::AreaEqual => "area_equal",
            RelationKind::AreaRatio { .. } => "area_ratio",
            RelationKind::Congruent => "congruent",
            RelationKind::Similar { .. } => "similar",
            RelationKind::Homothetic { .. } => "homothetic",
            RelationKind::Perspective { .. } => "perspective",
            RelationKind::PerimeterEqual => "perimeter_equal",
            RelationKind::CircumcircleCongruent => "circumcircle_congruent",
            RelationKind::CircumcircleSame => "circumcircle_same",
            RelationKind::CircumcircleConcentric { .. } => "circumcircle_concentric",
            RelationKind::CircumcenterSame => "circumcenter_same",
            RelationKind::IncenterSame => "incenter_same",
            RelationKind::DpSame { .. } => "dp_same",
            RelationKind::ConicCommon { .. } => "conic_common",
            RelationKind::HyperbCommon { .. } => "hyperb_common",
            RelationKind::CentersCoincide { .. } => "centers_coincide",
            RelationKind::Orthogonal => "orthogonal",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Relation {
    #[serde(flatten)]
    pub kind: RelationKind,
    pub alignment: Alignment,
    /// Worst normalized defect of the defining test.
    pub residual: f64,
}

/// Quadrangle labels name a point before any other center at the same spot.
fn pick(ids: &[CenterRef], role: Role) -> Option<String> {
    let side = ids.iter().filter(|c| c.role == role);
    let first = side.clone().next()?;
    Some(side.map(|c| c.label()).find(|l| l.starts_with("QA-")).unwrap_or_else(|| first.label()))
}

fn wrap(ids: &[CenterRef], body: String) -> String {
    let left = pick(ids, Role::Reference);
    let right = pick(ids, Role::Central);
    let mut s = String::new();
    if let Some(l) = left {
        s += &l;
        s.push('=');
    }
    s += &body;
    if let Some(r) = right {
        s.push('=');
        s += &r;
    }
    s
}

impl Relation {
    /// The row label in table notation. Two findings with equal notation are
    /// the same statement, so this doubles as the grouping key.
    pub fn notation(&self) -> String {
        let al = self.alignment.name();
        match &self.kind {
            RelationKind::AreaEqual => "[ABCD]=[EFGH]".into(),
            RelationKind::AreaRatio { k } => {
                if k.is_integer() {
                    format!("[ABCD]={}[EFGH]", k.num)
                } else if k.num == 1 {
                    format!("[EFGH]={}[ABCD]", k.den)
                } else {
                    format!("[ABCD]/[EFGH]={k}")
                }
            }
            RelationKind::Congruent => format!("ABCD≅{al}"),
            RelationKind::Similar { .. } => format!("ABCD∼{al}"),
            RelationKind::Homothetic { ids, .. } => wrap(ids, format!("homot[ABCD,{al}]")),
            RelationKind::Perspective { ids, .. } => wrap(ids, format!("persp[ABCD,{al}]")),
            RelationKind::PerimeterEqual => "∂ABCD=∂EFGH".into(),
            RelationKind::CircumcircleCongruent => "⊙ABCD≅⊙EFGH".into(),
            RelationKind::CircumcircleSame => "⊙ABCD≡⊙EFGH".into(),
            RelationKind::CircumcircleConcentric { .. } | RelationKind::CircumcenterSame => "o[ABCD]=o[EFGH]".into(),
            RelationKind::IncenterSame => "i[ABCD]=i[EFGH]".into(),
            RelationKind::DpSame { pairing } => {
                let (a, e) = pairing.names();
                format!("dp({a})=dp({e})")
            }
            RelationKind::ConicCommon { ids, .. } => wrap(ids, "conic(ABCD,EFGH)".into()),
            RelationKind::HyperbCommon { ids, .. } => wrap(ids, "hyperb(ABCD,EFGH)".into()),
            RelationKind::CentersCoincide { on_ref, on_central } => format!("{on_ref}[ABCD]={on_central}[EFGH]"),
            RelationKind::Orthogonal => format!("ABCD⊥{al}"),
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.notation())
    }
}
