use crate::MinerError;
use cqe_catalog::{brocard_point_first, family, Catalog, Family};
use cqe_dsl::CenterFunction;
use cqe_geom::Quad;
use cqe_numerics::Real;
use cqe_quadcenters::{central_quad, central_quad_of, CentralError};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// What is placed in each half triangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CenterSpec {
    /// Encyclopedia index.
    Etc(u32),
    Family { family: Family, k: f64 },
    /// First Brocard point; not a triangle center.
    Brocard1,
}

impl CenterSpec {
    fn rank(&self) -> (u8, u32, &'static str, f64) {
        match *self {
            CenterSpec::Etc(n) => (0, n, "", 0.0),
            CenterSpec::Family { family, k } => (1, 0, family.name(), k),
            CenterSpec::Brocard1 => (2, 0, "", 0.0),
        }
    }

    /// `X5` for encyclopedia centers, the plain spec otherwise.
    pub fn label(&self) -> String {
        match self {
            CenterSpec::Etc(n) => format!("X{n}"),
            other => other.to_string(),
        }
    }

    pub fn index(&self) -> Option<u32> {
        match self {
            CenterSpec::Etc(n) => Some(*n),
            _ => None,
        }
    }
}

impl Eq for CenterSpec {}

impl Ord for CenterSpec {
    fn cmp(&self, o: &Self) -> Ordering {
        let (a, b) = (self.rank(), o.rank());
        (a.0, a.1, a.2).cmp(&(b.0, b.1, b.2)).then(a.3.total_cmp(&b.3))
    }
}

impl PartialOrd for CenterSpec {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for CenterSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CenterSpec::Etc(n) => write!(f, "{n}"),
            CenterSpec::Family { family, k } => write!(f, "{}(k={k})", family.name()),
            CenterSpec::Brocard1 => f.write_str("brocard1"),
        }
    }
}

impl FromStr for CenterSpec {
    type Err = MinerError;
    /// `5`, `X5`, `brocard1` or `power(k=0.5)`.
    fn from_str(s: &str) -> Result<Self, MinerError> {
        let s = s.trim();
        let bad = || MinerError::CenterSpec(s.to_string());
        if s.eq_ignore_ascii_case("brocard1") {
            return Ok(CenterSpec::Brocard1);
        }
        if let Some((name, rest)) = s.split_once('(') {
            let family: Family = name.parse().map_err(|_| bad())?;
            let k = rest.strip_suffix(')').and_then(|r| r.trim().strip_prefix("k=")).ok_or_else(bad)?;
            return Ok(CenterSpec::Family { family, k: k.trim().parse().map_err(|_| bad())? });
        }
        let digits = s.strip_prefix(['X', 'x']).unwrap_or(s);
        digits.parse().ok().filter(|n| *n > 0).map(CenterSpec::Etc).ok_or_else(bad)
    }
}

/// A spec bound to its evaluator.
#[derive(Debug, Clone)]
pub struct Center {
    pub spec: CenterSpec,
    function: Option<CenterFunction>,
}

impl Center {
    pub fn resolve(spec: CenterSpec, cat: &Catalog) -> Result<Center, MinerError> {
        let function = match spec {
            CenterSpec::Etc(n) => Some(cat.get(n).ok_or(MinerError::NotInCatalog(n))?.function.clone()),
            CenterSpec::Family { family: f, k } => Some(family(f, k).map_err(|e| MinerError::Family(e.to_string()))?),
            CenterSpec::Brocard1 => None,
        };
        Ok(Center { spec, function })
    }

    pub fn central<T: Real>(&self, q: &Quad<T>) -> Result<Quad<T>, CentralError> {
        match &self.function {
            Some(f) => central_quad_of(q, f),
            None => central_quad(q, |t| Ok::<_, String>(brocard_point_first(t))),
        }
    }
}
