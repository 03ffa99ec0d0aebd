use crate::CatalogError;
use cqe_dsl::{parse_expr, CenterFunction, CoordKind};
use cqe_geom::{circumcircle_condition, Point, Triangle};
use cqe_numerics::Real;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

/// The shipped catalog, one `n<TAB>kind<TAB>expr[<TAB>tags]` line per center.
pub const DEFAULT_CATALOG: &str = include_str!("../data/catalog.tsv");

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    OnCircumcircle,
    ShinagawaConstant,
    EulerLine,
}

impl Tag {
    pub fn parse(s: &str) -> Option<Tag> {
        match s {
            "on_circumcircle" => Some(Tag::OnCircumcircle),
            "shinagawa_constant" => Some(Tag::ShinagawaConstant),
            "euler_line" | "on_euler" => Some(Tag::EulerLine),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Tag::OnCircumcircle => "on_circumcircle",
            Tag::ShinagawaConstant => "shinagawa_constant",
            Tag::EulerLine => "euler_line",
        }
    }
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub index: u32,
    pub function: CenterFunction,
    pub tags: BTreeSet<Tag>,
}

#[derive(Debug, Clone, Default)]
pub struct Catalog {
    entries: BTreeMap<u32, CatalogEntry>,
}

const TAG_PROBES: usize = 8;
const TAG_SEED: u64 = 0xc1_2c1e;
const TAG_EPS: f64 = 1e-9;

fn tag_triangles() -> Vec<Triangle> {
    let mut rng = ChaCha8Rng::seed_from_u64(TAG_SEED);
    let mut out = Vec::new();
    while out.len() < TAG_PROBES {
        let v: [Point; 3] = std::array::from_fn(|_| Point::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
        if let Ok(t) = Triangle::new(v[0], v[1], v[2]) {
            let (x, y, z) = t.angles();
            if x.min(y).min(z) > 0.25 && x.max(y).max(z) < 2.2 {
                out.push(t);
            }
        }
    }
    out
}

/// Worst residual of a tag over the probe triangles, computed independently
/// of the catalog: the circumcircle equation, or collinearity with the
/// constructed centroid and circumcenter.
fn tag_residual(f: &CenterFunction, tag: Tag) -> f64 {
    let mut worst: f64 = 0.0;
    for t in tag_triangles() {
        let Ok(bp) = f.evaluate(&t) else { continue };
        let r = match tag {
            Tag::OnCircumcircle => circumcircle_condition(&bp, &t).abs(),
            Tag::EulerLine | Tag::ShinagawaConstant => {
                let Ok(x) = t.bary_to_cartesian(&bp) else { continue };
                let (g, o) = (t.centroid(), t.circumcenter());
                let d = o - g;
                (x - g).cross(d).abs() / (d.norm() * (1.0 + (x - g).norm()))
            }
        };
        worst = worst.max(r);
    }
    worst
}

impl Catalog {
    pub fn parse(text: &str) -> Result<Catalog, CatalogError> {
        let mut entries = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.split('#').next().unwrap_or("").trim_end();
            if body.trim().is_empty() {
                continue;
            }
            let cols: Vec<&str> = body.split('\t').collect();
            if !(3..=4).contains(&cols.len()) {
                return Err(CatalogError::Parse { line, msg: format!("expected 3 or 4 tab-separated fields, got {}", cols.len()) });
            }
            let index: u32 = cols[0].trim().parse().map_err(|_| CatalogError::Parse { line, msg: format!("bad index `{}`", cols[0]) })?;
            let kind = CoordKind::from_tag(cols[1].trim())
                .ok_or_else(|| CatalogError::Parse { line, msg: format!("unknown coordinate kind `{}`", cols[1]) })?;
            let expr = parse_expr(cols[2]).map_err(|source| CatalogError::Invalid { line, index, source })?;
            let function = CenterFunction::new(expr, kind).map_err(|source| CatalogError::Invalid { line, index, source })?;
            let mut tags = BTreeSet::new();
            if let Some(t) = cols.get(3) {
                for name in t.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                    let tag = Tag::parse(name).ok_or_else(|| CatalogError::Parse { line, msg: format!("unknown tag `{name}`") })?;
                    tags.insert(tag);
                }
            }
            for &tag in &tags {
                let residual = tag_residual(&function, tag);
                if !(residual <= TAG_EPS) {
                    return Err(CatalogError::TagViolation { line, index, tag: tag.name(), residual });
                }
            }
            if entries.insert(index, CatalogEntry { index, function, tags }).is_some() {
                return Err(CatalogError::Duplicate { line, index });
            }
        }
        Ok(Catalog { entries })
    }

    pub fn load(path: &Path) -> Result<Catalog, CatalogError> {
        Catalog::parse(&std::fs::read_to_string(path)?)
    }

    pub fn builtin() -> Catalog {
        Catalog::parse(DEFAULT_CATALOG).expect("shipped catalog is valid")
    }

    pub fn get(&self, n: u32) -> Option<&CatalogEntry> {
        self.entries.get(&n)
    }

    pub fn contains(&self, n: u32) -> bool {
        self.entries.contains_key(&n)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn indices(&self) -> impl Iterator<Item = u32> + '_ {
        self.entries.keys().copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.values()
    }

    pub fn with_tag(&self, tag: Tag) -> Vec<u32> {
        self.entries.values().filter(|e| e.tags.contains(&tag)).map(|e| e.index).collect()
    }

    pub fn center_point<T: Real>(&self, n: u32, tri: &Triangle<T>) -> Result<Point<T>, CatalogError> {
        let e = self.get(n).ok_or(CatalogError::Missing(n))?;
        e.function.point(tri).map_err(|source| CatalogError::Undefined { index: n, source })
    }
}
