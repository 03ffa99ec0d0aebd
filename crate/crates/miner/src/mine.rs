use crate::center::{Center, CenterSpec};
use crate::MinerError;
use cqe_catalog::Catalog;
use cqe_geom::Scalar;
use cqe_numerics::{Hp, Tolerance};
use cqe_quadcenters::Caps;
use cqe_relations::{apply_exclusions, detect_raw, parse_statement, CenterRef, DetectOptions, Relation, RelationKind, Statement};
use cqe_shapes::{generate, Shape};
use rand::RngCore;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sha2::{Digest, Sha256};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

pub const DEFAULT_SAMPLES: usize = 10;
pub const CONFIRM_SAMPLES: usize = 6;
/// Samples re-run in extended precision during confirmation.
pub const HP_SAMPLES: usize = 2;

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub shapes: Vec<Shape>,
    pub centers: Vec<CenterSpec>,
    pub samples: usize,
    pub master_seed: u64,
    pub tol: Tolerance,
    pub ancestor_filter: bool,
    pub orthogonality: bool,
    /// Worker cap; `None` uses every core.
    pub jobs: Option<usize>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            shapes: Vec::new(),
            centers: Vec::new(),
            samples: DEFAULT_SAMPLES,
            master_seed: 0,
            tol: Tolerance::default(),
            ancestor_filter: true,
            orthogonality: false,
            jobs: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), MinerError> {
        if self.samples < 3 {
            return Err(MinerError::Config(format!("samples must be at least 3, got {}", self.samples)));
        }
        if self.jobs == Some(0) {
            return Err(MinerError::Config("jobs must be positive".into()));
        }
        self.tol.validate().map_err(|e| MinerError::Config(e.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Novelty {
    New,
    /// Also holds on every sample of this ancestor.
    Inherited(Shape),
}

/// How far a finding has been checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Confirmation {
    /// The mining samples only.
    Sampled,
    /// Fresh seeds in double precision; high precision not run or failed.
    FreshSeeds,
    /// Fresh seeds and extended precision at the tight tolerance.
    HighPrecision,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Finding {
    pub shape: Shape,
    pub center: CenterSpec,
    /// As detected on the first sample, with identified centers reduced to
    /// those found on every sample.
    pub relation: Relation,
    pub notation: String,
    /// (confirmed, run).
    pub support: (usize, usize),
    pub novelty: Novelty,
    pub confirmation: Confirmation,
}

impl Finding {
    pub fn numeric_only(&self) -> bool {
        self.confirmation != Confirmation::HighPrecision
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Diagnostic {
    pub shape: Shape,
    pub center: Option<CenterSpec>,
    pub message: String,
}

#[derive(Debug, Clone, Default)]
pub struct MineOutput {
    pub findings: Vec<Finding>,
    pub diagnostics: Vec<Diagnostic>,
}

impl MineOutput {
    pub fn novel(&self) -> impl Iterator<Item = &Finding> {
        self.findings.iter().filter(|f| f.novelty == Novelty::New)
    }
}

#[derive(Debug, Clone)]
enum SampleError {
    Generation(String),
    Central(String),
}

type Sample = Result<Vec<Relation>, SampleError>;

/// Seed stream for one (shape, center) cell, independent of scheduling.
pub fn stream_seed(master: u64, shape: Shape, center: &CenterSpec) -> u64 {
    let digest = Sha256::digest(format!("{master}/{shape}/{center}").as_bytes());
    u64::from_le_bytes(digest[..8].try_into().expect("8 bytes"))
}

pub fn sample_seeds(stream: u64, n: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(stream);
    (0..n).map(|_| rng.next_u64()).collect()
}

pub fn shape_caps(shape: Shape) -> Caps {
    Caps { cyclic: shape.is_a(Shape::Cyclic), tangential: shape.is_a(Shape::Tangential) }
}

fn ids_mut(kind: &mut RelationKind) -> Option<&mut Vec<CenterRef>> {
    match kind {
        RelationKind::Homothetic { ids, .. }
        | RelationKind::Perspective { ids, .. }
        | RelationKind::ConicCommon { ids, .. }
        | RelationKind::HyperbCommon { ids, .. } => Some(ids),
        _ => None,
    }
}

/// Groups a relation across samples: kind, alignment and exact parameters,
/// ignoring which centers happen to coincide with a located point.
fn base_key(r: &Relation) -> String {
    let mut bare = r.clone();
    if let Some(ids) = ids_mut(&mut bare.kind) {
        ids.clear();
    }
    let extra = match &r.kind {
        RelationKind::CircumcircleConcentric { ratio } => ratio.to_string(),
        _ => String::new(),
    };
    format!("{}|{}|{}", r.kind.name(), bare.notation(), extra)
}

/// Keeps the first alignment per similarity, homothety and orthogonality
/// group, as a first-match detector would report.
fn first_matches(rels: Vec<Relation>) -> Vec<Relation> {
    let group = |r: &Relation| match r.kind.name() {
        "congruent" | "similar" => Some(0),
        "homothetic" => Some(1),
        "orthogonal" => Some(2),
        _ => None,
    };
    let mut seen = BTreeSet::new();
    rels.into_iter().filter(|r| group(r).is_none_or(|g| seen.insert(g))).collect()
}

/// Relations present in every sample with identical parameters.
fn stable(samples: &[Vec<Relation>]) -> Vec<Relation> {
    let Some((first, rest)) = samples.split_first() else { return Vec::new() };
    let mut out = Vec::new();
    'outer: for r in first {
        let key = base_key(r);
        let mut merged = r.clone();
        for s in rest {
            let Some(m) = s.iter().find(|x| base_key(x) == key) else { continue 'outer };
            merged.residual = merged.residual.max(m.residual);
            let other: Vec<CenterRef> = match &m.kind {
                RelationKind::Homothetic { ids, .. }
                | RelationKind::Perspective { ids, .. }
                | RelationKind::ConicCommon { ids, .. }
                | RelationKind::HyperbCommon { ids, .. } => ids.clone(),
                _ => Vec::new(),
            };
            if let Some(ids) = ids_mut(&mut merged.kind) {
                ids.retain(|c| other.contains(c));
            }
        }
        out.push(merged);
    }
    out
}

/// Shape and its ancestors nearest first.
fn ancestors_nearest_first(shape: Shape) -> Vec<Shape> {
    let mut out = Vec::new();
    let mut queue: VecDeque<Shape> = shape.parents().iter().copied().collect();
    while let Some(s) = queue.pop_front() {
        if !out.contains(&s) {
            out.push(s);
            queue.extend(s.parents().iter().copied());
        }
    }
    out
}

pub struct Miner<'a> {
    cfg: RunConfig,
    centers: Vec<Center>,
    _catalog: &'a Catalog,
}

impl<'a> Miner<'a> {
    pub fn new(catalog: &'a Catalog, cfg: RunConfig) -> Result<Self, MinerError> {
        cfg.validate()?;
        let mut specs = cfg.centers.clone();
        specs.sort();
        specs.dedup();
        let centers = specs.into_iter().map(|s| Center::resolve(s, catalog)).collect::<Result<_, _>>()?;
        Ok(Miner { cfg, centers, _catalog: catalog })
    }

    pub fn config(&self) -> &RunConfig {
        &self.cfg
    }

    fn options(&self, shape: Shape, tol: Tolerance) -> DetectOptions {
        DetectOptions { tol, ref_caps: shape_caps(shape), orthogonality: self.cfg.orthogonality, all_alignments: true }
    }

    /// Raw relations over every matching alignment, before exclusions.
    fn sample<T: Scalar>(&self, shape: Shape, center: &Center, seed: u64, tol: Tolerance) -> Sample {
        let q = generate::<T>(shape, seed).map_err(|e| SampleError::Generation(e.to_string()))?;
        let e = center.central(&q).map_err(|e| SampleError::Central(e.to_string()))?;
        Ok(detect_raw(&q, &e, &self.options(shape, tol)))
    }

    fn observe(&self, shape: Shape, center: &Center) -> Vec<Sample> {
        let seeds = sample_seeds(stream_seed(self.cfg.master_seed, shape, &center.spec), self.cfg.samples);
        seeds.iter().map(|s| self.sample::<f64>(shape, center, *s, self.cfg.tol)).collect()
    }

    fn pool(&self) -> Result<rayon::ThreadPool, MinerError> {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(j) = self.cfg.jobs {
            b = b.num_threads(j);
        }
        b.build().map_err(|e| MinerError::Config(e.to_string()))
    }

    pub fn mine(&self) -> Result<MineOutput, MinerError> {
        let pool = self.pool()?;
        let mut cells: BTreeSet<(Shape, usize)> = BTreeSet::new();
        for &s in &self.cfg.shapes {
            for c in 0..self.centers.len() {
                cells.insert((s, c));
                if self.cfg.ancestor_filter {
                    cells.extend(s.ancestors().into_iter().map(|a| (a, c)));
                }
            }
        }
        let cells: Vec<(Shape, usize)> = cells.into_iter().collect();
        let observed: BTreeMap<(Shape, usize), Vec<Sample>> = pool.install(|| {
            cells.par_iter().map(|&(s, c)| ((s, c), self.observe(s, &self.centers[c]))).collect()
        });

        let mut out = MineOutput::default();
        let mut shapes = self.cfg.shapes.clone();
        shapes.sort();
        shapes.dedup();
        for shape in shapes {
            for (ci, center) in self.centers.iter().enumerate() {
                let samples = &observed[&(shape, ci)];
                let diag = |message: String| Diagnostic { shape, center: Some(center.spec), message };
                if let Some(Err(SampleError::Generation(m))) = samples.iter().find(|s| matches!(s, Err(SampleError::Generation(_)))) {
                    out.diagnostics.push(diag(format!("shape skipped: {m}")));
                    continue;
                }
                let bad = samples.iter().filter(|s| s.is_err()).count();
                if bad > 0 {
                    let Some(Err(SampleError::Central(m))) = samples.iter().find(|s| s.is_err()) else { unreachable!() };
                    out.diagnostics.push(diag(format!("{bad} of {} samples unusable: {m}", samples.len())));
                    continue;
                }
                let ok: Vec<Vec<Relation>> =
                    samples.iter().map(|s| first_matches(apply_exclusions(s.as_ref().expect("checked").clone()))).collect();
                for relation in stable(&ok) {
                    let notation = relation.notation();
                    let novelty = if self.cfg.ancestor_filter {
                        self.inherited_from(shape, ci, &notation, &observed).map_or(Novelty::New, Novelty::Inherited)
                    } else {
                        Novelty::New
                    };
                    out.findings.push(Finding {
                        shape,
                        center: center.spec,
                        relation,
                        notation,
                        support: (samples.len(), samples.len()),
                        novelty,
                        confirmation: Confirmation::Sampled,
                    });
                }
            }
        }
        out.diagnostics.sort();
        Ok(out)
    }

    fn inherited_from(
        &self,
        shape: Shape,
        ci: usize,
        notation: &str,
        observed: &BTreeMap<(Shape, usize), Vec<Sample>>,
    ) -> Option<Shape> {
        let st = parse_statement(notation).ok()?;
        ancestors_nearest_first(shape).into_iter().find(|a| {
            let samples = &observed[&(*a, ci)];
            samples.iter().all(|s| matches!(s, Ok(rels) if st.holds(rels)))
        })
    }

    fn holds_on<T: Scalar>(&self, f: &Finding, st: &Statement, center: &Center, seeds: &[u64], tol: Tolerance) -> bool {
        seeds.iter().all(|s| matches!(self.sample::<T>(f.shape, center, *s, tol), Ok(rels) if st.holds(&rels)))
    }

    /// Re-tests a finding on `extra` fresh samples and, when asked, on the
    /// first mining samples in extended precision. `None` when a fresh sample
    /// disagrees.
    pub fn confirm(&self, f: &Finding, extra: usize, high_precision: bool) -> Option<Finding> {
        let center = self.centers.iter().find(|c| c.spec == f.center)?;
        let st = parse_statement(&f.notation).ok()?;
        let m = self.cfg.samples;
        let seeds = sample_seeds(stream_seed(self.cfg.master_seed, f.shape, &f.center), m + extra);
        if !self.holds_on::<f64>(f, &st, center, &seeds[m..], self.cfg.tol) {
            return None;
        }
        let hp = high_precision
            && self.holds_on::<Hp>(f, &st, center, &seeds[..HP_SAMPLES.min(m)], Tolerance::high_precision());
        let mut out = f.clone();
        out.support = (m + extra, m + extra);
        out.confirmation = if hp { Confirmation::HighPrecision } else { Confirmation::FreshSeeds };
        Some(out)
    }

    /// Confirms every novel finding; inherited ones pass through unchanged.
    pub fn confirm_all(&self, out: MineOutput, extra: usize, high_precision: bool) -> Result<MineOutput, MinerError> {
        let pool = self.pool()?;
        let findings = pool.install(|| {
            out.findings
                .par_iter()
                .filter_map(|f| match f.novelty {
                    Novelty::New => self.confirm(f, extra, high_precision),
                    Novelty::Inherited(_) => Some(f.clone()),
                })
                .collect()
        });
        Ok(MineOutput { findings, diagnostics: out.diagnostics })
    }
}

/// Mines and, when `confirm` is set, confirms with the default extra seeds.
pub fn mine(catalog: &Catalog, cfg: RunConfig, confirm: Option<bool>) -> Result<MineOutput, MinerError> {
    let miner = Miner::new(catalog, cfg)?;
    let out = miner.mine()?;
    match confirm {
        Some(hp) => miner.confirm_all(out, CONFIRM_SAMPLES, hp),
        None => Ok(out),
    }
}
