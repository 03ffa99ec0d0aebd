use crate::center::{Center, CenterSpec};
use crate::mine::{sample_seeds, shape_caps, stream_seed, HP_SAMPLES};
use crate::MinerError;
use cqe_catalog::Catalog;
use cqe_geom::Scalar;
use cqe_numerics::{Hp, Tolerance};
use cqe_relations::{detect_raw, parse_statement, DetectOptions, Relation, RelationKind, Statement};
use cqe_shapes::{generate, Shape};
use std::fmt;

/// One claim checked on seeded samples of one shape.
#[derive(Debug, Clone)]
pub struct Claim {
    pub shape: Shape,
    pub center: CenterSpec,
    pub statement: String,
    pub samples: usize,
    pub master_seed: u64,
    pub tol: Tolerance,
    pub high_precision: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    /// Worst residual over the atoms and the parameters of the matching relations.
    Holds { residual: f64, params: Vec<String> },
    Fails,
    Unusable(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SampleCheck {
    pub seed: u64,
    pub extended: bool,
    pub outcome: Outcome,
}

#[derive(Debug, Clone)]
pub struct Verdict {
    pub claim: Claim,
    pub checks: Vec<SampleCheck>,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| matches!(c.outcome, Outcome::Holds { .. }))
    }

    fn residuals(&self, extended: bool) -> Vec<f64> {
        self.checks
            .iter()
            .filter(|c| c.extended == extended)
            .filter_map(|c| match c.outcome {
                Outcome::Holds { residual, .. } => Some(residual),
                _ => None,
            })
            .collect()
    }

    /// (max, mean) residual over passing double-precision samples.
    pub fn residual_stats(&self) -> Option<(f64, f64)> {
        let r = self.residuals(false);
        (!r.is_empty()).then(|| (r.iter().copied().fold(0.0, f64::max), r.iter().sum::<f64>() / r.len() as f64))
    }

    /// Distinct parameter readings, e.g. `ratio=2`, across passing samples.
    pub fn params(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .checks
            .iter()
            .flat_map(|c| match &c.outcome {
                Outcome::Holds { params, .. } => params.clone(),
                _ => Vec::new(),
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

fn params(r: &Relation) -> Option<String> {
    match &r.kind {
        RelationKind::AreaRatio { k } => Some(format!("k={k}")),
        RelationKind::CircumcircleConcentric { ratio } => Some(format!("ratio={ratio}")),
        RelationKind::Similar { ratio } => Some(format!("ratio={ratio:.6}")),
        RelationKind::Homothetic { ratio, .. } => Some(format!("ratio={ratio:.6}")),
        _ => None,
    }
}

fn check<T: Scalar>(st: &Statement, shape: Shape, center: &Center, seed: u64, tol: Tolerance) -> Outcome {
    let q = match generate::<T>(shape, seed) {
        Ok(q) => q,
        Err(e) => return Outcome::Unusable(e.to_string()),
    };
    let e = match center.central(&q) {
        Ok(e) => e,
        Err(e) => return Outcome::Unusable(e.to_string()),
    };
    let opts = DetectOptions { tol, ref_caps: shape_caps(shape), orthogonality: true, all_alignments: true };
    let rels = detect_raw(&q, &e, &opts);
    let mut residual: f64 = 0.0;
    let mut found = Vec::new();
    for atom in &st.atoms {
        let best = rels.iter().filter(|r| atom.matches(r)).min_by(|a, b| a.residual.total_cmp(&b.residual));
        let Some(r) = best else { return Outcome::Fails };
        residual = residual.max(r.residual);
        found.extend(params(r));
    }
    Outcome::Holds { residual, params: found }
}

/// Runs `claim` on the mining seed stream of its cell, so a verified claim and
/// a mined finding see the same quadrilaterals.
pub fn verify(catalog: &Catalog, claim: Claim) -> Result<Verdict, MinerError> {
    if claim.samples < 1 {
        return Err(MinerError::Config("samples must be positive".into()));
    }
    claim.tol.validate().map_err(|e| MinerError::Config(e.to_string()))?;
    let st = parse_statement(&claim.statement).map_err(|e| MinerError::Config(format!("relation: {e}")))?;
    let center = Center::resolve(claim.center, catalog)?;
    let seeds = sample_seeds(stream_seed(claim.master_seed, claim.shape, &claim.center), claim.samples);
    let mut checks: Vec<SampleCheck> = seeds
        .iter()
        .map(|&seed| SampleCheck { seed, extended: false, outcome: check::<f64>(&st, claim.shape, &center, seed, claim.tol) })
        .collect();
    if claim.high_precision {
        for &seed in seeds.iter().take(HP_SAMPLES) {
            let outcome = check::<Hp>(&st, claim.shape, &center, seed, Tolerance::high_precision());
            checks.push(SampleCheck { seed, extended: true, outcome });
        }
    }
    Ok(Verdict { claim, checks })
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.claim;
        let ok = self.checks.iter().filter(|k| matches!(k.outcome, Outcome::Holds { .. })).count();
        writeln!(
            f,
            "{} {} on {} {}: {ok}/{} samples",
            if self.passed() { "PASS" } else { "FAIL" },
            c.statement,
            c.shape,
            c.center.label(),
            self.checks.len()
        )?;
        if let Some((max, mean)) = self.residual_stats() {
            writeln!(f, "  residual max {max:.3e} mean {mean:.3e}")?;
        }
        let hp = self.residuals(true);
        if !hp.is_empty() {
            writeln!(f, "  extended precision residual max {:.3e}", hp.iter().copied().fold(0.0, f64::max))?;
        }
        let p = self.params();
        if !p.is_empty() {
            writeln!(f, "  {}", p.join(", "))?;
        }
        for k in &self.checks {
            let tag = if k.extended { " (extended)" } else { "" };
            match &k.outcome {
                Outcome::Fails => writeln!(f, "  seed {:#018x}{tag}: no matching relation", k.seed)?,
                Outcome::Unusable(m) => writeln!(f, "  seed {:#018x}{tag}: unusable: {m}", k.seed)?,
                Outcome::Holds { .. } => {}
            }
        }
        Ok(())
    }
}
