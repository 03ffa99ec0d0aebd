//! Expected tables and the diff of a mining run against them.

use crate::{CenterSpec, Diagnostic, MineOutput, MinerError, Novelty};
use cqe_catalog::{Catalog, CIRCUMCIRCLE_SET, SHINAGAWA_SET};
use cqe_quadcenters::QuadCenterKind;
use cqe_relations::{parse_statement, CenterRef, Pairing, Relation, RelationKind, Role, Statement};
use cqe_shapes::Shape;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

const BUILTIN: &str = include_str!("../data/tables.txt");

/// Centers the published sweeps covered.
pub const SWEPT: std::ops::RangeInclusive<u32> = 1..=1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableMode {
    /// Every new relationship in the swept range is listed.
    Complete,
    /// A selection; extra findings are not differences.
    Partial,
}

#[derive(Debug, Clone)]
pub struct ExpectedRow {
    pub line: usize,
    /// The relationship cell as printed.
    pub source: String,
    pub statement: Statement,
    pub centers: BTreeSet<u32>,
    /// Centers printed in red.
    pub numeric_only: BTreeSet<u32>,
}

#[derive(Debug, Clone)]
pub struct ExpectedTable {
    pub shape: Shape,
    pub mode: TableMode,
    pub rows: Vec<ExpectedRow>,
}

fn fixture_err(line: usize, message: impl Into<String>) -> MinerError {
    MinerError::Fixture { line, message: message.into() }
}

/// Reads a centers cell: indices, `a--b` ranges, the S and C sets, and the
/// `\cyc{}` / `\no{}` color macros. Returns all centers and the red ones.
fn parse_centers(cell: &str, line: usize) -> Result<(BTreeSet<u32>, BTreeSet<u32>), MinerError> {
    let mut all = BTreeSet::new();
    let mut red = BTreeSet::new();
    let mut in_red = false;
    let mut rest = cell;
    while !rest.is_empty() {
        let (tok, tail) = match rest.find([',', '{', '}']) {
            Some(i) => (&rest[..i], &rest[i..]),
            None => (rest, ""),
        };
        let tok = tok.trim();
        let (sep, tail) = tail.split_at(tail.len().min(1));
        let mut members: Vec<u32> = Vec::new();
        match tok {
            "" | "$" | "\\cyc" | "$\\mathbb" => {}
            "\\no" => in_red = true,
            "S" => members.extend_from_slice(SHINAGAWA_SET),
            "C" => members.extend_from_slice(CIRCUMCIRCLE_SET),
            _ => {
                let (a, b) = tok.split_once("--").unwrap_or((tok, tok));
                let (a, b): (u32, u32) = match (a.trim().parse(), b.trim().parse()) {
                    (Ok(a), Ok(b)) if a <= b => (a, b),
                    _ => return Err(fixture_err(line, format!("cannot read center `{tok}`"))),
                };
                members.extend(a..=b);
            }
        }
        if in_red {
            red.extend(members.iter().copied());
        }
        all.extend(members);
        if sep == "}" && tok != "S" && tok != "C" {
            in_red = false;
        }
        rest = tail;
    }
    if all.is_empty() {
        return Err(fixture_err(line, "row lists no centers"));
    }
    Ok((all, red))
}

pub fn parse_tables(text: &str) -> Result<Vec<ExpectedTable>, MinerError> {
    let mut tables: Vec<ExpectedTable> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        if let Some(head) = t.strip_prefix('[').filter(|_| !t.contains('&')) {
            let (name, mode) = head.split_once(']').ok_or_else(|| fixture_err(line, "unclosed table header"))?;
            let shape: Shape = name.parse().map_err(|_| fixture_err(line, format!("unknown shape `{name}`")))?;
            let mode = match mode.trim() {
                "complete" => TableMode::Complete,
                "partial" => TableMode::Partial,
                m => return Err(fixture_err(line, format!("mode must be complete or partial, got `{m}`"))),
            };
            if tables.iter().any(|x| x.shape == shape) {
                return Err(fixture_err(line, format!("second table for {shape}")));
            }
            tables.push(ExpectedTable { shape, mode, rows: Vec::new() });
            continue;
        }
        let table = tables.last_mut().ok_or_else(|| fixture_err(line, "row before any table header"))?;
        let (rel, cen) = t.split_once('&').ok_or_else(|| fixture_err(line, "expected `relationship & centers`"))?;
        let statement = parse_statement(rel).map_err(|e| fixture_err(line, e.to_string()))?;
        let (centers, numeric_only) = parse_centers(cen, line)?;
        table.rows.push(ExpectedRow { line, source: rel.trim().to_string(), statement, centers, numeric_only });
    }
    Ok(tables)
}

pub fn builtin_tables() -> Vec<ExpectedTable> {
    parse_tables(BUILTIN).expect("embedded tables parse")
}

pub fn builtin_table(shape: Shape) -> Option<ExpectedTable> {
    builtin_tables().into_iter().find(|t| t.shape == shape)
}

/// Table entries that differ from a run for a known, documented reason rather
/// than a detection error: (shape, center, row as printed, reason).
pub const EXPLAINED: &[(Shape, u32, &str, &str)] = &[
    (
        Shape::Cyclic,
        20,
        "$\\mathrm{homot}[ABCD,EFGH]$",
        "EFGH is a translate of ABCD; a translation has no center and is reported as congruence",
    ),
    (
        Shape::Cyclic,
        2,
        "$\\mathrm{homot}[ABCD,EFGH]$",
        "the row names the whole set S; this member's homothety already holds on general quadrilaterals",
    ),
    (
        Shape::EqOrtho,
        68,
        "QA-P5=$\\mathrm{persp}[ABCD,GHEF]$",
        "QA-P5 has no construction here, so only the perspectivity is compared and it is listed for orthodiagonal quadrilaterals",
    ),
];

/// Bicentric-trapezoid rows that repeat entries of the bicentric and
/// isosceles-trapezoid tables, both ancestors.
const REPEATED: &[(Shape, &[u32], &str, Shape)] = &[
    (Shape::BicentricTrapezoid, &[35, 36, 55, 56], "$\\mathrm{persp}[ABCD,GHEF]$", Shape::Bicentric),
    (Shape::BicentricTrapezoid, &[49, 63, 186, 265, 304, 305], "$\\mathrm{persp}[ABCD,HGFE]$", Shape::IsoscelesTrapezoid),
];

fn explanation(shape: Shape, n: u32, row: &str) -> Option<String> {
    EXPLAINED
        .iter()
        .find(|e| e.0 == shape && e.1 == n && e.2 == row)
        .map(|e| e.3.to_string())
        .or_else(|| {
            REPEATED
                .iter()
                .find(|r| r.0 == shape && r.1.contains(&n) && r.2 == row)
                .map(|r| format!("the same entry is printed in the {} table", r.3))
        })
}

/// Named points a relation asserts to be one point.
fn point_names(r: &Relation) -> Vec<CenterRef> {
    use QuadCenterKind::*;
    let both = |k: QuadCenterKind| vec![CenterRef { role: Role::Reference, kind: k }, CenterRef { role: Role::Central, kind: k }];
    let canon = |c: &CenterRef| CenterRef {
        role: c.role,
        kind: match c.kind {
            Anticenter => Poncelet,
            Circumcenter => Steiner,
            k => k,
        },
    };
    let names = match &r.kind {
        RelationKind::CentersCoincide { on_ref, on_central } => vec![
            CenterRef { role: Role::Reference, kind: *on_ref },
            CenterRef { role: Role::Central, kind: *on_central },
        ],
        RelationKind::DpSame { pairing: Pairing::Diagonals } => both(DiagonalPoint),
        RelationKind::CircumcenterSame | RelationKind::CircumcircleConcentric { .. } => both(Circumcenter),
        RelationKind::IncenterSame => both(Incenter),
        RelationKind::Homothetic { ids, .. }
        | RelationKind::Perspective { ids, .. }
        | RelationKind::ConicCommon { ids, .. }
        | RelationKind::HyperbCommon { ids, .. } => ids.clone(),
        _ => Vec::new(),
    };
    names.iter().map(canon).collect()
}

/// A plain coincidence of two named centers, as opposed to a located point
/// such as a perspector that carries information of its own.
fn is_plain_coincidence(r: &Relation) -> bool {
    matches!(
        r.kind,
        RelationKind::CentersCoincide { .. }
            | RelationKind::DpSame { pairing: Pairing::Diagonals }
            | RelationKind::CircumcenterSame
            | RelationKind::IncenterSame
    )
}

/// Groups named centers that the relations place at one point.
fn components(rels: &[&Relation]) -> Vec<BTreeSet<CenterRef>> {
    let mut comps: Vec<BTreeSet<CenterRef>> = Vec::new();
    for r in rels {
        let names = point_names(r);
        if names.len() < 2 {
            continue;
        }
        let mut merged: BTreeSet<CenterRef> = names.into_iter().collect();
        comps.retain(|c| {
            if c.is_disjoint(&merged) {
                true
            } else {
                merged.extend(c.iter().copied());
                false
            }
        });
        comps.push(merged);
    }
    comps
}

impl ExpectedTable {
    pub fn listed(&self) -> BTreeSet<u32> {
        self.rows.iter().flat_map(|r| r.centers.iter().copied()).collect()
    }

    /// Centers to mine: the whole swept catalog range for complete tables,
    /// the listed centers for partial ones. Both restricted to the catalog.
    pub fn sweep(&self, cat: &Catalog) -> Vec<CenterSpec> {
        let set: BTreeSet<u32> = match self.mode {
            TableMode::Complete => cat.indices().filter(|n| SWEPT.contains(n)).collect(),
            TableMode::Partial => self.listed().into_iter().filter(|n| cat.contains(*n)).collect(),
        };
        set.into_iter().map(CenterSpec::Etc).collect()
    }

    /// Compares a run over [`ExpectedTable::sweep`] with this table.
    pub fn diff(&self, out: &MineOutput, cat: &Catalog) -> TableDiff {
        let mut found: BTreeMap<u32, Vec<(&Relation, Novelty)>> = BTreeMap::new();
        for f in out.findings.iter().filter(|f| f.shape == self.shape) {
            if let Some(n) = f.center.index() {
                found.entry(n).or_default().push((&f.relation, f.novelty));
            }
        }
        let skipped: BTreeMap<u32, &Diagnostic> = out
            .diagnostics
            .iter()
            .filter(|d| d.shape == self.shape)
            .filter_map(|d| d.center.and_then(|c| c.index()).map(|n| (n, d)))
            .collect();

        let mut d = TableDiff { shape: self.shape, mode: self.mode, ..Default::default() };
        d.uncovered = self.listed().into_iter().filter(|n| !cat.contains(*n)).collect();
        for row in &self.rows {
            for &n in row.centers.iter().filter(|n| cat.contains(**n)) {
                if let Some(diag) = skipped.get(&n) {
                    d.skipped.push((row.source.clone(), n, diag.message.clone()));
                    continue;
                }
                let rels = found.get(&n).map(Vec::as_slice).unwrap_or_default();
                let all: Vec<Relation> = rels.iter().map(|(r, _)| (*r).clone()).collect();
                let new: Vec<Relation> = rels.iter().filter(|(_, nv)| *nv == Novelty::New).map(|(r, _)| (*r).clone()).collect();
                // A chain row is new when it holds and at least one link is new.
                let holds = match self.mode {
                    TableMode::Complete => {
                        row.statement.holds(&all) && row.statement.atoms.iter().any(|a| new.iter().any(|r| a.matches(r)))
                    }
                    TableMode::Partial => row.statement.holds(&all),
                };
                if !holds {
                    if let Some(why) = explanation(self.shape, n, &row.source) {
                        d.explained.push((row.source.clone(), n, why));
                    } else if row.statement.holds(&all) {
                        let from = rels.iter().filter(|(r, _)| row.statement.covers(r)).find_map(|(_, nv)| match nv {
                            Novelty::Inherited(s) => Some(*s),
                            Novelty::New => None,
                        });
                        d.inherited.push((row.source.clone(), n, from));
                    } else {
                        d.missing.push((row.source.clone(), n));
                    }
                }
            }
        }
        if self.mode == TableMode::Complete {
            for (&n, rels) in &found {
                let covered =
                    |r: &Relation| self.rows.iter().any(|row| row.centers.contains(&n) && row.statement.covers(r));
                let anchors: BTreeSet<CenterRef> = rels
                    .iter()
                    .filter(|(r, nv)| *nv != Novelty::New || covered(r))
                    .flat_map(|(r, _)| point_names(r))
                    .collect();
                let comps = components(&rels.iter().map(|(r, _)| *r).collect::<Vec<_>>());
                for (r, nv) in rels {
                    if *nv != Novelty::New || covered(r) {
                        continue;
                    }
                    // Another name for a point that a listed or inherited
                    // relation already places there.
                    let alias = is_plain_coincidence(r)
                        && point_names(r).iter().any(|p| comps.iter().any(|c| c.contains(p) && !c.is_disjoint(&anchors)));
                    if alias {
                        d.aliases.push((r.notation(), n));
                    } else {
                        d.unexpected.push((r.notation(), n));
                    }
                }
            }
        }
        d
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableDiff {
    pub shape: Shape,
    pub mode: TableMode,
    /// (row, center) pairs with no matching relation.
    pub missing: Vec<(String, u32)>,
    /// Rows that hold but were filtered as inherited, with the ancestor.
    pub inherited: Vec<(String, u32, Option<Shape>)>,
    /// New findings no row accounts for; complete tables only.
    pub unexpected: Vec<(String, u32)>,
    /// New coincidences that rename a point a listed or inherited relation
    /// already locates.
    pub aliases: Vec<(String, u32)>,
    /// Entries that differ for a documented reason, see [`EXPLAINED`].
    pub explained: Vec<(String, u32, String)>,
    /// Listed centers whose central quadrilateral could not be used.
    pub skipped: Vec<(String, u32, String)>,
    /// Listed centers absent from the catalog.
    pub uncovered: Vec<u32>,
}

impl Default for TableDiff {
    fn default() -> Self {
        TableDiff {
            shape: Shape::General,
            mode: TableMode::Complete,
            missing: Vec::new(),
            inherited: Vec::new(),
            unexpected: Vec::new(),
            aliases: Vec::new(),
            explained: Vec::new(),
            skipped: Vec::new(),
            uncovered: Vec::new(),
        }
    }
}

impl TableDiff {
    /// No missing, inherited or unexpected entries. Aliases, explained,
    /// skipped and uncovered entries are reported but do not count.
    pub fn is_clean(&self) -> bool {
        self.missing.is_empty() && self.inherited.is_empty() && self.unexpected.is_empty()
    }
}

impl fmt::Display for TableDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.is_clean() { "match" } else { "DIFF" };
        writeln!(f, "table {}: {status}", self.shape)?;
        for (row, n) in &self.missing {
            writeln!(f, "  missing     X{n}: {row}")?;
        }
        for (row, n, from) in &self.inherited {
            let from = from.map_or_else(|| "an ancestor".to_string(), |s| s.to_string());
            writeln!(f, "  inherited   X{n}: {row} (holds on {from})")?;
        }
        for (row, n) in &self.unexpected {
            writeln!(f, "  unexpected  X{n}: {row}")?;
        }
        for (row, n) in &self.aliases {
            writeln!(f, "  alias       X{n}: {row}")?;
        }
        for (row, n, why) in &self.explained {
            writeln!(f, "  explained   X{n}: {row} ({why})")?;
        }
        for (row, n, why) in &self.skipped {
            writeln!(f, "  skipped     X{n}: {row} ({why})")?;
        }
        if !self.uncovered.is_empty() {
            let list: Vec<String> = self.uncovered.iter().map(u32::to_string).collect();
            writeln!(f, "  uncovered   not in catalog: {}", list.join(", "))?;
        }
        Ok(())
    }
}
