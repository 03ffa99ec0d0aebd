use crate::{CenterSpec, Finding, MineOutput, MinerError, Novelty};
use cqe_relations::Relation;
use cqe_shapes::Shape;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write;
use std::str::FromStr;

pub const SENTINEL: &str = "No new relationships were found.";
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Markdown,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = MinerError;
    fn from_str(s: &str) -> Result<Self, MinerError> {
        match s.to_ascii_lowercase().as_str() {
            "md" | "markdown" => Ok(Format::Markdown),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(MinerError::Config(format!("unknown format `{s}`; expected markdown, csv or json"))),
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ReportOptions {
    /// Tables also list inherited findings.
    pub include_inherited: bool,
    /// Suffix `*` to centers whose finding was not confirmed in high precision.
    pub mark_numeric_only: bool,
}

/// Table order of relation kinds.
const KIND_ORDER: [&str; 17] = [
    "congruent",
    "similar",
    "orthogonal",
    "area_equal",
    "area_ratio",
    "perimeter_equal",
    "circumcircle_same",
    "circumcircle_congruent",
    "circumcircle_concentric",
    "circumcenter_same",
    "incenter_same",
    "homothetic",
    "perspective",
    "conic_common",
    "hyperb_common",
    "dp_same",
    "centers_coincide",
];

fn kind_rank(r: &Relation) -> usize {
    KIND_ORDER.iter().position(|k| *k == r.kind.name()).unwrap_or(KIND_ORDER.len())
}

/// Center list with consecutive index runs of three or more collapsed,
/// e.g. `13–18, 61, 62`.
pub fn format_centers(centers: &[(CenterSpec, bool)]) -> String {
    let mut sorted = centers.to_vec();
    sorted.sort_by_key(|a| a.0);
    sorted.dedup_by(|a, b| a.0 == b.0);
    let mark = |c: &(CenterSpec, bool)| format!("{}{}", c.0, if c.1 { "*" } else { "" });
    let mut parts = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        // A run must be unmarked throughout so every flag stays visible.
        while let (Some(a), Some(b)) = (sorted[j].0.index(), sorted.get(j + 1).and_then(|c| c.0.index())) {
            if b != a + 1 || sorted[j].1 || sorted[j + 1].1 {
                break;
            }
            j += 1;
        }
        if j - i >= 2 {
            parts.push(format!("{}–{}", sorted[i].0, sorted[j].0));
        } else {
            parts.extend(sorted[i..=j].iter().map(mark));
        }
        i = j + 1;
    }
    parts.join(", ")
}

fn shown<'a>(out: &'a MineOutput, opts: &ReportOptions) -> impl Iterator<Item = &'a Finding> {
    let all = opts.include_inherited;
    out.findings.iter().filter(move |f| all || f.novelty == Novelty::New)
}

/// Rows of one shape's table: notation and its centers, in table order.
pub fn table_rows(out: &MineOutput, shape: Shape, opts: &ReportOptions) -> Vec<(String, String)> {
    let mut rows: BTreeMap<(usize, String), Vec<(CenterSpec, bool)>> = BTreeMap::new();
    for f in shown(out, opts).filter(|f| f.shape == shape) {
        rows.entry((kind_rank(&f.relation), f.notation.clone()))
            .or_default()
            .push((f.center, opts.mark_numeric_only && f.numeric_only()));
    }
    rows.into_iter().map(|((_, n), cs)| (n, format_centers(&cs))).collect()
}

fn novelty_text(n: Novelty) -> String {
    match n {
        Novelty::New => "new".into(),
        Novelty::Inherited(s) => format!("inherited:{s}"),
    }
}

#[derive(Serialize)]
struct JsonFinding<'a> {
    shape: &'a str,
    center: String,
    notation: &'a str,
    relation: &'a Relation,
    support: [usize; 2],
    novelty: String,
    numeric_only: bool,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    schema_version: u32,
    shapes: Vec<&'a str>,
    findings: Vec<JsonFinding<'a>>,
}

/// Renders `out` for `shapes`, in the order given. Output depends only on the
/// inputs, so equal runs give byte-identical documents.
pub fn render(out: &MineOutput, shapes: &[Shape], format: Format, opts: &ReportOptions) -> Result<String, MinerError> {
    let findings: Vec<&Finding> = {
        let mut v: Vec<&Finding> = shown(out, opts).filter(|f| shapes.contains(&f.shape)).collect();
        v.sort_by(|a, b| {
            (a.shape, a.center, kind_rank(&a.relation), &a.notation).cmp(&(b.shape, b.center, kind_rank(&b.relation), &b.notation))
        });
        v
    };
    match format {
        Format::Markdown => {
            let mut s = String::new();
            for (i, &shape) in shapes.iter().enumerate() {
                if i > 0 {
                    s.push('\n');
                }
                writeln!(s, "## {shape}\n\n| Relationship | Centers |\n|---|---|").expect("string write");
                let rows = table_rows(out, shape, opts);
                if rows.is_empty() {
                    writeln!(s, "| {SENTINEL} | |").expect("string write");
                }
                for (n, cs) in rows {
                    writeln!(s, "| {} | {cs} |", n.replace('|', "\\|")).expect("string write");
                }
            }
            Ok(s)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| MinerError::Config(e.to_string());
            w.write_record(["shape", "center", "relation", "kind", "alignment", "support", "novelty", "numeric_only", "residual"])
                .map_err(io)?;
            for f in findings {
                w.write_record([
                    f.shape.name().to_string(),
                    f.center.to_string(),
                    f.notation.clone(),
                    f.relation.kind.name().to_string(),
                    f.relation.alignment.name(),
                    format!("{}/{}", f.support.0, f.support.1),
                    novelty_text(f.novelty),
                    f.numeric_only().to_string(),
                    format!("{:e}", f.relation.residual),
                ])
                .map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| MinerError::Config(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| MinerError::Config(e.to_string()))
        }
        Format::Json => {
            let doc = JsonReport {
                schema_version: SCHEMA_VERSION,
                shapes: shapes.iter().map(|s| s.name()).collect(),
                findings: findings
                    .into_iter()
                    .map(|f| JsonFinding {
                        shape: f.shape.name(),
                        center: f.center.to_string(),
                        notation: &f.notation,
                        relation: &f.relation,
                        support: [f.support.0, f.support.1],
                        novelty: novelty_text(f.novelty),
                        numeric_only: f.numeric_only(),
                    })
                    .collect(),
            };
            let mut s = serde_json::to_string_pretty(&doc).map_err(|e| MinerError::Config(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
    }
}
