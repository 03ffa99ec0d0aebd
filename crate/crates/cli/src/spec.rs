//! Center selections and parameter grids as typed on the command line.

use crate::Usage;
use cqe_catalog::{Catalog, Family};
use cqe_miner::CenterSpec;

/// Evenly spaced values of the family parameter, ends included.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamGrid(pub Vec<f64>);

impl ParamGrid {
    /// `k=a..b:n`.
    pub fn parse(s: &str) -> Result<ParamGrid, Usage> {
        let bad = || Usage(format!("cannot read parameter grid `{s}`; expected k=a..b:n"));
        let body = s.trim().strip_prefix("k=").ok_or_else(bad)?;
        let (range, n) = body.rsplit_once(':').ok_or_else(bad)?;
        let (a, b) = range.split_once("..").ok_or_else(bad)?;
        let (a, b): (f64, f64) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        if n == 0 || !a.is_finite() || !b.is_finite() || (n == 1 && a != b) {
            return Err(bad());
        }
        // Rounded so that -2..2:9 yields -1.5 rather than -1.4999999999999998.
        let at = |i: usize| {
            let x = if n == 1 { a } else { a + (b - a) * i as f64 / (n - 1) as f64 };
            (x * 1e12).round() / 1e12
        };
        Ok(ParamGrid((0..n).map(at).collect()))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Selection {
    pub centers: Vec<CenterSpec>,
    /// Range members absent from the catalog.
    pub uncovered: Vec<u32>,
}

/// Comma-separated items: `5`, `X5`, `1..100`, `all`, `brocard1`,
/// `power(k=0.5)` or `family:power` expanded over `grid`. Ranges skip indices
/// the catalog lacks; an explicit index it lacks is an error.
pub fn parse_selection(s: &str, grid: Option<&ParamGrid>, cat: &Catalog) -> Result<Selection, Usage> {
    let mut sel = Selection { centers: Vec::new(), uncovered: Vec::new() };
    let mut used_grid = false;
    for item in s.split(',').map(str::trim) {
        if item.is_empty() {
            return Err(Usage(format!("empty item in center list `{s}`")));
        }
        if item == "all" {
            sel.centers.extend(cat.indices().map(CenterSpec::Etc));
        } else if let Some(name) = item.strip_prefix("family:") {
            let family: Family = name.parse().map_err(Usage)?;
            let grid = grid.ok_or_else(|| Usage(format!("`{item}` needs --param-grid k=a..b:n")))?;
            used_grid = true;
            sel.centers.extend(grid.0.iter().map(|&k| CenterSpec::Family { family, k }));
        } else if let Some((a, b)) = item.split_once("..") {
            let bad = || Usage(format!("cannot read range `{item}`"));
            let a: u32 = a.trim().parse().map_err(|_| bad())?;
            let b: u32 = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
            if a == 0 || a > b {
                return Err(bad());
            }
            for n in a..=b {
                if cat.contains(n) {
                    sel.centers.push(CenterSpec::Etc(n));
                } else {
                    sel.uncovered.push(n);
                }
            }
        } else {
            let spec: CenterSpec = item.parse().map_err(|e: cqe_miner::MinerError| Usage(e.to_string()))?;
            if let CenterSpec::Etc(n) = spec {
                if !cat.contains(n) {
                    return Err(Usage(format!("X{n} is not in the catalog")));
                }
            }
            sel.centers.push(spec);
        }
    }
    if grid.is_some() && !used_grid {
        return Err(Usage("--param-grid given without a family:<name> center".into()));
    }
    sel.centers.sort();
    sel.centers.dedup();
    sel.uncovered.sort_unstable();
    sel.uncovered.dedup();
    sel.uncovered.retain(|n| !sel.centers.contains(&CenterSpec::Etc(*n)));
    Ok(sel)
}
