//! The `cqe` command line: explore, verify, reproduce, centers, shapes.
//!
//! Exit codes: 0 ok, 1 verification or diff failure, 2 usage.

mod spec;

pub use spec::{parse_selection, ParamGrid, Selection};

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use cqe_catalog::{Catalog, Tag};
use cqe_miner::fixtures::{builtin_table, builtin_tables};
use cqe_miner::report::{render, Format, ReportOptions};
use cqe_miner::{mine, verify, CenterSpec, Claim, Miner, MineOutput, Novelty, RunConfig, CONFIRM_SAMPLES, DEFAULT_SAMPLES};
use cqe_numerics::Tolerance;
use cqe_shapes::{lattice_dot, Shape};
use serde::Deserialize;
use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

/// Bad input; reported with exit code 2.
#[derive(Debug)]
pub struct Usage(pub String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

/// Explores relationships between quadrilaterals and their central quadrilaterals.
#[derive(Debug, Parser)]
#[command(name = "cqe", version)]
pub struct Cli {
    /// Center catalog (tab-separated); the built-in catalog when absent.
    #[arg(long, global = true, env = "CQE_CATALOG", value_name = "PATH")]
    pub catalog: Option<PathBuf>,
    /// Defaults as `key = value` lines: samples, seed, tol_rel, jobs, format, catalog.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Mine shapes over a set of centers and write one table per shape.
    Explore(ExploreArgs),
    /// Check one relationship for one center on seeded samples.
    Verify(VerifyArgs),
    /// Re-run the sweep behind a published table and diff against it.
    Reproduce(ReproduceArgs),
    /// List catalog centers.
    Centers(CentersArgs),
    /// List quadrilateral shapes and their parents.
    Shapes(ShapesArgs),
}

fn parse_shape(s: &str) -> Result<Shape, String> {
    s.parse().map_err(|e: cqe_shapes::ShapeError| e.to_string())
}

#[derive(Debug, Args)]
pub struct ExploreArgs {
    /// Shapes to mine, comma-separated.
    #[arg(long, required = true, value_delimiter = ',', value_parser = parse_shape)]
    pub shape: Vec<Shape>,
    /// `1..1000`, `2,5,20`, `all`, `brocard1`, `power(k=0.5)` or `family:<name>`.
    #[arg(long)]
    pub centers: String,
    /// Samples per (shape, center); at least 3.
    #[arg(long)]
    pub samples: Option<usize>,
    /// Master seed; every (shape, center) draws its own stream from it.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Report file; stdout when absent.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// markdown, csv or json.
    #[arg(long)]
    pub format: Option<String>,
    /// Relative tolerance of the detectors.
    #[arg(long)]
    pub tol_rel: Option<f64>,
    /// Report findings that also hold on an ancestor shape.
    #[arg(long)]
    pub no_ancestor_filter: bool,
    /// Family parameter values, `k=a..b:n`.
    #[arg(long, value_name = "GRID")]
    pub param_grid: Option<String>,
    /// Worker threads; every core when absent.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Re-test novel findings on fresh seeds.
    #[arg(long)]
    pub confirm: bool,
    /// Also re-test in extended precision; marks numeric-only centers with `*`.
    #[arg(long)]
    pub high_precision: bool,
    /// Include orthogonality in the checklist.
    #[arg(long)]
    pub orthogonality: bool,
    /// List inherited findings in the tables as well.
    #[arg(long)]
    pub include_inherited: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Shape name, as listed by `cqe shapes`.
    #[arg(long, value_parser = parse_shape)]
    pub shape: Shape,
    /// `5`, `brocard1` or `power(k=0.5)`.
    #[arg(long)]
    pub center: String,
    /// Statement in table notation, e.g. `m[ABCD]=dp(EFGH)`, or a relation name such as `concentric`.
    #[arg(long)]
    pub relation: String,
    /// Samples to check; the same seeds `explore` uses for this cell.
    #[arg(long)]
    pub samples: Option<usize>,
    /// Master seed.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Relative tolerance of the detectors.
    #[arg(long)]
    pub tol_rel: Option<f64>,
    /// Also check in extended precision at the tight tolerance.
    #[arg(long)]
    pub high_precision: bool,
}

#[derive(Debug, Args)]
pub struct ReproduceArgs {
    /// Shape whose table to reproduce.
    #[arg(long, value_parser = parse_shape, conflicts_with = "all", required_unless_present = "all")]
    pub table: Option<Shape>,
    /// Every embedded table.
    #[arg(long)]
    pub all: bool,
    /// Samples per (shape, center); at least 3.
    #[arg(long)]
    pub samples: Option<usize>,
    /// Master seed.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Worker threads; every core when absent.
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Args)]
pub struct CentersArgs {
    /// Only centers carrying this tag: on_circumcircle, shinagawa_constant, euler_line.
    #[arg(long)]
    pub tag: Option<String>,
    /// Indices to show; all when absent.
    pub indices: Vec<u32>,
}

#[derive(Debug, Args)]
pub struct ShapesArgs {
    /// Print the shape lattice as a Graphviz digraph.
    #[arg(long)]
    pub dot: bool,
}

/// Values a `--config` file may set. Command-line flags take precedence.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub samples: Option<usize>,
    pub seed: Option<u64>,
    pub tol_rel: Option<f64>,
    pub jobs: Option<usize>,
    pub format: Option<String>,
    pub catalog: Option<PathBuf>,
}

impl Config {
    pub fn load(path: &Path) -> anyhow::Result<Config> {
        let text = std::fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| Usage(format!("{}: {e}", path.display())).into())
    }
}

struct Ctx {
    catalog: Catalog,
    config: Config,
}

impl Ctx {
    fn new(cli: &Cli) -> anyhow::Result<Ctx> {
        let config = cli.config.as_deref().map(Config::load).transpose()?.unwrap_or_default();
        let path = cli.catalog.clone().or_else(|| config.catalog.clone());
        let catalog = match path {
            Some(p) => Catalog::load(&p).map_err(|e| Usage(format!("{}: {e}", p.display())))?,
            None => Catalog::builtin(),
        };
        Ok(Ctx { catalog, config })
    }

    fn tol(&self, flag: Option<f64>) -> anyhow::Result<Tolerance> {
        let base = Tolerance::default();
        match flag.or(self.config.tol_rel) {
            Some(r) => Ok(base.with_rel(r).map_err(|e| Usage(format!("--tol-rel: {e}")))?),
            None => Ok(base),
        }
    }

    fn run_config(&self, samples: Option<usize>, seed: Option<u64>, jobs: Option<usize>) -> RunConfig {
        RunConfig {
            samples: samples.or(self.config.samples).unwrap_or(DEFAULT_SAMPLES),
            master_seed: seed.or(self.config.seed).unwrap_or(0),
            jobs: jobs.or(self.config.jobs),
            ..Default::default()
        }
    }
}

/// Miner errors raised before any sampling are all input problems.
fn usage(e: cqe_miner::MinerError) -> anyhow::Error {
    Usage(e.to_string()).into()
}

fn explore(ctx: &Ctx, a: &ExploreArgs, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<i32> {
    let format: Format = a.format.as_deref().or(ctx.config.format.as_deref()).unwrap_or("markdown").parse().map_err(usage)?;
    let grid = a.param_grid.as_deref().map(ParamGrid::parse).transpose()?;
    let sel = parse_selection(&a.centers, grid.as_ref(), &ctx.catalog)?;
    if sel.centers.is_empty() {
        return Err(Usage(format!("`{}` selects no catalog center", a.centers)).into());
    }
    let mut shapes = a.shape.clone();
    shapes.dedup();
    let cfg = RunConfig {
        shapes: shapes.clone(),
        centers: sel.centers.clone(),
        tol: ctx.tol(a.tol_rel)?,
        ancestor_filter: !a.no_ancestor_filter,
        orthogonality: a.orthogonality,
        ..ctx.run_config(a.samples, a.seed, a.jobs)
    };
    let miner = Miner::new(&ctx.catalog, cfg).map_err(usage)?;
    let mut mined = miner.mine()?;
    let confirmed = a.confirm || a.high_precision;
    if confirmed {
        mined = miner.confirm_all(mined, CONFIRM_SAMPLES, a.high_precision)?;
    }
    let opts = ReportOptions { include_inherited: a.include_inherited, mark_numeric_only: a.high_precision };
    let doc = render(&mined, &shapes, format, &opts)?;
    match &a.out {
        Some(p) => std::fs::write(p, &doc).with_context(|| format!("writing {}", p.display()))?,
        None => out.write_all(doc.as_bytes())?,
    }
    summarize(&mined, shapes.len(), &sel, a.high_precision, err)?;
    Ok(0)
}

fn summarize(m: &MineOutput, shapes: usize, sel: &Selection, hp: bool, err: &mut dyn Write) -> anyhow::Result<()> {
    let new = m.novel().count();
    let inherited = m.findings.iter().filter(|f| matches!(f.novelty, Novelty::Inherited(_))).count();
    write!(err, "{} shape(s) x {} center(s): {new} new, {inherited} inherited", shapes, sel.centers.len())?;
    if hp {
        write!(err, ", {} numeric-only", m.novel().filter(|f| f.numeric_only()).count())?;
    }
    writeln!(err, ", {} diagnostic(s)", m.diagnostics.len())?;
    if !sel.uncovered.is_empty() {
        writeln!(err, "{} requested center(s) not in the catalog were skipped", sel.uncovered.len())?;
    }
    for d in &m.diagnostics {
        let c = d.center.map(|c| format!(" {}", c.label())).unwrap_or_default();
        writeln!(err, "  {}{c}: {}", d.shape, d.message)?;
    }
    Ok(())
}

fn verify_cmd(ctx: &Ctx, a: &VerifyArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let center: CenterSpec = a.center.parse().map_err(usage)?;
    let rc = ctx.run_config(a.samples, a.seed, None);
    let claim = Claim {
        shape: a.shape,
        center,
        statement: a.relation.clone(),
        samples: rc.samples,
        master_seed: rc.master_seed,
        tol: ctx.tol(a.tol_rel)?,
        high_precision: a.high_precision,
    };
    let verdict = verify(&ctx.catalog, claim).map_err(usage)?;
    write!(out, "{verdict}")?;
    Ok(if verdict.passed() { 0 } else { 1 })
}

fn reproduce(ctx: &Ctx, a: &ReproduceArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let tables = match a.table {
        Some(s) => vec![builtin_table(s).ok_or_else(|| Usage(format!("no published table for {s}")))?],
        None => builtin_tables(),
    };
    let mut code = 0;
    for (i, t) in tables.iter().enumerate() {
        let cfg = RunConfig { shapes: vec![t.shape], centers: t.sweep(&ctx.catalog), ..ctx.run_config(a.samples, a.seed, a.jobs) };
        let mined = mine(&ctx.catalog, cfg, None).map_err(usage)?;
        if i > 0 {
            writeln!(out)?;
        }
        write!(out, "{}", render(&mined, &[t.shape], Format::Markdown, &ReportOptions::default())?)?;
        let diff = t.diff(&mined, &ctx.catalog);
        write!(out, "\n{diff}")?;
        if !diff.is_clean() {
            code = 1;
        }
    }
    Ok(code)
}

fn centers(ctx: &Ctx, a: &CentersArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let tag = a
        .tag
        .as_deref()
        .map(|t| Tag::parse(t).ok_or_else(|| Usage(format!("unknown tag `{t}`"))))
        .transpose()?;
    for &n in &a.indices {
        if !ctx.catalog.contains(n) {
            return Err(Usage(format!("X{n} is not in the catalog")).into());
        }
    }
    for e in ctx.catalog.entries() {
        if (!a.indices.is_empty() && !a.indices.contains(&e.index)) || tag.is_some_and(|t| !e.tags.contains(&t)) {
            continue;
        }
        let tags: Vec<&str> = e.tags.iter().map(|t| t.name()).collect();
        writeln!(out, "X{}\t{}\t{}", e.index, e.function, tags.join(","))?;
    }
    Ok(0)
}

fn shapes(a: &ShapesArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    if a.dot {
        write!(out, "{}", lattice_dot())?;
        return Ok(0);
    }
    for s in Shape::ALL {
        let parents: Vec<&str> = s.parents().iter().map(|p| p.name()).collect();
        let constraints: Vec<&str> = s.constraints().iter().map(|c| c.label()).collect();
        writeln!(out, "{}\t{}\t{}", s, parents.join(","), constraints.join(", "))?;
    }
    Ok(0)
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<i32> {
    let ctx = Ctx::new(cli)?;
    match &cli.command {
        Command::Explore(a) => explore(&ctx, a, out, err),
        Command::Verify(a) => verify_cmd(&ctx, a, out),
        Command::Reproduce(a) => reproduce(&ctx, a, out),
        Command::Centers(a) => centers(&ctx, a, out),
        Command::Shapes(a) => shapes(a, out),
    }
}

/// Runs one invocation and returns its exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        // A closed downstream pipe (`cqe shapes | head`) is not an error.
        Err(e) if e.downcast_ref::<std::io::Error>().is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            if e.is::<Usage>() { 2 } else { 1 }
        }
    }
}
