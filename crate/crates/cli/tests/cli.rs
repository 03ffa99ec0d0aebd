use cqe::{parse_selection, ParamGrid};
use cqe_catalog::Catalog;
use cqe_miner::CenterSpec;
use std::process::Command;

fn cqe(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cqe::run(std::iter::once("cqe").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn row<'a>(md: &'a str, notation: &str) -> Option<&'a str> {
    md.lines().find_map(|l| l.strip_prefix(&format!("| {notation} | "))).map(|r| r.trim_end_matches(" |"))
}

#[test]
fn verify_passes_and_fails_with_exit_codes() {
    let (code, out, _) = cqe(&["verify", "--shape", "orthodiagonal", "--center", "5", "--relation", "m[ABCD]=dp[EFGH]"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("PASS m[ABCD]=dp[EFGH] on orthodiagonal X5: 10/10 samples"));
    assert!(out.contains("residual max"));

    let (code, out, _) = cqe(&["verify", "--shape", "cyclic", "--center", "399", "--relation", "concentric"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("ratio=2"), "{out}");

    let (code, out, _) = cqe(&["verify", "--shape", "general", "--center", "7", "--relation", "m[ABCD]=m[EFGH]"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("FAIL"));
}

#[test]
fn verify_in_extended_precision() {
    let (code, out, _) =
        cqe(&["verify", "--shape", "rhombus", "--center", "13", "--relation", "[ABCD]=3[EFGH]", "--high-precision"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("12/12 samples") && out.contains("extended precision residual"), "{out}");
}

#[test]
fn explore_special_centers() {
    let (code, out, err) = cqe(&["explore", "--shape", "square", "--centers", "brocard1"]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(row(&out, "[ABCD]=5[EFGH]"), Some("brocard1"));

    let (code, out, err) =
        cqe(&["explore", "--shape", "parallelogram", "--centers", "family:power", "--param-grid", "k=-2..2:9"]);
    assert_eq!(code, 0, "{err}");
    let dp = row(&out, "dp(ABCD)=dp(EFGH)").unwrap();
    assert_eq!(dp.split(", ").count(), 9, "{dp}");
    assert!(dp.starts_with("power(k=-2), power(k=-1.5),"));
}

#[test]
fn explore_writes_every_format_and_summarizes() {
    let dir = tempfile::tempdir().unwrap();
    for (fmt, head) in [("csv", "shape,center,relation"), ("json", "{"), ("md", "## general")] {
        let path = dir.path().join(format!("r.{fmt}"));
        let (code, out, err) =
            cqe(&["explore", "--shape", "general", "--centers", "2,4", "--format", fmt, "--out", path.to_str().unwrap()]);
        assert_eq!(code, 0, "{err}");
        assert!(out.is_empty());
        assert!(std::fs::read_to_string(&path).unwrap().starts_with(head));
        assert!(err.starts_with("1 shape(s) x 2 center(s): "), "{err}");
    }
}

#[test]
fn explore_is_reproducible() {
    let args = ["explore", "--shape", "cyclic", "--centers", "1..60", "--seed", "7"];
    let a = cqe(&args);
    let b = cqe(&[&args[..], &["--jobs", "1"]].concat());
    assert_eq!(a.0, 0);
    assert_eq!(a.1, b.1);
    assert!(a.2.contains("not in the catalog were skipped"));
    let c = cqe(&["explore", "--shape", "cyclic", "--centers", "1..60", "--seed", "8"]);
    assert_eq!(a.1, c.1, "tables should not depend on the seed either");
}

#[test]
fn reproduce_reports_tables_and_diffs() {
    let (code, out, _) = cqe(&["reproduce", "--table", "tangential"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(row(&out, "i[ABCD]=persp[ABCD,GHEF]"), Some("1"));
    assert!(out.contains("table tangential: match"));

    let (code, out, _) = cqe(&["reproduce", "--table", "equalProdAdj"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("| No new relationships were found. | |"));

    // Two further perspectivities the published table lacks make this a diff.
    let (code, out, _) = cqe(&["reproduce", "--table", "isosceles_trapezoid"]);
    assert_eq!(code, 1);
    // Rows ending in the same perspectivity differ only in the named perspector.
    let centers: Vec<String> = out
        .lines()
        .filter(|l| l.contains("persp[ABCD,HGFE] | "))
        .flat_map(|l| l.rsplit(" | ").next().unwrap().trim_end_matches(" |").split(", ").map(String::from).collect::<Vec<_>>())
        .collect();
    let uncovered = [317, 340, 847];
    for n in [19, 25, 48, 49, 63, 69, 186, 264, 265, 304, 305, 317, 340, 847] {
        assert_eq!(centers.contains(&n.to_string()), !uncovered.contains(&n), "X{n}: {out}");
    }
    assert!(out.contains("uncovered   not in catalog: 317, 340, 847"));
    assert!(out.contains("unexpected  X92: persp[ABCD,HGFE]"), "{out}");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["explore", "--shape", "nowhere", "--centers", "2"][..],
        &["explore", "--shape", "general", "--centers", "9999"],
        &["explore", "--shape", "general", "--centers", "frob"],
        &["explore", "--shape", "general", "--centers", "2", "--bogus"],
        &["explore", "--shape", "general", "--centers", "2", "--samples", "2"],
        &["explore", "--shape", "general", "--centers", "2", "--format", "xml"],
        &["explore", "--shape", "general", "--centers", "2", "--tol-rel", "-1"],
        &["explore", "--shape", "general", "--centers", "family:power"],
        &["explore", "--shape", "general", "--centers", "2", "--param-grid", "k=0..1:3"],
        &["verify", "--shape", "general", "--center", "2", "--relation", "frob[ABCD]"],
        &["reproduce", "--table", "orthoptic"],
        &["reproduce"],
        &["centers", "9999"],
        &["frobnicate"],
    ] {
        let (code, _, err) = cqe(args);
        assert_eq!(code, 2, "{args:?}: {err}");
        assert!(!err.is_empty());
    }
}

#[test]
fn help_documents_every_flag() {
    let (code, out, _) = cqe(&["explore", "--help"]);
    assert_eq!(code, 0);
    for flag in [
        "--shape",
        "--centers",
        "--samples",
        "--seed",
        "--catalog",
        "--out",
        "--format",
        "--tol-rel",
        "--no-ancestor-filter",
        "--param-grid",
        "--jobs",
        "--config",
    ] {
        assert!(out.contains(flag), "{flag}");
    }
    let (_, out, _) = cqe(&["verify", "--help"]);
    for flag in ["--shape", "--center", "--relation", "--samples", "--seed", "--high-precision"] {
        assert!(out.contains(flag), "{flag}");
    }
}

#[test]
fn config_file_supplies_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cqe.toml");
    std::fs::write(&cfg, "samples = 4\nformat = \"csv\"\n").unwrap();
    let (code, out, err) =
        cqe(&["--config", cfg.to_str().unwrap(), "verify", "--shape", "general", "--center", "2", "--relation", "homothetic"]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("4/4 samples"), "{out}");
    let (_, out, _) = cqe(&["--config", cfg.to_str().unwrap(), "explore", "--shape", "general", "--centers", "2"]);
    assert!(out.starts_with("shape,center,"));

    std::fs::write(&cfg, "sampels = 4\n").unwrap();
    for cmd in ["shapes", "centers"] {
        let (code, _, err) = cqe(&["--config", cfg.to_str().unwrap(), cmd]);
        assert_eq!(code, 2, "{cmd}");
        assert!(err.contains("sampels"), "{err}");
    }
}

#[test]
fn catalog_from_flag_and_environment() {
    let dir = tempfile::tempdir().unwrap();
    let cat = dir.path().join("small.tsv");
    std::fs::write(&cat, "2\tbary\t1\n4\tbary\tSB*SC\n").unwrap();
    let (code, out, _) = cqe(&["--catalog", cat.to_str().unwrap(), "centers"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 2);

    let out = Command::new(env!("CARGO_BIN_EXE_cqe")).arg("centers").env("CQE_CATALOG", &cat).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 2);

    let out = Command::new(env!("CARGO_BIN_EXE_cqe"))
        .args(["explore", "--shape", "general", "--centers", "5"])
        .env("CQE_CATALOG", &cat)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn centers_and_shapes_listings() {
    let (_, out, _) = cqe(&["centers", "--tag", "on_circumcircle"]);
    assert!(out.lines().count() >= 10);
    assert!(out.lines().all(|l| l.ends_with("on_circumcircle") || l.contains("on_circumcircle,")));
    let (_, out, _) = cqe(&["shapes"]);
    assert_eq!(out.lines().count(), 30);
    assert!(out.lines().any(|l| l.starts_with("square\trectangle,rhombus,")));
    let (_, out, _) = cqe(&["shapes", "--dot"]);
    assert!(out.starts_with("digraph"));
}

#[test]
fn center_selections() {
    let cat = Catalog::builtin();
    let sel = parse_selection("1..10, 20, brocard1", None, &cat).unwrap();
    assert!(sel.centers.contains(&CenterSpec::Etc(20)) && sel.centers.contains(&CenterSpec::Brocard1));
    assert!(sel.centers.iter().all(|c| c.index().is_none_or(|n| cat.contains(n))));
    assert_eq!(sel.centers.len() + sel.uncovered.len(), 12);
    let grid = ParamGrid::parse("k=-1..2:4").unwrap();
    assert_eq!(grid.0, [-1.0, 0.0, 1.0, 2.0]);
    assert_eq!(ParamGrid::parse("k=3..3:1").unwrap().0, [3.0]);
    assert_eq!(ParamGrid::parse("k=-2..2:9").unwrap().0[1], -1.5);
    for bad in ["k=1..2", "x=1..2:3", "k=1..2:0", "k=a..2:3"] {
        assert!(ParamGrid::parse(bad).is_err(), "{bad}");
    }
    assert!(parse_selection("10..1", None, &cat).is_err());
    assert!(parse_selection("2,,3", None, &cat).is_err());
}
