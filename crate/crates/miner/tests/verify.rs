use cqe_catalog::Catalog;
use cqe_miner::*;
use cqe_numerics::Tolerance;
use cqe_shapes::Shape;

fn claim(shape: Shape, center: u32, statement: &str) -> Claim {
    Claim {
        shape,
        center: CenterSpec::Etc(center),
        statement: statement.into(),
        samples: 10,
        master_seed: 0,
        tol: Tolerance::default(),
        high_precision: false,
    }
}

#[test]
fn true_and_false_claims() {
    let cat = Catalog::builtin();
    let v = verify(&cat, claim(Shape::Orthodiagonal, 5, "m[ABCD]=dp[EFGH]")).unwrap();
    assert!(v.passed());
    let (max, mean) = v.residual_stats().unwrap();
    assert!(max < 1e-12 && mean <= max);

    let v = verify(&cat, claim(Shape::General, 7, "m[ABCD]=m[EFGH]")).unwrap();
    assert!(!v.passed());
    assert!(v.checks.iter().all(|c| c.outcome == Outcome::Fails));
    assert!(v.residual_stats().is_none());
}

#[test]
fn parameters_are_reported() {
    let cat = Catalog::builtin();
    let v = verify(&cat, claim(Shape::Cyclic, 399, "concentric")).unwrap();
    assert!(v.passed());
    assert_eq!(v.params(), ["ratio=2"]);
    let v = verify(&cat, claim(Shape::Cyclic, 547, "[ABCD]/[EFGH]=144/25")).unwrap();
    assert_eq!(v.params(), ["k=144/25"]);
}

#[test]
fn extended_precision_adds_samples() {
    let cat = Catalog::builtin();
    let v = verify(&cat, Claim { high_precision: true, ..claim(Shape::Rhombus, 13, "[ABCD]=3[EFGH]") }).unwrap();
    assert!(v.passed());
    assert_eq!(v.checks.iter().filter(|c| c.extended).count(), HP_SAMPLES);
    assert!(v.to_string().contains("extended precision residual"));
}

#[test]
fn unusable_samples_fail_the_claim() {
    let v = verify(&Catalog::builtin(), claim(Shape::Cyclic, 3, "homothetic")).unwrap();
    assert!(!v.passed());
    assert!(v.checks.iter().all(|c| matches!(c.outcome, Outcome::Unusable(_))));
}

#[test]
fn claims_share_the_mining_samples() {
    // A finding mined from a cell verifies on the same seeds.
    let cat = Catalog::builtin();
    let cfg = RunConfig { shapes: vec![Shape::General], centers: vec![CenterSpec::Etc(2)], master_seed: 3, ..Default::default() };
    let out = mine(&cat, cfg, None).unwrap();
    for f in &out.findings {
        let v = verify(&cat, Claim { master_seed: 3, ..claim(Shape::General, 2, &f.notation) }).unwrap();
        assert!(v.passed(), "{}", f.notation);
    }
}

#[test]
fn bad_claims_are_rejected() {
    let cat = Catalog::builtin();
    assert!(matches!(verify(&cat, claim(Shape::General, 2, "frob[ABCD]")), Err(MinerError::Config(_))));
    assert!(matches!(verify(&cat, claim(Shape::General, 9999, "homothetic")), Err(MinerError::NotInCatalog(9999))));
    assert!(verify(&cat, Claim { samples: 0, ..claim(Shape::General, 2, "homothetic") }).is_err());
}
