//! Acceptance criteria, one line each. Runs without the libtest harness so the
//! lines always show up in `cargo test` output.

use cqe_catalog::{Catalog, Family, CIRCUMCIRCLE_SET, SHINAGAWA_SET};
use cqe_dsl::parse_expr;
use cqe_geom::{distance, Circle, Point, Quad, Similarity, Triangle};
use cqe_miner::fixtures::builtin_table;
use cqe_miner::{mine, verify, Center, CenterSpec, Claim, RunConfig};
use cqe_numerics::{recognize_ratio, Tolerance};
use cqe_quadcenters::{central_points, incircle, quad_center, QuadCenterKind as K};
use cqe_relations::{
    common_circumconic, detect_all, is_homothetic, is_perspective, is_similar, parse_statement, Alignment, DetectOptions,
};
use cqe_shapes::{generate, Shape};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

/// Checks that fail for a geometric reason given alongside. Each must still
/// fail; a pass means the entry is stale.
const EXPECTED_FAIL: &[(&str, &str)] = &[
    (
        "orthoptic X6 perspector = QA-P2",
        "orthoptic quads are orthocentric systems, whose four nine-point circles coincide, so QA-P2 is undefined",
    ),
    (
        "harmonic harmonic_line(k=0) persp[ABCD,GHEF]",
        "k=0 is X6, whose central vertices lie on the diagonals, so the joins are only two lines; \
         X6 is likewise absent from the published harmonic rows",
    ),
];

const SEEDS: std::ops::RangeInclusive<u64> = 1..=10;
const DIST: f64 = 1e-9;

type Outcome = Result<String, String>;

struct Check {
    id: String,
    outcome: Outcome,
    elapsed: Duration,
}

fn cat() -> &'static Catalog {
    static CAT: OnceLock<Catalog> = OnceLock::new();
    CAT.get_or_init(Catalog::builtin)
}

fn tol() -> Tolerance {
    Tolerance::default()
}

fn etc(n: u32) -> CenterSpec {
    CenterSpec::Etc(n)
}

/// (reference, central) on the fixed seeds.
fn pairs(shape: Shape, spec: CenterSpec) -> Result<Vec<(Quad, Quad)>, String> {
    let c = Center::resolve(spec, cat()).map_err(|e| e.to_string())?;
    SEEDS
        .map(|s| {
            let q = generate::<f64>(shape, s).map_err(|e| format!("seed {s}: {e}"))?;
            let e = c.central(&q).map_err(|e| format!("seed {s}: {e}"))?;
            Ok((q, e))
        })
        .collect()
}

fn pt(kind: K, q: &Quad) -> Result<Point, String> {
    quad_center(kind, q, &tol()).map_err(|e| format!("{}: {e}", kind.symbol()))
}

/// Largest `dist(a, b) / scale` over the samples; fails above `eps`.
fn worst(label: &str, eps: f64, values: impl IntoIterator<Item = Result<f64, String>>) -> Outcome {
    let mut m: f64 = 0.0;
    for v in values {
        m = m.max(v?);
    }
    if m <= eps {
        Ok(format!("{label} {m:.1e}"))
    } else {
        Err(format!("{label} {m:.3e} > {eps:.0e}"))
    }
}

fn circle4(q: &Quad) -> Result<(Circle, f64), String> {
    let c = Circle::through(q.v[0], q.v[1], q.v[2]).map_err(|e| e.to_string())?;
    Ok((c, (distance(q.v[3], c.center) - c.radius).abs() / c.radius))
}

fn area_k(q: &Quad, e: &Quad) -> Option<(i64, u64)> {
    recognize_ratio(q.area() / e.area(), 9, 20).map(|r| (r.num, r.den))
}

/// Homothety in some vertex order, or a translation (the ratio 1 limit).
fn homothetic_or_translation(q: &Quad, e: &Quad) -> Result<&'static str, String> {
    if Alignment::DIHEDRAL.iter().any(|al| is_homothetic(q, e, *al, &tol()).is_some()) {
        return Ok("homothety");
    }
    let eps = DIST * q.diameter();
    let shifted = |al: &Alignment| {
        let e = al.apply(e);
        let d = e.v[0] - q.v[0];
        (1..4).all(|i| distance(e.v[i] - q.v[i], d) <= eps)
    };
    if Alignment::DIHEDRAL.iter().any(shifted) {
        return Ok("translation");
    }
    Err("neither homothetic nor a translation".into())
}

fn homothetic_check(shape: Shape, spec: CenterSpec) -> Outcome {
    let mut kinds = BTreeSet::new();
    for (q, e) in pairs(shape, spec)? {
        kinds.insert(homothetic_or_translation(&q, &e)?);
    }
    Ok(kinds.into_iter().collect::<Vec<_>>().join(", "))
}

/// A relationship statement through the miner's verifier on 10 samples.
fn claim(shape: Shape, spec: CenterSpec, statement: &str) -> Outcome {
    let c = Claim {
        shape,
        center: spec,
        statement: statement.into(),
        samples: 10,
        master_seed: 0,
        tol: tol(),
        high_precision: false,
    };
    let v = verify(cat(), c).map_err(|e| e.to_string())?;
    let line = v.to_string().lines().next().unwrap_or_default().to_string();
    if v.passed() {
        Ok(v.residual_stats().map(|(m, _)| format!("residual {m:.1e}")).unwrap_or_default())
    } else {
        Err(line)
    }
}

fn in_catalog(ns: impl IntoIterator<Item = u32>) -> (Vec<u32>, Vec<u32>) {
    ns.into_iter().partition(|n| cat().contains(*n))
}

struct Criterion {
    checks: Vec<Check>,
}

impl Criterion {
    fn new() -> Self {
        Criterion { checks: Vec::new() }
    }

    fn check(&mut self, id: impl Into<String>, f: impl FnOnce() -> Outcome) {
        let t = Instant::now();
        let outcome = f();
        self.checks.push(Check { id: id.into(), outcome, elapsed: t.elapsed() });
    }
}

fn general_suite() -> Criterion {
    let mut c = Criterion::new();
    c.check("general X2 homothety ratio 3, area ratio 9, center m[ABCD]", || {
        let ps = pairs(Shape::General, etc(2))?;
        let mut ratio_err: f64 = 0.0;
        for (q, e) in &ps {
            let h = is_homothetic(q, e, Alignment::IDENTITY, &tol()).ok_or("not homothetic")?;
            ratio_err = ratio_err.max((h.ratio.abs() - 3.0).abs());
            if area_k(q, e) != Some((9, 1)) {
                return Err(format!("area ratio {}", q.area() / e.area()));
            }
            let d = distance(h.center, q.vertex_centroid()) / q.diameter();
            if d > DIST {
                return Err(format!("homothety center off by {d:.3e}"));
            }
        }
        if ratio_err > 1e-8 {
            return Err(format!("|ratio - 3| = {ratio_err:.3e}"));
        }
        Ok(format!("|ratio - 3| {ratio_err:.1e}"))
    });
    c.check("general X4 equal area and common rectangular hyperbola about QA-P2", || {
        let ps = pairs(Shape::General, etc(4))?;
        for (q, e) in &ps {
            let rel = (q.area() - e.area()).abs() / q.area();
            if rel > 1e-9 {
                return Err(format!("area rel err {rel:.3e}"));
            }
        }
        worst(
            "hyperbola center offset",
            DIST,
            ps.iter().map(|(q, e)| {
                let h = common_circumconic(q, e, &tol()).ok_or("no common circumconic")?;
                if !h.rectangular {
                    return Err("common conic is not a rectangular hyperbola".to_string());
                }
                let center = h.center.ok_or("conic without center")?;
                let s = q.diameter();
                Ok((distance(center, pt(K::Poncelet, q)?) / s).max(distance(center, pt(K::Poncelet, e)?) / s))
            }),
        )
    });
    c.check("general X3 ponce[EFGH] = stein[ABCD]", || {
        let ps = pairs(Shape::General, etc(3))?;
        worst("offset", DIST, ps.iter().map(|(q, e)| Ok(distance(pt(K::Poncelet, e)?, pt(K::Steiner, q)?) / q.diameter())))
    });
    // Oriented as in the published row m[ABCD]=ponce[EFGH]; see the ledger.
    c.check("general X5 m[ABCD] = ponce[EFGH]", || {
        let ps = pairs(Shape::General, etc(5))?;
        worst("offset", DIST, ps.iter().map(|(q, e)| Ok(distance(q.vertex_centroid(), pt(K::Poncelet, e)?) / q.diameter())))
    });
    for ch in &mut c.checks {
        if ch.outcome.is_ok() && ch.elapsed > Duration::from_secs(1) {
            ch.outcome = Err(format!("took {:.2?}", ch.elapsed));
        }
    }
    c
}

fn perspector_offset(shape: Shape, n: u32, al: &str, at: impl Fn(&Quad) -> Result<Point, String>) -> Outcome {
    let al = Alignment::parse(al).expect("alignment");
    let ps = pairs(shape, etc(n))?;
    worst(
        "perspector offset",
        DIST,
        ps.iter().map(|(q, e)| {
            let (p, _) = is_perspective(q, e, al, &tol()).ok_or("not perspective")?;
            Ok(distance(p, at(q)?) / q.diameter())
        }),
    )
}

fn tangential_x1() -> Criterion {
    let mut c = Criterion::new();
    c.check("tangential X1 persp[ABCD,GHEF] at the incenter", || {
        perspector_offset(Shape::Tangential, 1, "GHEF", |q| Ok(incircle(q, &tol()).map_err(|e| e.to_string())?.center))
    });
    c
}

fn orthodiagonal_suite() -> Criterion {
    let mut c = Criterion::new();
    c.check("orthodiagonal X4 dp(ABCD) = dp(EFGH) = ponce[ABCD]", || {
        let ps = pairs(Shape::Orthodiagonal, etc(4))?;
        worst(
            "offset",
            DIST,
            ps.iter().map(|(q, e)| {
                let d = pt(K::DiagonalPoint, q)?;
                Ok((distance(d, pt(K::DiagonalPoint, e)?).max(distance(d, pt(K::Poncelet, q)?))) / q.diameter())
            }),
        )
    });
    c.check("orthodiagonal X5 m[ABCD] = dp(EFGH)", || {
        let ps = pairs(Shape::Orthodiagonal, etc(5))?;
        worst("offset", DIST, ps.iter().map(|(q, e)| Ok(distance(q.vertex_centroid(), pt(K::DiagonalPoint, e)?) / q.diameter())))
    });
    for n in [25, 68, 485, 486] {
        c.check(format!("orthodiagonal X{n} persp[ABCD,GHEF]"), || claim(Shape::Orthodiagonal, etc(n), "persp[ABCD,GHEF]"));
    }
    c
}

fn cyclic_area_ratios() -> Criterion {
    let mut c = Criterion::new();
    let table: [(&[u32], (i64, u64)); 10] = [
        (&[5, 550], (4, 1)),
        (&[376], (9, 1)),
        (&[140, 548], (16, 1)),
        (&[631], (25, 1)),
        (&[549], (36, 1)),
        (&[382], (1, 4)),
        (&[381], (9, 4)),
        (&[546], (16, 9)),
        (&[632], (100, 9)),
        (&[547], (144, 25)),
    ];
    for (ns, k) in table {
        for &n in ns {
            c.check(format!("cyclic X{n} area ratio {}/{}", k.0, k.1), || {
                for (s, (q, e)) in SEEDS.zip(pairs(Shape::Cyclic, etc(n))?) {
                    let got = area_k(&q, &e);
                    if got != Some(k) {
                        return Err(format!("seed {s}: recognized {got:?} from {}", q.area() / e.area()));
                    }
                }
                Ok("exact on every sample".into())
            });
        }
    }
    c
}

fn cyclic_sets() -> Criterion {
    let mut c = Criterion::new();
    let (members, absent) = in_catalog(CIRCUMCIRCLE_SET.iter().copied());
    c.check(format!("cyclic circumcircle set ({} of {} in catalog)", members.len(), members.len() + absent.len()), || {
        let mut out = Vec::new();
        for n in &members {
            out.extend(pairs(Shape::Cyclic, etc(*n))?.into_iter().map(|(q, e)| {
                let o = Circle::through(q.v[0], q.v[1], q.v[2]).map_err(|e| e.to_string())?;
                Ok(e.v.iter().fold(0.0f64, |m, v| m.max((distance(*v, o.center) - o.radius).abs())) / o.radius)
            }));
        }
        worst("vertex deviation / R", DIST, out)
    });
    for n in SHINAGAWA_SET.iter().copied().filter(|n| cat().contains(*n) && *n != 3) {
        c.check(format!("cyclic X{n} homothetic"), || homothetic_check(Shape::Cyclic, etc(n)));
    }
    // X3 sends every half triangle to the common circumcenter: the homothety
    // of ratio 0 about O, which the central-quad constructor rejects.
    c.check("cyclic X3 homothetic (ratio 0)", || {
        let mut out = Vec::new();
        for s in SEEDS {
            let q = generate::<f64>(Shape::Cyclic, s).map_err(|e| e.to_string())?;
            let pts = central_points(&q, |t| cat().center_point(3, t)).map_err(|e| e.to_string())?;
            let (o, _) = circle4(&q)?;
            out.push(Ok(pts.iter().map(|p| distance(*p, o.center)).fold(0.0, f64::max) / o.radius));
        }
        worst("offset from O / R", DIST, out)
    });
    c.check("cyclic X399 concentric circumcircles, radius ratio 2", || {
        let ps = pairs(Shape::Cyclic, etc(399))?;
        let mut err: f64 = 0.0;
        for (q, e) in &ps {
            let (o, _) = circle4(q)?;
            let (oe, res) = circle4(e)?;
            if res > DIST || distance(o.center, oe.center) > DIST * o.radius {
                return Err("circumcircles not concentric".into());
            }
            err = err.max((oe.radius / o.radius - 2.0).abs());
        }
        if err > 1e-8 {
            return Err(format!("|ratio - 2| = {err:.3e}"));
        }
        Ok(format!("|ratio - 2| {err:.1e}"))
    });
    for n in [4, 20] {
        c.check(format!("cyclic X{n} congruent"), || {
            let ps = pairs(Shape::Cyclic, etc(n))?;
            worst(
                "|ratio - 1|",
                DIST,
                ps.iter().map(|(q, e)| {
                    Alignment::DIHEDRAL
                        .iter()
                        .filter_map(|al| is_similar(q, e, *al, &tol()))
                        .map(|s| (s.ratio - 1.0).abs())
                        .reduce(f64::min)
                        .ok_or_else(|| "not similar".to_string())
                }),
            )
        });
    }
    let listed = [
        1, 2, 4, 5, 13, 14, 15, 16, 20, 23, 36, 40, 80, 125, 140, 165, 186, 265, 376, 381, 382, 399, 546, 547, 548, 549,
        550, 631, 632,
    ];
    let (members, absent) = in_catalog(listed);
    c.check(format!("cyclic central quads concyclic ({} of {} in catalog)", members.len(), members.len() + absent.len()), || {
        let mut out = Vec::new();
        for n in &members {
            out.extend(pairs(Shape::Cyclic, etc(*n))?.into_iter().map(|(q, e)| {
                let (o, _) = circle4(&q)?;
                let (_, res) = circle4(&e)?;
                let (ce, _) = circle4(&e)?;
                Ok(res * ce.radius / o.radius)
            }));
        }
        worst("fit residual / R", DIST, out)
    });
    c
}

fn sentinel_sweeps() -> Criterion {
    let mut c = Criterion::new();
    for shape in [
        Shape::Extangential,
        Shape::EqualProdOpp,
        Shape::EqualProdAdj,
        Shape::Pythagorean,
        Shape::Equidiagonal,
        Shape::TangentialTrapezoid,
        Shape::OrthodiagonalTrapezoid,
        Shape::Hjelmslev,
        Shape::Ap,
        Shape::Exbicentric,
    ] {
        c.check(format!("{shape} has no new relationships"), || {
            let t = builtin_table(shape).ok_or("no table")?;
            let centers = t.sweep(cat());
            let n = centers.len();
            let out = mine(cat(), RunConfig { shapes: vec![shape], centers, ..Default::default() }, None).map_err(|e| e.to_string())?;
            let first = out.novel().next().map(|f| format!("X{}: {} ({} new)", f.center, f.notation, out.novel().count()));
            first.map_or_else(|| Ok(format!("{n} centers swept")), Err)
        });
    }
    c
}

/// Every catalog center of every row of `shape`'s table satisfies the row.
fn rows_hold(shape: Shape, only: Option<&[u32]>) -> Outcome {
    let t = builtin_table(shape).ok_or("no table")?;
    let (mut checked, mut absent) = (0, BTreeSet::new());
    for row in &t.rows {
        for &n in &row.centers {
            if only.is_some_and(|o| !o.contains(&n)) {
                continue;
            }
            if !cat().contains(n) {
                absent.insert(n);
                continue;
            }
            claim(shape, etc(n), &row.statement.source).map_err(|e| format!("{}: {e}", row.source))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} row entries hold; not in catalog: {absent:?}"))
}

fn named_shapes() -> Criterion {
    let mut c = Criterion::new();
    c.check("trapezoid X3 ABCD similar and orthogonal to HGFE", || {
        claim(Shape::Trapezoid, etc(3), "ABCD∼HGFE")?;
        claim(Shape::Trapezoid, etc(3), "ABCD⊥HGFE")
    });
    c.check("harmonic perspectivity rows", || rows_hold(Shape::Harmonic, None));
    c.check("kite rows", || rows_hold(Shape::Kite, None));
    c.check("rectangle perimeter row", || {
        let (members, absent) = in_catalog([46, 47, 117, 163, 579, 580, 920]);
        let mut out = Vec::new();
        for n in &members {
            out.extend(pairs(Shape::Rectangle, etc(*n))?.into_iter().map(|(q, e)| Ok((q.perimeter() - e.perimeter()).abs() / q.perimeter())));
        }
        worst(&format!("perimeter rel err (absent {absent:?})"), 1e-8, out)
    });
    c.check("rhombus area ratios", || rows_hold(Shape::Rhombus, None));
    c.check("square area ratios", || rows_hold(Shape::Square, None));
    c.check("cyclic orthodiagonal rows", || {
        claim(Shape::CyclicOrthodiagonal, etc(68), "[ABCD]=[EHGF]")?;
        rows_hold(Shape::CyclicOrthodiagonal, None)
    });
    c.check("equidiagonal orthodiagonal rows", || rows_hold(Shape::EqOrtho, None));
    c.check("parallelogram conic row, conic center QA-P1 of both", || {
        rows_hold(Shape::Parallelogram, None)?;
        let (members, absent) = in_catalog([7, 13, 14, 17, 18, 66, 330, 485, 486]);
        let mut out = Vec::new();
        for n in &members {
            out.extend(pairs(Shape::Parallelogram, etc(*n))?.into_iter().map(|(q, e)| {
                let k = common_circumconic(&q, &e, &tol()).ok_or("no common conic")?;
                let o = k.center.ok_or("no conic center")?;
                Ok(distance(o, q.vertex_centroid()).max(distance(o, e.vertex_centroid())) / q.diameter())
            }));
        }
        worst(&format!("center offset (absent {absent:?})"), DIST, out)
    });
    c.check("isosceles trapezoid persp[ABCD,HGFE] set", || rows_hold(Shape::IsoscelesTrapezoid, None));
    c.check("bicentric trapezoid sets", || rows_hold(Shape::BicentricTrapezoid, None));
    c
}

fn family(f: Family, k: f64) -> CenterSpec {
    CenterSpec::Family { family: f, k }
}

fn future_research() -> Criterion {
    let mut c = Criterion::new();
    c.check("orthoptic X6 persp[ABCD,EFGH]", || claim(Shape::Orthoptic, etc(6), "persp[ABCD,EFGH]"));
    c.check("orthoptic X6 perspector = QA-P2", || {
        perspector_offset(Shape::Orthoptic, 6, "EFGH", |q| pt(K::Poncelet, q))
    });
    c.check("orthocentric X11 EFGH concyclic about m[ABCD]", || {
        let ps = pairs(Shape::Orthocentric, etc(11))?;
        worst(
            "offset",
            DIST,
            ps.iter().map(|(q, e)| {
                let (ce, res) = circle4(e)?;
                Ok((res * ce.radius).max(distance(ce.center, q.vertex_centroid())) / q.diameter())
            }),
        )
    });
    c.check("square first Brocard area ratio 5", || {
        for (q, e) in pairs(Shape::Square, CenterSpec::Brocard1)? {
            if area_k(&q, &e) != Some((5, 1)) {
                return Err(format!("ratio {}", q.area() / e.area()));
            }
        }
        Ok("exact on every sample".into())
    });
    c.check("cyclic X1173 common circumconic", || claim(Shape::Cyclic, etc(1173), "conic"));
    for k in [-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0] {
        c.check(format!("parallelogram power(k={k}) dp(ABCD)=dp(EFGH)"), || {
            claim(Shape::Parallelogram, family(Family::Power, k), "dp(ABCD)=dp(EFGH)")
        });
    }
    for k in [-1.0, 0.0, 0.5, 1.0, 2.0] {
        c.check(format!("cyclic cos_euler(k={k}) homothetic"), || homothetic_check(Shape::Cyclic, family(Family::CosEuler, k)));
    }
    for k in [-1.0, 0.0, 1.0, -2.0, -0.5, 1.0 / 3.0, 0.75, 2.0] {
        c.check(format!("harmonic harmonic_line(k={}) persp[ABCD,GHEF]", (k * 1e4f64).round() / 1e4), || {
            claim(Shape::Harmonic, family(Family::HarmonicLine, k), "persp[ABCD,GHEF]")
        });
    }
    c
}

fn random_similarity(rng: &mut ChaCha8Rng) -> Similarity {
    Similarity {
        angle: rng.gen_range(-3.1..3.1),
        scale: 10f64.powf(rng.gen_range(-1.0..1.0)),
        shift: Point::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0)),
    }
}

fn properties() -> Criterion {
    let mut c = Criterion::new();
    let indices: Vec<u32> = cat().indices().collect();
    c.check("similarity equivariance, 1000 trials", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5111);
        let (mut worst_d, mut trials) = (0.0f64, 0);
        while trials < 1000 {
            let n = indices[rng.gen_range(0..indices.len())];
            let center = Center::resolve(etc(n), cat()).map_err(|e| e.to_string())?;
            let q = generate::<f64>(Shape::General, rng.gen()).map_err(|e| e.to_string())?;
            let Ok(e) = center.central(&q) else { continue };
            let s = random_similarity(&mut rng);
            let (qs, es) = (q.map(|p| s.apply(p)), e.map(|p| s.apply(p)));
            let Ok(e2) = center.central(&qs) else { return Err(format!("X{n}: central quad lost under the map")) };
            let d = (0..4).map(|i| distance(e2.v[i], es.v[i])).fold(0.0, f64::max) / qs.diameter().max(es.diameter());
            if d > 1e-8 {
                return Err(format!("X{n}: central quad moved by {d:.3e}"));
            }
            worst_d = worst_d.max(d);
            let opts = DetectOptions { orthogonality: true, ..Default::default() };
            let names = |a: &Quad, b: &Quad| detect_all(a, b, &opts).iter().map(|r| r.notation()).collect::<BTreeSet<_>>();
            let (before, after) = (names(&q, &e), names(&qs, &e2));
            if before != after {
                return Err(format!("X{n}: detections differ: {before:?} vs {after:?}"));
            }
            trials += 1;
        }
        Ok(format!("worst offset {worst_d:.1e}"))
    });
    c.check("barycentric round trip over the catalog", || {
        let tri = Triangle::new(Point::new(0.1, 0.2), Point::new(3.7, 0.4), Point::new(1.3, 2.9)).map_err(|e| e.to_string())?;
        let mut out = Vec::new();
        for e in cat().entries() {
            let Ok(p) = e.function.point(&tri) else { continue };
            if p.norm() > 1e6 {
                continue;
            }
            let back = tri.bary_to_cartesian(&tri.cartesian_to_bary(p)).map_err(|e| e.to_string());
            out.push(back.map(|b| distance(b, p) / (1.0 + p.norm())));
        }
        worst("round trip error", DIST, out)
    });
    c.check("nine-point and midray circles share QA-P2 and QA-P3", || {
        let mut out = Vec::new();
        for s in 0..50 {
            let q = generate::<f64>(Shape::General, 1000 + s).map_err(|e| e.to_string())?;
            let (p2, p3) = (pt(K::Poncelet, &q)?, pt(K::Steiner, &q)?);
            let tris = q.half_triangles().map_err(|e| e.to_string())?;
            let np = tris.iter().map(|t| t.nine_point_circle().residual(p2)).fold(0.0, f64::max);
            let mid = (0..4)
                .map(|i| {
                    let m: Vec<Point> = (0..4).filter(|&j| j != i).map(|j| (q.v[i] + q.v[j]) * 0.5).collect();
                    Circle::through(m[0], m[1], m[2]).map(|c| c.residual(p3)).unwrap_or(f64::INFINITY)
                })
                .fold(0.0, f64::max);
            out.push(Ok(np.max(mid) / q.diameter()));
        }
        worst("residual", DIST, out)
    });
    c.check("center expressions reparse on the full catalog", || {
        let tri = Triangle::new(Point::new(0.0, 0.0), Point::new(4.0, 0.3), Point::new(1.1, 3.2)).map_err(|e| e.to_string())?;
        for e in cat().entries() {
            let text = e.function.expr.to_string();
            let again = parse_expr(&text).map_err(|err| format!("X{}: {err}", e.index))?;
            if again.to_string() != text {
                return Err(format!("X{}: `{text}` reprints as `{again}`", e.index));
            }
            let f2 = cqe_dsl::CenterFunction::new(again, e.function.kind).map_err(|err| err.to_string())?;
            match (e.function.point(&tri), f2.point(&tri)) {
                (Ok(a), Ok(b)) if distance(a, b) <= DIST * (1.0 + a.norm()) => {}
                (Err(_), Err(_)) => {}
                _ => return Err(format!("X{}: reparsed expression evaluates differently", e.index)),
            }
        }
        Ok(format!("{} expressions", cat().len()))
    });
    c.check("explore --shape cyclic --centers 1..100 --seed 7 is byte-identical", || {
        let run = || {
            let (mut out, mut err) = (Vec::new(), Vec::new());
            let code = cqe::run(["cqe", "explore", "--shape", "cyclic", "--centers", "1..100", "--seed", "7"], &mut out, &mut err);
            (code, out)
        };
        let (a, b) = (run(), run());
        match (a.0, a == b) {
            (0, true) => Ok(format!("{} bytes", a.1.len())),
            (0, false) => Err("outputs differ".into()),
            (code, _) => Err(format!("exit {code}")),
        }
    });
    c
}

fn calibration() -> Criterion {
    let mut c = Criterion::new();
    c.check("general X7..X12 report only published general relations", || {
        let (centers, _) = in_catalog(7..=12);
        let rows: Vec<_> = builtin_table(Shape::General).ok_or("no table")?.rows.into_iter().map(|r| r.statement).collect();
        let cfg = RunConfig { shapes: vec![Shape::General], centers: centers.iter().map(|n| etc(*n)).collect(), ..Default::default() };
        let out = mine(cat(), cfg, None).map_err(|e| e.to_string())?;
        for f in out.novel() {
            if !rows.iter().any(|r| r.covers(&f.relation)) {
                return Err(format!("X{}: {}", f.center, f.notation));
            }
        }
        Ok(format!("{} findings over {:?}", out.novel().count(), centers))
    });
    c
}

type Entry = (u32, &'static str, fn() -> Criterion);

fn main() {
    // Statements in the table must parse; a broken fixture is not a criterion failure.
    parse_statement("m[ABCD]=ponce[EFGH]").expect("notation parser");
    let criteria: [Entry; 10] = [
        (1, "general quadrilaterals", general_suite),
        (2, "tangential X1", tangential_x1),
        (3, "orthodiagonal suite", orthodiagonal_suite),
        (4, "cyclic area ratios", cyclic_area_ratios),
        (5, "cyclic set theorems", cyclic_sets),
        (6, "sentinel shape sweeps", sentinel_sweeps),
        (7, "named-shape fixtures", named_shapes),
        (8, "future-research fixtures", future_research),
        (9, "property suites", properties),
        (10, "false-positive calibration", calibration),
    ];
    let mut unexpected = Vec::new();
    let mut stale = Vec::new();
    for (n, title, run) in criteria {
        let t = Instant::now();
        let crit = run();
        let failed: Vec<&Check> = crit.checks.iter().filter(|c| c.outcome.is_err()).collect();
        let known = |c: &Check| EXPECTED_FAIL.iter().any(|(id, _)| *id == c.id);
        let verdict = if failed.is_empty() {
            "PASS"
        } else if failed.iter().all(|c| known(c)) {
            "FAIL (expected)"
        } else {
            "FAIL"
        };
        println!("criterion {n:>2} {title}: {verdict} [{} checks, {:.1?}]", crit.checks.len(), t.elapsed());
        for ch in &crit.checks {
            match &ch.outcome {
                Err(e) if known(ch) => println!("    expected fail  {}: {e}", ch.id),
                Err(e) => {
                    println!("    FAIL  {}: {e}", ch.id);
                    unexpected.push(ch.id.clone());
                }
                Ok(_) if known(ch) => {
                    println!("    now passes  {}", ch.id);
                    stale.push(ch.id.clone());
                }
                Ok(_) => {}
            }
        }
    }
    for (id, why) in EXPECTED_FAIL {
        println!("known failure: {id}: {why}");
    }
    if !unexpected.is_empty() || !stale.is_empty() {
        println!("unexpected failures: {unexpected:?}; stale expected failures: {stale:?}");
        std::process::exit(1);
    }
    println!("acceptance: all criteria met apart from {} documented failure(s)", EXPECTED_FAIL.len());
}
