use crate::{Alignment, CenterRef, Pairing, Relation, RelationKind, Role};
use cqe_geom::{conic_through, distance, Conic, Line, Point, Quad, Real, Scalar};
use cqe_numerics::{recognize_ratio_eps, SmallRational, Tolerance};
use cqe_quadcenters::{circumcircle, incircle, quad_center, Caps, QuadCenterKind};

/// Perspectors and homothety centers farther than this many scene diameters
/// are treated as points at infinity.
const FAR: f64 = 1e6;

/// Largest numerator or denominator accepted for recognized ratios.
const MAX_DEN: u64 = 9;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DetectOptions {
    pub tol: Tolerance,
    /// Shape-restricted centers the reference quadrilateral admits.
    pub ref_caps: Caps,
    /// Orthogonality is not part of the standard checklist; off by default.
    pub orthogonality: bool,
    /// Report every matching alignment for similarity, homothety and
    /// orthogonality instead of the first in canonical order.
    pub all_alignments: bool,
}

fn scene_scale<T: Real>(q: &Quad<T>, e: &Quad<T>) -> f64 {
    q.diameter().max(e.diameter()).as_f64()
}

fn dtol<T: Real>(tol: &Tolerance, scale: f64) -> T {
    T::lit(tol.dist(scale))
}

fn xy<T: Real>(p: Point<T>) -> [f64; 2] {
    [p.x.as_f64(), p.y.as_f64()]
}

/// Four sides then two diagonals.
fn six<T: Real>(q: &Quad<T>) -> [T; 6] {
    let s = q.sides();
    let (p, r) = q.diagonals();
    [s[0], s[1], s[2], s[3], p, r]
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Similar {
    /// |ABCD| / |EFGH|.
    pub ratio: f64,
    pub residual: f64,
}

/// Six proportional distances fix four points up to a similarity, direct or
/// opposite.
pub fn is_similar<T: Real>(q: &Quad<T>, e: &Quad<T>, al: Alignment, tol: &Tolerance) -> Option<Similar> {
    let (dq, de) = (six(q), six(&al.apply(e)));
    if de.iter().any(|d| !(*d > T::zero())) {
        return None;
    }
    let r: [T; 6] = std::array::from_fn(|i| dq[i] / de[i]);
    let mean = r.iter().fold(T::zero(), |a, x| a + *x) / T::lit(6.0);
    let spread = r.iter().fold(T::zero(), |m, x| m.max((*x - mean).abs())) / mean;
    (spread <= T::lit(tol.rel_eps)).then(|| Similar { ratio: mean.as_f64(), residual: spread.as_f64() })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Homothety<T> {
    pub center: Point<T>,
    /// 1/λ for EFGH = X + λ(ABCD − X).
    pub ratio: T,
    pub residual: f64,
}

pub fn is_homothetic<T: Real>(q: &Quad<T>, e: &Quad<T>, al: Alignment, tol: &Tolerance) -> Option<Homothety<T>> {
    let e = al.apply(e);
    let scale = scene_scale(q, &e);
    let eps: T = dtol(tol, scale);
    let side = |x: &Quad<T>, i: usize| x.v[(i + 1) % 4] - x.v[i];
    let (mut num, mut den) = (T::zero(), T::zero());
    for i in 0..4 {
        num = num + side(&e, i).dot(side(q, i));
        den = den + side(q, i).norm2();
    }
    let lambda = num / den;
    let rel = T::lit(tol.rel_eps);
    if (lambda - T::one()).abs() <= rel || lambda.abs() <= rel {
        return None;
    }
    let center = (0..4).fold(Point::origin(), |acc, i| acc + (e.v[i] - q.v[i] * lambda)) / (T::lit(4.0) * (T::one() - lambda));
    if distance(center, q.vertex_centroid()).as_f64() > FAR * scale {
        return None;
    }
    let res = (0..4).fold(T::zero(), |m, i| {
        let predicted = center + (q.v[i] - center) * lambda;
        m.max(distance(predicted, e.v[i])).max((side(&e, i) - side(q, i) * lambda).norm())
    });
    (res <= eps).then(|| Homothety { center, ratio: T::one() / lambda, residual: res.as_f64() / scale })
}

/// Perspector of ABCD and the aligned EFGH, if the four joins concur at a
/// finite point.
pub fn is_perspective<T: Real>(q: &Quad<T>, e: &Quad<T>, al: Alignment, tol: &Tolerance) -> Option<(Point<T>, f64)> {
    let e = al.apply(e);
    let scale = scene_scale(q, &e);
    let eps: T = dtol(tol, scale);
    let mut lines = Vec::with_capacity(4);
    for i in 0..4 {
        if distance(q.v[i], e.v[i]) <= eps {
            return None;
        }
        lines.push(Line::through(q.v[i], e.v[i]).ok()?);
    }
    // Coinciding joins concur trivially; a symmetry axis holding two of them
    // would otherwise make every symmetric configuration perspective.
    let same_line = |i: usize, j: usize| lines[i].distance(q.v[j]) <= eps && lines[i].distance(e.v[j]) <= eps;
    let mut distinct = 0;
    for j in 0..4 {
        if (0..j).all(|i| !same_line(i, j)) {
            distinct += 1;
        }
    }
    if distinct < 4 {
        return None;
    }
    // Intersect the most transversal pair.
    let dir = |l: &Line<T>| {
        let d = l.direction();
        d / d.norm()
    };
    let mut best = (0, 1, T::zero());
    for i in 0..4 {
        for j in i + 1..4 {
            let s = dir(&lines[i]).cross(dir(&lines[j])).abs();
            if s > best.2 {
                best = (i, j, s);
            }
        }
    }
    let p = lines[best.0].intersect(&lines[best.1]).ok()?;
    if distance(p, q.vertex_centroid()).as_f64() > FAR * scale {
        return None;
    }
    let res = lines.iter().fold(T::zero(), |m, l| m.max(l.distance(p)));
    (res <= eps).then(|| (p, res.as_f64() / scale))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CommonConic<T> {
    pub conic: Conic<T>,
    pub rectangular: bool,
    pub center: Option<Point<T>>,
    pub residual: f64,
}

/// Non-circular, non-degenerate conic through all eight vertices.
pub fn common_circumconic<T: Scalar>(q: &Quad<T>, e: &Quad<T>, tol: &Tolerance) -> Option<CommonConic<T>> {
    let scale = T::lit(scene_scale(q, e));
    let c0 = q.vertex_centroid();
    let norm = |p: Point<T>| (p - c0) / scale;
    // Fifth point: the central vertex farthest from the reference vertices.
    let gap = |p: Point<T>| q.v.iter().fold(T::infinity(), |m, v| m.min(distance(p, *v)));
    let pick = (0..4).max_by(|&i, &j| gap(e.v[i]).partial_cmp(&gap(e.v[j])).unwrap_or(std::cmp::Ordering::Equal))?;
    let five = [norm(q.v[0]), norm(q.v[1]), norm(q.v[2]), norm(q.v[3]), norm(e.v[pick])];
    let conic = conic_through(&five, tol.rel_eps).ok()?;
    let res = (0..4).filter(|&i| i != pick).fold(T::zero(), |m, i| m.max(conic.residual(norm(e.v[i]))));
    if res > T::lit(tol.dist(1.0)) || conic.is_circle(tol.rel_eps) || conic.is_degenerate(tol.rel_eps) {
        return None;
    }
    let rectangular = conic.is_rectangular_hyperbola(tol.rel_eps).unwrap_or(false);
    let center = conic.center(tol.rel_eps).ok().map(|p| p * scale + c0);
    let orig = [q.v[0], q.v[1], q.v[2], q.v[3], e.v[pick]];
    let conic = conic_through(&orig, tol.rel_eps).ok()?;
    Some(CommonConic { conic, rectangular, center, residual: res.as_f64() })
}

/// Corresponding sides pairwise perpendicular.
pub fn is_orthogonal<T: Real>(q: &Quad<T>, e: &Quad<T>, al: Alignment, tol: &Tolerance) -> bool {
    orthogonal_residual(q, e, al) <= tol.rel_eps
}

fn orthogonal_residual<T: Real>(q: &Quad<T>, e: &Quad<T>, al: Alignment) -> f64 {
    let e = al.apply(e);
    (0..4).fold(0.0, |m: f64, i| {
        let u = q.v[(i + 1) % 4] - q.v[i];
        let v = e.v[(i + 1) % 4] - e.v[i];
        m.max((u.dot(v).abs() / (u.norm() * v.norm())).as_f64())
    })
}

/// Pairings whose join intersections coincide, with the common point.
pub fn diagonal_point_pairings<T: Real>(q: &Quad<T>, e: &Quad<T>, tol: &Tolerance) -> Vec<(Pairing, Point<T>, f64)> {
    let scale = scene_scale(q, e);
    let eps: T = dtol(tol, scale);
    Pairing::ALL
        .into_iter()
        .filter_map(|p| {
            let (a, b) = (p.point(q)?, p.point(e)?);
            let d = distance(a, b);
            (d <= eps && a.is_finite()).then(|| (p, a, d.as_f64() / scale))
        })
        .collect()
}

/// Recognizes `x` as p/q with small p, q, then confirms in the working
/// precision.
fn recognize<T: Real>(x: T, tol: &Tolerance) -> Option<SmallRational> {
    let xf = x.as_f64();
    if !(xf > 1.0 / 400.0 && xf < 400.0) {
        return None;
    }
    let r = recognize_ratio_eps(xf, MAX_DEN, MAX_DEN, tol.rel_eps.max(1e-12))?;
    let v = T::lit(r.num as f64) / T::lit(r.den as f64);
    ((x - v).abs() <= T::lit(tol.rel_eps) * x).then_some(r)
}

struct Located<T> {
    role: Role,
    points: Vec<(QuadCenterKind, Point<T>)>,
}

fn locate<T: Real>(q: &Quad<T>, caps: Caps, role: Role, tol: &Tolerance) -> Located<T> {
    let points = caps.kinds().filter_map(|k| quad_center(k, q, tol).ok().map(|p| (k, p))).collect();
    Located { role, points }
}

fn identify<T: Real>(p: Point<T>, sets: &[&Located<T>], eps: T) -> Vec<CenterRef> {
    let mut ids = Vec::new();
    for s in sets {
        for (k, c) in &s.points {
            if distance(p, *c) <= eps {
                ids.push(CenterRef { role: s.role, kind: *k });
            }
        }
    }
    ids
}

/// Every checklist relation that holds between ABCD and EFGH, after the
/// exclusion rules.
pub fn detect_all<T: Scalar>(q: &Quad<T>, e: &Quad<T>, opts: &DetectOptions) -> Vec<Relation> {
    apply_exclusions(detect_raw(q, e, opts))
}

/// As [`detect_all`] without exclusions.
pub fn detect_raw<T: Scalar>(q: &Quad<T>, e: &Quad<T>, opts: &DetectOptions) -> Vec<Relation> {
    let tol = &opts.tol;
    let scale = scene_scale(q, e);
    let eps: T = dtol(tol, scale);
    let rel = T::lit(tol.rel_eps);
    let id = Alignment::IDENTITY;
    let mut out = Vec::new();
    let mut push = |kind: RelationKind, alignment: Alignment, residual: f64| out.push(Relation { kind, alignment, residual });

    let e_caps = Caps::of(e, tol);
    let qc = locate(q, opts.ref_caps, Role::Reference, tol);
    let ec = locate(e, e_caps, Role::Central, tol);
    let both = [&qc, &ec];

    let take = if opts.all_alignments { usize::MAX } else { 1 };
    for (al, s) in Alignment::DIHEDRAL.iter().filter_map(|al| is_similar(q, e, *al, tol).map(|s| (*al, s))).take(take) {
        if (s.ratio - 1.0).abs() <= tol.rel_eps {
            push(RelationKind::Congruent, al, s.residual);
        } else {
            push(RelationKind::Similar { ratio: s.ratio }, al, s.residual);
        }
    }
    for (al, h) in Alignment::rotations().iter().filter_map(|al| is_homothetic(q, e, *al, tol).map(|h| (*al, h))).take(take) {
        let ids = identify(h.center, &both, eps);
        push(RelationKind::Homothetic { center: xy(h.center), ratio: h.ratio.as_f64(), ids }, al, h.residual);
    }
    // Reflected orders matter here: isosceles trapezoids are in perspective
    // with HGFE.
    for al in &Alignment::DIHEDRAL {
        if let Some((p, res)) = is_perspective(q, e, *al, tol) {
            let ids = identify(p, &both, eps);
            push(RelationKind::Perspective { perspector: xy(p), ids }, *al, res);
        }
    }

    let (aq, ae) = (q.area(), e.area());
    if ae > T::zero() {
        let k = aq / ae;
        if (k - T::one()).abs() <= rel * k {
            push(RelationKind::AreaEqual, id, ((k - T::one()).abs() / k).as_f64());
        } else if let Some(r) = recognize(k, tol) {
            let v = T::lit(r.num as f64) / T::lit(r.den as f64);
            push(RelationKind::AreaRatio { k: r }, id, ((k - v).abs() / k).as_f64());
        }
    }
    let (pq, pe) = (q.perimeter(), e.perimeter());
    if (pq - pe).abs() <= rel * pq {
        push(RelationKind::PerimeterEqual, id, ((pq - pe).abs() / pq).as_f64());
    }

    let mut same_circle = false;
    if opts.ref_caps.cyclic && e_caps.cyclic {
        if let (Ok(cq), Ok(ce)) = (circumcircle(q, tol), circumcircle(e, tol)) {
            let dc = distance(cq.center, ce.center);
            let dr = (cq.radius - ce.radius).abs();
            let same_center = dc <= eps;
            let same_radius = dr <= rel * cq.radius.max(ce.radius);
            let res = (dc.max(dr)).as_f64() / scale;
            match (same_center, same_radius) {
                (true, true) => {
                    same_circle = true;
                    push(RelationKind::CircumcircleSame, id, res);
                }
                (false, true) => push(RelationKind::CircumcircleCongruent, id, (dr / cq.radius).as_f64()),
                (true, false) => {
                    push(RelationKind::CircumcenterSame, id, dc.as_f64() / scale);
                    if let Some(r) = recognize(ce.radius / cq.radius, tol) {
                        push(RelationKind::CircumcircleConcentric { ratio: r }, id, dc.as_f64() / scale);
                    }
                }
                (false, false) => {}
            }
        }
    }
    if opts.ref_caps.tangential && e_caps.tangential {
        if let (Ok(iq), Ok(ie)) = (incircle(q, tol), incircle(e, tol)) {
            let d = distance(iq.center, ie.center);
            if d <= eps {
                push(RelationKind::IncenterSame, id, d.as_f64() / scale);
            }
        }
    }
    for (pairing, _, res) in diagonal_point_pairings(q, e, tol) {
        push(RelationKind::DpSame { pairing }, id, res);
    }
    if !same_circle {
        if let Some(c) = common_circumconic(q, e, tol) {
            let ids = c.center.map(|p| identify(p, &both, eps)).unwrap_or_default();
            match (c.rectangular, c.center) {
                (true, Some(p)) => push(RelationKind::HyperbCommon { center: xy(p), ids }, id, c.residual),
                _ => push(RelationKind::ConicCommon { center: c.center.map(xy), ids }, id, c.residual),
            }
        }
    }

    // Same-kind pairs with a dedicated relation are reported through it.
    let dedicated = [QuadCenterKind::Circumcenter, QuadCenterKind::Incenter, QuadCenterKind::DiagonalPoint];
    for (k1, p1) in &qc.points {
        for (k2, p2) in &ec.points {
            if k1 == k2 && dedicated.contains(k1) {
                continue;
            }
            let d = distance(*p1, *p2);
            if d <= eps {
                push(RelationKind::CentersCoincide { on_ref: *k1, on_central: *k2 }, id, d.as_f64() / scale);
            }
        }
    }

    if opts.orthogonality {
        for al in Alignment::DIHEDRAL.iter().filter(|al| is_orthogonal(q, e, **al, tol)).take(take) {
            push(RelationKind::Orthogonal, *al, orthogonal_residual(q, e, *al));
        }
    }
    out
}

/// Congruence hides equal area, equal perimeter, congruent circumcircles and
/// plain similarity; homothety hides similarity and perspectivity; a shared
/// circumcircle hides the shared circumcenter and congruent circumcircles;
/// concentric circles with a recognized ratio hide the bare shared center.
pub fn apply_exclusions(rels: Vec<Relation>) -> Vec<Relation> {
    let has = |name: &str| rels.iter().any(|r| r.kind.name() == name);
    let congruent = has("congruent");
    let homothetic = has("homothetic");
    let same_circle = has("circumcircle_same");
    let concentric = has("circumcircle_concentric");
    let hidden = |r: &Relation| match r.kind.name() {
        "area_equal" | "perimeter_equal" => congruent,
        "circumcircle_congruent" => congruent || same_circle,
        "similar" => congruent || homothetic,
        "perspective" => homothetic,
        "circumcenter_same" => same_circle || concentric,
        _ => false,
    };
    rels.iter().filter(|r| !hidden(r)).cloned().collect()
}
