use crate::{verify_shape, Shape, ShapeError, GENERATION_EPS};
use cqe_geom::{BaryPoint, Circle, Line, Point, Quad, Triangle};
use cqe_numerics::Real;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{PI, TAU};

const ATTEMPTS: usize = 32;
/// Parameter draws per attempt before the attempt counts as failed.
const DRAWS: usize = 200;
/// Smallest interior angle of the reference triangle for the non-convex shapes.
const MIN_ANGLE: f64 = 10.0 * PI / 180.0;

/// A sample of `shape`, deterministic in `seed`. Parameters are drawn in f64
/// and the construction runs in `T`, so high-precision samples satisfy their
/// constraints to the precision of `T`.
pub fn generate<T: Real>(shape: Shape, seed: u64) -> Result<Quad<T>, ShapeError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ATTEMPTS {
        let Some(q) = (0..DRAWS).find_map(|_| draw::<T>(shape, &mut rng)) else { continue };
        let q = place(q, shape, &mut rng);
        if verify_shape(&q, shape).passes(GENERATION_EPS) {
            return Ok(q);
        }
    }
    Err(ShapeError::GenerationFailed { shape: shape.name(), attempts: ATTEMPTS })
}

/// One parameter draw; `None` when it misses the shape's validity region.
fn draw<T: Real>(shape: Shape, rng: &mut ChaCha8Rng) -> Option<Quad<T>> {
    let q = Quad::new(construct::<T>(shape, rng)?).ok()?;
    let ok = if shape.is_convex_family() { q.is_convex() && fat(&q) } else { min_angle_ok(&q) };
    ok.then_some(q)
}

/// Rejects slivers: every vertex angle at least 0.15 rad.
fn fat<T: Real>(q: &Quad<T>) -> bool {
    q.angles().iter().all(|a| a.as_f64() > 0.15)
}

fn min_angle_ok<T: Real>(q: &Quad<T>) -> bool {
    let Ok(t) = Triangle::new(q.a(), q.b(), q.c()) else { return false };
    let (x, y, z) = t.angles();
    x.min(y).min(z).as_f64() >= MIN_ANGLE
}

/// Counterclockwise orientation (by reflection, which keeps the labels),
/// normalization, then a random rotation and translation.
fn place<T: Real>(q: Quad<T>, shape: Shape, rng: &mut ChaCha8Rng) -> Quad<T> {
    let mut q = q;
    if q.signed_area() < T::zero() {
        q = q.map(|p| Point::new(p.x, -p.y));
    }
    let (center, scale) = if shape.is_cyclic_family() {
        let c = Circle::through(q.a(), q.b(), q.c()).expect("non-degenerate");
        (c.center, c.radius)
    } else {
        let (p, d) = q.diagonals();
        (q.vertex_centroid(), p.max(d))
    };
    let angle = T::lit(rng.gen_range(0.0..TAU));
    let shift = Point::from_f64(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    q.map(|p| ((p - center) / scale).rotated(angle) + shift)
}

fn l<T: Real>(x: f64) -> T {
    T::lit(x)
}

fn polar<T: Real>(r: T, th: T) -> Point<T> {
    Point::new(r * th.cos(), r * th.sin())
}

fn sorted_angles(rng: &mut ChaCha8Rng, min_gap: f64, max_gap: f64) -> Option<[f64; 4]> {
    let mut th: [f64; 4] = std::array::from_fn(|_| rng.gen_range(0.0..TAU));
    th.sort_by(f64::total_cmp);
    let gaps = [th[1] - th[0], th[2] - th[1], th[3] - th[2], th[0] + TAU - th[3]];
    gaps.iter().all(|g| *g >= min_gap && *g <= max_gap).then_some(th)
}

fn circle_pts<T: Real>(th: [f64; 4]) -> [Point<T>; 4] {
    th.map(|t| polar(T::one(), l(t)))
}

/// Root of `f` on [lo, hi] by bisection to the precision of `T`.
fn bisect<T: Real>(f: impl Fn(T) -> T, lo: T, hi: T) -> Option<T> {
    let (mut lo, mut hi) = (lo, hi);
    let (flo, fhi) = (f(lo), f(hi));
    if flo == T::zero() {
        return Some(lo);
    }
    if (flo > T::zero()) == (fhi > T::zero()) {
        return None;
    }
    let lo_pos = flo > T::zero();
    for _ in 0..400 {
        let mid = (lo + hi) * T::half();
        if mid == lo || mid == hi {
            break;
        }
        let fm = f(mid);
        if fm == T::zero() {
            return Some(mid);
        }
        if (fm > T::zero()) == lo_pos {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some((lo + hi) * T::half())
}

/// Random triangle ABC with angles bounded away from 0 and π.
fn triangle<T: Real>(rng: &mut ChaCha8Rng) -> Option<[Point<T>; 3]> {
    let v: [Point<T>; 3] = std::array::from_fn(|_| Point::from_f64(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
    let t = Triangle::new(v[0], v[1], v[2]).ok()?;
    let (x, y, z) = t.angles();
    (x.min(y).min(z).as_f64() > 0.3).then_some(v)
}

/// `d`, provided it lies strictly on the other side of `line` from `b`.
fn opposite<T: Real>(line: &Line<T>, b: Point<T>, d: Point<T>) -> Option<Point<T>> {
    (line.eval(b) * line.eval(d) < T::zero()).then_some(d)
}

fn construct<T: Real>(shape: Shape, rng: &mut ChaCha8Rng) -> Option<[Point<T>; 4]> {
    match shape {
        Shape::General => {
            let th = sorted_angles(rng, 0.35, TAU)?;
            Some(std::array::from_fn(|i| polar(l(rng.gen_range(0.6..1.4)), l(th[i]))))
        }
        Shape::Cyclic => Some(circle_pts(sorted_angles(rng, 0.35, TAU)?)),
        Shape::Tangential => {
            let t = sorted_angles(rng, 0.3, PI - 0.3)?;
            Some(std::array::from_fn(|i| {
                // Vertex between tangency points t[i-1] and t[i].
                let (t0, t1) = if i == 0 { (t[3] - TAU, t[0]) } else { (t[i - 1], t[i]) };
                let mid: T = l::<T>(t0 + t1) * T::half();
                let half_gap: T = l::<T>(t1 - t0) * T::half();
                polar(T::one() / half_gap.cos(), mid)
            }))
        }
        Shape::Extangential => {
            let [a, b, c] = triangle::<T>(rng)?;
            // D on the ellipse with foci A, C and focal sum |AB| + |BC|.
            let sum = cqe_geom::distance(a, b) + cqe_geom::distance(b, c);
            let m = cqe_geom::midpoint(a, c);
            let f = cqe_geom::distance(a, c) * T::half();
            let major = sum * T::half();
            let minor = (major * major - f * f).sqrt();
            let u = (c - a) / (f * T::two());
            let phi: T = l(rng.gen_range(0.0..TAU));
            let d = m + u * (major * phi.cos()) + u.perp() * (minor * phi.sin());
            Some([a, b, c, opposite(&Line::through(a, c).ok()?, b, d)?])
        }
        Shape::Parallelogram => {
            let t: T = l(rng.gen_range(0.5..2.6));
            let r: T = l(rng.gen_range(0.4..1.6));
            let (a, b) = (Point::origin(), Point::new(T::one(), T::zero()));
            let c = b + polar(r, t);
            Some([a, b, c, a + c - b])
        }
        Shape::EqualProdOpp => {
            let [a, b, c] = triangle::<T>(rng)?;
            // |DC|/|DA| = |BC|/|AB|: an Apollonius circle of A and C.
            let k = cqe_geom::distance(b, c) / cqe_geom::distance(a, b);
            if (k - T::one()).abs() < l(0.05) {
                return None;
            }
            let k2 = k * k;
            let center = (c - a * k2) / (T::one() - k2);
            let radius = k * cqe_geom::distance(a, c) / (T::one() - k2).abs();
            let d = center + polar(radius, l(rng.gen_range(0.0..TAU)));
            Some([a, b, c, opposite(&Line::through(a, c).ok()?, b, d)?])
        }
        Shape::EqualProdAdj => {
            let [a, b, c] = triangle::<T>(rng)?;
            // |DC|·|DA| = |AB|·|BC| along a ray from the midpoint of AC.
            let target = cqe_geom::distance(a, b) * cqe_geom::distance(b, c);
            let m = cqe_geom::midpoint(a, c);
            let dir = polar(T::one(), l(rng.gen_range(0.0..TAU)));
            let g = |t: T| {
                let d = m + dir * t;
                cqe_geom::distance(d, c) * cqe_geom::distance(d, a) - target
            };
            let hi = (target.sqrt() + cqe_geom::distance(a, c)) * T::two();
            let t = bisect(g, T::zero(), hi)?;
            Some([a, b, c, opposite(&Line::through(a, c).ok()?, b, m + dir * t)?])
        }
        Shape::Orthodiagonal => {
            let x: [f64; 4] = std::array::from_fn(|_| rng.gen_range(0.3..1.5));
            Some([
                Point::new(l(-x[0]), T::zero()),
                Point::new(T::zero(), l(-x[2])),
                Point::new(l(x[1]), T::zero()),
                Point::new(T::zero(), l(x[3])),
            ])
        }
        Shape::Equidiagonal => {
            let [a, b, c] = triangle::<T>(rng)?;
            let d = b + polar(cqe_geom::distance(a, c), l(rng.gen_range(0.0..TAU)));
            Some([a, b, c, d])
        }
        Shape::Pythagorean => {
            let [a, b, c] = triangle::<T>(rng)?;
            // |DC|² + |DA|² = 2|DM|² + |AC|²/2 with M the midpoint of AC.
            let m = cqe_geom::midpoint(a, c);
            let (ab, bc, ac) = (cqe_geom::distance(a, b), cqe_geom::distance(b, c), cqe_geom::distance(a, c));
            let r2 = (ab * ab + bc * bc) * T::half() - ac * ac / l(4.0);
            if r2 <= T::zero() {
                return None;
            }
            let d = m + polar(r2.sqrt(), l(rng.gen_range(0.0..TAU)));
            Some([a, b, c, d])
        }
        Shape::Kite => {
            let [u, v, w] = [0; 3].map(|_| rng.gen_range(0.3..1.5));
            let t = rng.gen_range(-u + 0.1..v - 0.1);
            Some(kite(u, v, w, t))
        }
        Shape::Trapezoid => {
            let (b1, b2) = (rng.gen_range(-0.5..0.5), rng.gen_range(-0.5..0.5));
            let (l1, l2) = (rng.gen_range(0.4..1.5), rng.gen_range(0.4..1.5));
            let h = rng.gen_range(0.4..1.5);
            Some(trapezoid(b1, l1, b2, l2, l(h)))
        }
        Shape::Rhombus => {
            let t: T = l(rng.gen_range(0.5..2.6));
            let (a, b, d) = (Point::origin(), Point::new(T::one(), T::zero()), polar(T::one(), t));
            Some([a, b, b + d, d])
        }
        Shape::Rectangle => {
            let w: T = l(rng.gen_range(0.4..2.5));
            Some([Point::origin(), Point::new(w, T::zero()), Point::new(w, T::one()), Point::new(T::zero(), T::one())])
        }
        Shape::Square => Some([Point::origin(), Point::from_f64(1.0, 0.0), Point::from_f64(1.0, 1.0), Point::from_f64(0.0, 1.0)]),
        Shape::Hjelmslev => {
            // BD is a diameter; A and C on opposite arcs.
            let ta = rng.gen_range(0.3..PI - 0.3);
            let tc = rng.gen_range(PI + 0.3..TAU - 0.3);
            Some(circle_pts([ta, PI, tc, 0.0]))
        }
        Shape::IsoscelesTrapezoid => {
            let (w1, w2): (f64, f64) = (rng.gen_range(0.3..1.5), rng.gen_range(0.3..1.5));
            if (w1 - w2).abs() < 0.05 {
                return None;
            }
            Some(iso_trapezoid(w1, w2, l(rng.gen_range(0.4..1.5))))
        }
        Shape::Ap => {
            let a: T = l(rng.gen_range(0.4..1.0));
            let delta: T = l(rng.gen_range(0.05..0.3));
            let [s0, s1, s2, s3] = [0.0, 1.0, 2.0, 3.0].map(|k: f64| a + delta * l(k));
            let pa = Point::origin();
            let pb = Point::new(s0, T::zero());
            let pc = pb + polar(s1, l(rng.gen_range(1.2..2.6)));
            let c1 = Circle::new(pc, s2).ok()?;
            let c2 = Circle::new(pa, s3).ok()?;
            let [d1, d2] = c1.intersect(&c2, 1e-12).ok()?;
            let line = Line::through(pa, pc).ok()?;
            let d = opposite(&line, pb, d1).or_else(|| opposite(&line, pb, d2))?;
            Some([pa, pb, pc, d])
        }
        Shape::Bicentric => bicentric(rng),
        Shape::Exbicentric => {
            let th = sorted_angles(rng, 0.3, TAU)?;
            let [a, b, c]: [Point<T>; 3] = [0, 1, 2].map(|i| polar(T::one(), l(th[i])));
            let target = cqe_geom::distance(a, b) + cqe_geom::distance(b, c);
            // D on the arc from C to A that avoids B.
            let (t0, t1): (T, T) = (l(th[2]), l(th[0] + TAU));
            let g = |t: T| {
                let d = polar(T::one(), t);
                cqe_geom::distance(c, d) + cqe_geom::distance(d, a) - target
            };
            let mid = (t0 + t1) * T::half();
            let t = if rng.gen_bool(0.5) { bisect(g, t0, mid)? } else { bisect(g, mid, t1)? };
            Some([a, b, c, polar(T::one(), t)])
        }
        Shape::BicentricTrapezoid => {
            let (w1, w2): (f64, f64) = (rng.gen_range(0.2..1.2), rng.gen_range(0.2..1.2));
            if (w1 - w2).abs() < 0.05 {
                return None;
            }
            let h = (l::<T>(w1) * l(w2)).sqrt() * T::two();
            Some(iso_trapezoid(w1, w2, h))
        }
        Shape::CyclicOrthodiagonal => {
            let p = Point::from_f64(rng.gen_range(-0.5..0.5), rng.gen_range(-0.5..0.5));
            let t: T = l(rng.gen_range(0.0..PI));
            let (u, v) = (polar(T::one(), t), polar(T::one(), t).perp());
            let chord = |d: Point<T>| {
                let b = p.dot(d);
                let s = (b * b - p.norm2() + T::one()).sqrt();
                (p + d * (-b - s), p + d * (-b + s))
            };
            let ((a, c), (b, d)) = (chord(u), chord(v));
            Some([a, b, c, d])
        }
        Shape::EquidiagonalKite => {
            let (u, v) = (rng.gen_range(0.3..1.5), rng.gen_range(0.3..1.5));
            let t = rng.gen_range(-u + 0.1..v - 0.1);
            Some(kite(u, v, (u + v) / 2.0, t))
        }
        Shape::EqOrtho => {
            let (s, t) = (rng.gen_range(0.15..0.85), rng.gen_range(0.15..0.85));
            Some([
                Point::new(l(-s), T::zero()),
                Point::new(T::zero(), l(-t)),
                Point::new(T::one() - l(s), T::zero()),
                Point::new(T::zero(), T::one() - l(t)),
            ])
        }
        Shape::EqOrthoTrapezoid => {
            let (w1, w2): (f64, f64) = (rng.gen_range(0.2..1.2), rng.gen_range(0.2..1.2));
            if (w1 - w2).abs() < 0.05 {
                return None;
            }
            Some(iso_trapezoid(w1, w2, l::<T>(w1) + l(w2)))
        }
        Shape::Harmonic => {
            let th = sorted_angles(rng, 0.35, TAU)?;
            let [a, b, c]: [Point<T>; 3] = [0, 1, 2].map(|i| polar(T::one(), l(th[i])));
            let t = Triangle::new(a, b, c).ok()?;
            let (sa, sb, sc) = t.sides();
            let d = t.bary_to_cartesian(&BaryPoint::new(T::two() * sa * sa, -sb * sb, T::two() * sc * sc)).ok()?;
            Some([a, b, c, d])
        }
        Shape::OrthodiagonalTrapezoid => {
            let (x1, x2) = (rng.gen_range(-0.5..0.5), rng.gen_range(-0.5..0.5));
            let (l1, l2) = (rng.gen_range(0.4..1.5), rng.gen_range(0.4..1.5));
            let prod = (x2 + l2 - x1) * (x1 + l1 - x2);
            if prod <= 0.01 {
                return None;
            }
            let h = (l::<T>(x2) + l(l2) - l(x1)) * (l::<T>(x1) + l(l1) - l(x2));
            Some(trapezoid(x1, l1, x2, l2, h.sqrt()))
        }
        Shape::TangentialTrapezoid => {
            // Bases y = ±1 tangent to the unit circle; legs tangent at f1 and f2.
            let f1: T = l(PI + rng.gen_range(-0.8..0.8));
            let f2: T = l(rng.gen_range(-0.8..0.8));
            let at = |f: T, y: T| Point::new((T::one() - y * f.sin()) / f.cos(), y);
            let one = T::one();
            Some([at(f1, one), at(f1, -one), at(f2, -one), at(f2, one)])
        }
        Shape::Orthoptic => {
            // AB ⊥ CD and BC ⊥ AD: two perpendicular direction pairs.
            let th: T = l(rng.gen_range(0.0..TAU));
            let ph: T = th + l(rng.gen_range(0.4..PI - 0.4));
            let a = Point::origin();
            let b = a + polar(l(rng.gen_range(0.5..1.5)), th);
            let c = b + polar(l(rng.gen_range(0.5..1.5)), ph);
            let cd = Line::point_dir(c, polar(T::one(), th).perp()).ok()?;
            let ad = Line::point_dir(a, polar(T::one(), ph).perp()).ok()?;
            Some([a, b, c, cd.intersect(&ad).ok()?])
        }
        Shape::Orthocentric => {
            let [a, b, c] = triangle::<T>(rng)?;
            let t = Triangle::new(a, b, c).ok()?;
            Some([a, b, c, t.orthocenter()])
        }
    }
}

/// A = (-u, 0), C = (v, 0); D is the reflection of B = (t, -w) in AC.
fn kite<T: Real>(u: f64, v: f64, w: f64, t: f64) -> [Point<T>; 4] {
    [Point::from_f64(-u, 0.0), Point::from_f64(t, -w), Point::from_f64(v, 0.0), Point::from_f64(t, w)]
}

/// AD ∥ BC: A, D on y = h and B, C on y = 0.
fn trapezoid<T: Real>(b1: f64, l1: f64, b2: f64, l2: f64, h: T) -> [Point<T>; 4] {
    [
        Point::new(l(b1), h),
        Point::from_f64(b2, 0.0),
        Point::new(l::<T>(b2) + l(l2), T::zero()),
        Point::new(l::<T>(b1) + l(l1), h),
    ]
}

/// Symmetric about the y axis, AD ∥ BC, AB = CD.
fn iso_trapezoid<T: Real>(w1: f64, w2: f64, h: T) -> [Point<T>; 4] {
    [
        Point::new(l(-w1), h),
        Point::from_f64(-w2, 0.0),
        Point::from_f64(w2, 0.0),
        Point::new(l(w1), h),
    ]
}

/// Poncelet chain between the unit circle and an incircle centered at
/// (x, 0) whose radius satisfies Fuss's relation.
fn bicentric<T: Real>(rng: &mut ChaCha8Rng) -> Option<[Point<T>; 4]> {
    let x: T = l(rng.gen_range(0.0..0.4));
    let one = T::one();
    let r = (one / ((one - x).powi(-2) + (one + x).powi(-2))).sqrt();
    let inc = Point::new(x, T::zero());
    let mut p = polar(one, l(rng.gen_range(0.0..TAU)));
    let mut out = [p; 4];
    for slot in out.iter_mut().skip(1) {
        let to_c = inc - p;
        let dist = to_c.norm();
        let base = to_c.y.atan2(to_c.x);
        let dir = polar(one, base + (r / dist).asin());
        // Second intersection of p + s·dir with the unit circle.
        let s = -T::two() * p.dot(dir);
        p = p + dir * s;
        *slot = p;
    }
    Some(out)
}
