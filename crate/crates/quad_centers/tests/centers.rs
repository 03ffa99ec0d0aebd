use cqe_catalog::Catalog;
use cqe_geom::{distance, midpoint, polygon_area, Circle, Hp, Line, Point, Quad, Triangle};
use cqe_numerics::Tolerance;
use cqe_quadcenters::*;
use cqe_shapes::{generate, verify_shape, Shape};

use QuadCenterKind::*;

const SEEDS: std::ops::Range<u64> = 0..25;

fn tol() -> Tolerance {
    Tolerance::default()
}

fn q(s: Shape, seed: u64) -> Quad {
    generate(s, seed).unwrap()
}

fn center(kind: QuadCenterKind, q: &Quad) -> Point {
    quad_center(kind, q, &tol()).unwrap()
}

#[test]
fn square_centroid_is_origin() {
    let sq = Quad::new([(1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)].map(|(x, y)| Point::new(x, y))).unwrap();
    for kind in QuadCenterKind::ALL {
        assert!(center(kind, &sq).norm() < 1e-14, "{kind}");
    }
}

#[test]
fn orthodiagonal_poncelet_is_diagonal_point() {
    for seed in SEEDS {
        let q = q(Shape::Orthodiagonal, seed);
        assert!(distance(center(Poncelet, &q), center(DiagonalPoint, &q)) < 1e-12);
    }
}

#[test]
fn cyclic_steiner_is_circumcenter() {
    for seed in SEEDS {
        let q = q(Shape::Cyclic, seed);
        assert!(distance(center(Steiner, &q), center(Circumcenter, &q)) < 1e-12);
    }
}

#[test]
fn nine_point_and_midray_circles_concur() {
    for s in [Shape::General, Shape::Cyclic, Shape::Kite, Shape::Trapezoid] {
        for seed in SEEDS {
            let q = q(s, seed);
            let p = center(Poncelet, &q);
            for t in q.half_triangles().unwrap() {
                assert!(t.nine_point_circle().residual(p) < 1e-12);
            }
            let st = center(Steiner, &q);
            for i in 0..4 {
                let m: Vec<Point> = (0..4).filter(|&j| j != i).map(|j| midpoint(q.v[i], q.v[j])).collect();
                assert!(Circle::through(m[0], m[1], m[2]).unwrap().residual(st) < 1e-12);
            }
        }
    }
}

#[test]
fn orthocentric_poncelet_is_undefined() {
    // All four half triangles of an orthocentric system share one nine-point
    // circle, so there is no distinguished common point.
    let q = q(Shape::Orthocentric, 1);
    let c = q.half_triangles().unwrap().map(|t| t.nine_point_circle());
    assert!(distance(c[0].center, c[3].center) < 1e-12 && (c[0].radius - c[3].radius).abs() < 1e-12);
    assert!(matches!(quad_center(Poncelet, &q, &tol()), Err(CenterError::Construction(_))));
}

#[test]
fn anticenter_lies_on_maltitudes() {
    for seed in SEEDS {
        let q = q(Shape::Cyclic, seed);
        let anti = center(Anticenter, &q);
        let o = center(Circumcenter, &q);
        assert!(distance(anti, q.vertex_centroid() * 2.0 - o) < 1e-14);
        for i in 0..4 {
            let m = midpoint(q.v[i], q.v[(i + 1) % 4]);
            let opp = Line::through(q.v[(i + 2) % 4], q.v[(i + 3) % 4]).unwrap();
            assert!(opp.perpendicular_through(m).distance(anti) < 1e-12);
        }
    }
}

#[test]
fn centroid_matches_barycentric_formula() {
    for seed in SEEDS {
        let q = q(Shape::General, seed);
        let t = Triangle::new(q.a(), q.b(), q.c()).unwrap();
        let d = t.cartesian_to_bary(q.d());
        let (p, r, s) = (d.u / d.sum(), d.v / d.sum(), d.w / d.sum());
        let m = cqe_geom::BaryPoint::new(2.0 * p + r + s, p + 2.0 * r + s, p + r + 2.0 * s);
        assert!(distance(t.bary_to_cartesian(&m).unwrap(), center(VertexCentroid, &q)) < 1e-13);
    }
}

#[test]
fn incenter_is_equidistant_from_sides() {
    for s in [Shape::Tangential, Shape::Bicentric, Shape::Rhombus] {
        for seed in SEEDS {
            let q = q(s, seed);
            let i = center(Incenter, &q);
            let d: Vec<f64> =
                (0..4).map(|k| Line::through(q.v[k], q.v[(k + 1) % 4]).unwrap().distance(i)).collect();
            for x in &d {
                assert!((x - d[0]).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn restricted_kinds_reject_general_quads() {
    let g = q(Shape::General, 3);
    for kind in [Anticenter, Circumcenter, Centrocenter, Orthocenter, Incenter] {
        assert!(matches!(quad_center(kind, &g, &tol()), Err(CenterError::Requires { .. })), "{kind}");
    }
    assert_eq!(Caps::of(&g, &tol()), Caps::default());
    let b = q(Shape::Bicentric, 3);
    // ponce and stein are listed as anti and o on cyclic quads.
    assert_eq!(Caps::of(&b, &tol()).kinds().count(), 7);
    assert_eq!(Caps::of(&q(Shape::Cyclic, 3), &tol()).kinds().count(), 6);
    assert_eq!(Caps::of(&q(Shape::Tangential, 3), &tol()).kinds().count(), 5);
}

#[test]
fn centrocenter_and_orthocenter_circles_close() {
    for seed in SEEDS {
        let q = q(Shape::Cyclic, seed);
        for kind in [Centrocenter, Orthocenter] {
            let c = center(kind, &q);
            let pts: Vec<Point> = q
                .half_triangles()
                .unwrap()
                .iter()
                .map(|t| if kind == Centrocenter { t.centroid() } else { t.orthocenter() })
                .collect();
            let r0 = distance(c, pts[0]);
            assert!(pts.iter().all(|p| (distance(c, *p) - r0).abs() < 1e-12));
        }
    }
}

#[test]
fn high_precision_poncelet() {
    let q: Quad<Hp> = generate(Shape::General, 11).unwrap();
    let tol = Tolerance::high_precision();
    let p = quad_center(Poncelet, &q, &tol).unwrap();
    for t in q.half_triangles().unwrap() {
        assert!(t.nine_point_circle().residual(p).to_f64() < 1e-30);
    }
    let st = quad_center(Steiner, &q, &tol).unwrap();
    assert!(st.is_finite());
}

#[test]
fn half_triangles_order_and_area_split() {
    for seed in SEEDS {
        let q = q(Shape::General, seed);
        let t = q.half_triangles().unwrap();
        for (i, tri) in t.iter().enumerate() {
            assert!(!tri.vertices().contains(&q.v[i]));
            // Each half triangle keeps one full diagonal: AC or BD.
            let diag = if i % 2 == 0 { [q.v[1], q.v[3]] } else { [q.v[0], q.v[2]] };
            assert!(diag.iter().all(|p| tri.vertices().contains(p)));
        }
        assert!((q.area() - t[3].s() / 2.0 - t[1].s() / 2.0).abs() < 1e-14);
    }
}

#[test]
fn centroid_central_quad_has_ratio_three() {
    let cat = Catalog::builtin();
    let x2 = &cat.get(2).unwrap().function;
    for seed in SEEDS {
        let q = q(Shape::General, seed);
        let e = central_quad_of(&q, x2).unwrap();
        let (sq, se) = (q.sides(), e.sides());
        for i in 0..4 {
            assert!((sq[i] / se[i] - 3.0).abs() < 1e-12);
        }
        assert!((q.area() / e.area() - 9.0).abs() < 1e-11);
    }
}

#[test]
fn orthocenter_central_quad_of_rectangle_is_rectangle() {
    let cat = Catalog::builtin();
    for seed in SEEDS {
        let r = q(Shape::Rectangle, seed);
        let e = central_quad_of(&r, &cat.get(4).unwrap().function).unwrap();
        assert!(verify_shape(&e, Shape::Rectangle).passes(1e-10));
    }
}

#[test]
fn incenter_central_quad_of_square_is_concentric_square() {
    let cat = Catalog::builtin();
    let sq = q(Shape::Square, 5);
    let e = central_quad_of(&sq, &cat.get(1).unwrap().function).unwrap();
    assert!(verify_shape(&e, Shape::Square).passes(1e-10));
    assert!(distance(e.vertex_centroid(), sq.vertex_centroid()) < 1e-12);
    assert!(polygon_area(&e.v).abs() < sq.area());
}

#[test]
fn undefined_center_is_a_skip_signal() {
    let sq = q(Shape::Square, 5);
    // X3 of a right triangle is the hypotenuse midpoint, so every E..H sits at
    // the square's center and the quadrilateral collapses.
    let cat = Catalog::builtin();
    let err = central_quad_of(&sq, &cat.get(3).unwrap().function).unwrap_err();
    assert!(matches!(err, CentralError::Degenerate(_)));
    let err = central_quad(&sq, |_t| Err::<Point, _>("no")).unwrap_err();
    assert!(matches!(err, CentralError::Undefined { triangle: 0, .. }));
}

#[test]
fn kind_names_round_trip() {
    for k in QuadCenterKind::ALL {
        assert_eq!(k.symbol().parse::<QuadCenterKind>().unwrap(), k);
    }
    assert_eq!("QA-P2".parse::<QuadCenterKind>().unwrap(), Poncelet);
    assert!("miquel".parse::<QuadCenterKind>().is_err());
}
