use cqe_dsl::*;
use cqe_geom::{distance, Point, Triangle};

fn p(x: f64, y: f64) -> Point {
    Point::new(x, y)
}

fn right() -> Triangle {
    Triangle::new(p(0.0, 0.0), p(4.0, 0.0), p(0.0, 3.0)).unwrap()
}

#[test]
fn constant_barycentric_is_centroid() {
    let f = parse("1", CoordKind::Barycentric).unwrap();
    let t = right();
    assert!(distance(f.point(&t).unwrap(), t.centroid()) < 1e-15);
    assert_eq!(f.homogeneity_degree, Some(0));
}

#[test]
fn incenter_of_right_triangle() {
    // Trilinears 1:1:1, barycentrics a:b:c.
    let t = right();
    let tri = parse("1", CoordKind::Trilinear).unwrap();
    let bar = parse("a", CoordKind::Barycentric).unwrap();
    assert!(distance(tri.point(&t).unwrap(), p(1.0, 1.0)) < 1e-14);
    assert!(distance(bar.point(&t).unwrap(), p(1.0, 1.0)) < 1e-14);
    // "a" read as trilinears is the symmedian point (a² : b² : c²).
    let sym = parse("a", CoordKind::Trilinear).unwrap();
    let l = parse("a^2", CoordKind::Barycentric).unwrap();
    assert!(distance(sym.point(&t).unwrap(), l.point(&t).unwrap()) < 1e-14);
}

#[test]
fn orthocenter_of_equilateral_is_centroid() {
    let t = Triangle::new(p(0.0, 0.0), p(1.0, 0.0), p(0.5, 3f64.sqrt() / 2.0)).unwrap();
    let h = parse("SB*SC", CoordKind::Barycentric).unwrap();
    assert!(distance(h.point(&t).unwrap(), t.centroid()) < 1e-14);
    let h2 = parse("sec(A)", CoordKind::Trilinear).unwrap();
    assert!(distance(h2.point(&t).unwrap(), t.centroid()) < 1e-14);
}

#[test]
fn orthocenter_matches_construction() {
    let t = Triangle::new(p(0.1, 0.2), p(3.0, -0.4), p(1.3, 2.2)).unwrap();
    let h = parse("SB*SC", CoordKind::Barycentric).unwrap();
    assert!(distance(h.point(&t).unwrap(), t.orthocenter()) < 1e-12);
    let o = parse("a^2*SA", CoordKind::Barycentric).unwrap();
    assert!(distance(o.point(&t).unwrap(), t.circumcenter()) < 1e-12);
}

#[test]
fn family_examples_parse() {
    let cos = parse("cos(B)*cos(C) + k*cos(A)", CoordKind::Trilinear).unwrap();
    assert!(cos.has_param());
    assert_eq!(cos.evaluate(&right()).unwrap_err(), DslError::UnboundParameter);
    // k = 0 gives the orthocenter (trilinears sec A).
    let t = Triangle::new(p(0.1, 0.2), p(3.0, -0.4), p(1.3, 2.2)).unwrap();
    let h = cos.bind(0.0).unwrap();
    assert!(distance(h.point(&t).unwrap(), t.orthocenter()) < 1e-12);
    let harm = parse("a*(k*(a^2-b^2-c^2)-S)", CoordKind::Barycentric).unwrap();
    assert_eq!(harm.bind(2.0).unwrap().homogeneity_degree, Some(3));
}

#[test]
fn symmetry_validation() {
    assert_eq!(parse("b", CoordKind::Barycentric).unwrap_err(), DslError::NotSymmetric);
    assert!(parse("b + c", CoordKind::Barycentric).is_ok());
    // Antisymmetric in b, c: a global sign is allowed.
    assert!(parse("a/(b-c)", CoordKind::Barycentric).is_ok());
    assert_eq!(parse("b - 2*c", CoordKind::Barycentric).unwrap_err(), DslError::NotSymmetric);
}

#[test]
fn homogeneity_validation() {
    assert_eq!(parse("a + 1", CoordKind::Barycentric).unwrap_err(), DslError::NotHomogeneous);
    assert_eq!(parse("a^2 + S", CoordKind::Barycentric).unwrap().homogeneity_degree, Some(2));
    assert_eq!(parse("sqrt(a)", CoordKind::Barycentric).unwrap().homogeneity_degree, None);
    assert_eq!(parse("1/(b+c-a)", CoordKind::Barycentric).unwrap().homogeneity_degree, Some(-1));
}

#[test]
fn syntax_errors_report_position() {
    match parse_expr("a + * b") {
        Err(DslError::Syntax { pos, .. }) => assert_eq!(pos, 4),
        e => panic!("{e:?}"),
    }
    assert_eq!(parse_expr("a + x"), Err(DslError::UnknownSymbol { pos: 4, name: "x".into() }));
    assert_eq!(parse_expr("a^b"), Err(DslError::NonConstantExponent { pos: 2 }));
    assert!(matches!(parse_expr("2 a"), Err(DslError::Syntax { .. })));
    assert!(matches!(parse_expr("a (b)"), Err(DslError::Syntax { .. })));
    assert!(matches!(parse_expr("cos(A"), Err(DslError::Syntax { .. })));
    assert!(matches!(parse_expr("a $ b"), Err(DslError::Syntax { pos: 2, .. })));
}

#[test]
fn unary_minus_binds_looser_than_power() {
    let t = right();
    let e = parse_expr("-a^2").unwrap();
    let ctx = TriangleContext::from_triangle(&t);
    assert_eq!(eval_expr(&e, &ctx, None).unwrap(), -(ctx.a * ctx.a));
    assert_eq!(e.to_string(), "-a^2");
    assert_eq!(parse_expr("(-a)^2").unwrap().to_string(), "(-a)^2");
    assert_eq!(parse_expr("a-(b-c)").unwrap().to_string(), "a-(b-c)");
    assert_eq!(parse_expr("a^(1/2)").unwrap().to_string(), "a^(1/2)");
    assert_eq!(parse_expr("a^-1").unwrap().to_string(), "a^(-1)");
}

#[test]
fn undefined_centers_are_reported() {
    // 1/(b-c) on an isosceles triangle divides by zero.
    let iso = Triangle::new(p(0.0, 0.0), p(2.0, 0.0), p(1.0, 3.0)).unwrap();
    let f = parse("a/(b-c)", CoordKind::Barycentric).unwrap();
    assert!(matches!(f.evaluate(&iso), Err(DslError::Undefined(_))));
    // Tangent at a right angle.
    let g = parse("tan(A)", CoordKind::Trilinear).unwrap();
    assert!(matches!(g.evaluate(&right()), Err(DslError::Undefined(_))));
}

#[test]
fn tokenizer_positions() {
    let toks = tokenize("SA*2.5e1").unwrap();
    assert_eq!(toks.len(), 3);
    assert_eq!(toks[0].kind, TokenKind::Ident("SA".into()));
    assert_eq!(toks[2].kind, TokenKind::Num(25.0));
    assert_eq!(toks[2].pos, 3);
}
