use cqe_catalog::*;
use cqe_geom::{circumcircle_condition, Point, Triangle};
use proptest::prelude::*;

fn triangle() -> impl Strategy<Value = Triangle> {
    prop::array::uniform6(-2.0..2.0f64).prop_filter_map("thin", |c| {
        let t = Triangle::new(Point::new(c[0], c[1]), Point::new(c[2], c[3]), Point::new(c[4], c[5])).ok()?;
        let (x, y, z) = t.angles();
        (x.min(y).min(z) > 0.25).then_some(t)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn tagged_entries_hold_on_random_triangles(t in triangle()) {
        let cat = Catalog::builtin();
        for e in cat.entries() {
            let Ok(bp) = e.function.evaluate(&t) else { continue };
            if e.tags.contains(&Tag::OnCircumcircle) {
                prop_assert!(circumcircle_condition(&bp, &t).abs() < 1e-8, "X{}", e.index);
            }
            if e.tags.contains(&Tag::EulerLine) {
                let Ok(x) = t.bary_to_cartesian(&bp) else { continue };
                let (g, o) = (t.centroid(), t.circumcenter());
                let r = (x - g).cross(o - g).abs() / ((o - g).norm() * (1.0 + (x - g).norm()));
                prop_assert!(r < 1e-8, "X{}", e.index);
            }
        }
    }
}
