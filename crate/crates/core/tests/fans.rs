use proptest::prelude::*;
use syzlab::fan::{fujita_check, minkowski_point_sum_surjective, resolve_cone, Fan, ToricDivisor};
use syzlab::lattice::{extended_gcd, pt, Hull, LatticePoint, LatticePolygon, MoveOut};

fn polygon(span: i64) -> impl Strategy<Value = LatticePolygon> {
    prop::collection::vec((-span..=span, -span..=span), 3..10)
        .prop_filter_map("degenerate hull", |pts| {
            LatticePolygon::hull_of(pts.into_iter().map(|(x, y)| pt(x, y))).ok()
        })
}

fn primitive(span: i64) -> impl Strategy<Value = LatticePoint> {
    (-span..=span, -span..=span)
        .prop_map(|(x, y)| pt(x, y))
        .prop_filter("primitive", |p| p.is_primitive())
}

/// Walks from `u` towards `v`: the next ray is the lattice point `q` of the
/// cone with `det(cur, q) = 1` closest in angle to `v`.
fn greedy_walk(u: LatticePoint, v: LatticePoint) -> Vec<LatticePoint> {
    let mut out = Vec::new();
    let mut cur = u;
    while cur.det(v) != 1 {
        let (g, s, t) = extended_gcd(cur.x, cur.y);
        let q0 = pt(-t * g, s * g);
        assert_eq!(cur.det(q0), 1);
        // det(q0 + k·cur, v) = det(q0, v) + k·det(cur, v); smallest k keeping it ≥ 0
        let d = cur.det(v);
        let k = (-q0.det(v)).div_euclid(d) + i64::from((-q0.det(v)).rem_euclid(d) != 0);
        let q = q0 + k * cur;
        out.push(q);
        cur = q;
    }
    out
}

fn anticanonical_points(fan: &Fan) -> Vec<LatticePoint> {
    ToricDivisor::anticanonical(fan).polygon().lattice_points()
}

fn interior(p: &LatticePolygon) -> Option<LatticePolygon> {
    match p.interior_hull() {
        Hull::Polygon(q) => Some(q),
        _ => None,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cone_resolution_matches_greedy_walk(u in primitive(9), v in primitive(9)) {
        prop_assume!(u.det(v) > 0);
        let rays = resolve_cone(u, v);
        prop_assert_eq!(rays.clone(), greedy_walk(u, v));
        let chain: Vec<LatticePoint> = std::iter::once(u).chain(rays.iter().copied()).chain([v]).collect();
        for w in chain.windows(2) {
            prop_assert_eq!(w[0].det(w[1]), 1);
        }
        // minimality: every inserted ray has self-intersection ≤ -2
        for w in chain.windows(3) {
            let sum = w[0] + w[2];
            prop_assert_eq!(sum.det(w[1]), 0);
            prop_assert!(sum.content() >= 2 * w[1].content(), "{:?}", w);
        }
    }

    #[test]
    fn resolution_is_smooth_and_minimal(p in polygon(5)) {
        let res = Fan::normal_fan(&p).minimal_resolution();
        prop_assert!(res.refined.is_smooth());
        prop_assert!(res.is_minimal());
        for r in &res.inserted {
            let (a, b) = res.provenance[r];
            prop_assert!(a.det(*r) > 0 && r.det(b) > 0);
        }
        let rays = res.refined.rays();
        for r in &res.inserted {
            let without: Vec<LatticePoint> = rays.iter().copied().filter(|q| q != r).collect();
            prop_assert!(!Fan::new(without).map(|f| f.is_smooth()).unwrap_or(false));
        }
    }

    #[test]
    fn divisor_polygons_on_the_resolution(p in polygon(5)) {
        prop_assume!(interior(&p).is_some());
        let report = fujita_check(&p).unwrap();
        prop_assert_eq!(report.p_d_f, p.clone());
        prop_assert_eq!(Some(report.p_l), interior(&p));
    }

    #[test]
    fn gwf_passes_to_resolution(p in polygon(5)) {
        let fan = Fan::normal_fan(&p);
        if fan.is_gorenstein_weak_fano() {
            let refined = fan.minimal_resolution().refined;
            prop_assert!(refined.is_gorenstein_weak_fano());
            prop_assert_eq!(ToricDivisor::anticanonical(&refined).polygon(), ToricDivisor::anticanonical(&fan).polygon());
        }
    }

    #[test]
    fn gwf_passes_to_interior(p in polygon(6)) {
        let Some(inner) = interior(&p) else { return Ok(()) };
        let inner_fan = Fan::normal_fan(&inner);
        if Fan::normal_fan(&p).is_gorenstein_weak_fano() {
            prop_assert!(inner_fan.is_gorenstein_weak_fano());
        }
        if let MoveOut::Lattice(max) = inner.move_out() {
            let max_fan = Fan::normal_fan(&max);
            prop_assert_eq!(inner_fan.is_gorenstein_weak_fano(), max_fan.is_gorenstein_weak_fano());
            if inner_fan.is_gorenstein_weak_fano() {
                prop_assert_eq!(max_fan, inner_fan);
            }
        }
    }

    #[test]
    fn anticanonical_sum_covers_gwf_polygons(p in polygon(5)) {
        let Some(inner) = interior(&p) else { return Ok(()) };
        if Fan::normal_fan(&inner).is_gorenstein_weak_fano() {
            let MoveOut::Lattice(max) = inner.move_out() else { panic!("interior polygon must move out") };
            let anti = anticanonical_points(&Fan::normal_fan(&inner));
            prop_assert!(minkowski_point_sum_surjective(&anti, &inner.lattice_points(), &max.lattice_points()));
        }
    }
}

#[test]
fn cone_examples() {
    assert!(resolve_cone(pt(1, 0), pt(0, 1)).is_empty());
    assert_eq!(resolve_cone(pt(1, 0), pt(1, 2)), vec![pt(1, 1)]);
    assert_eq!(resolve_cone(pt(-1, -2), pt(1, 0)), vec![pt(0, -1)]);
}

#[test]
fn minkowski_examples() {
    let five = LatticePolygon::sigma(5);
    let inner = interior(&five).unwrap();
    let p2 = Fan::normal_fan(&LatticePolygon::sigma(1));
    assert!(minkowski_point_sum_surjective(
        &anticanonical_points(&p2),
        &inner.lattice_points(),
        &five.lattice_points()
    ));
    let square = LatticePolygon::rectangle(0, 4, 0, 4);
    let anti = anticanonical_points(&Fan::normal_fan(&square));
    assert_eq!(
        anti,
        LatticePolygon::rectangle(-1, 1, -1, 1).lattice_points()
    );
    let inner = LatticePolygon::rectangle(1, 3, 1, 3);
    assert!(minkowski_point_sum_surjective(
        &anti,
        &inner.lattice_points(),
        &square.lattice_points()
    ));
    assert!(minkowski_point_sum_surjective(
        &[pt(0, 0)],
        &inner.lattice_points(),
        &inner.lattice_points()
    ));
}

#[test]
fn gorenstein_examples() {
    let g12 = LatticePolygon::new([pt(0, 2), pt(6, 0), pt(2, 6)]).unwrap();
    assert!(!Fan::normal_fan(&g12).is_gorenstein_weak_fano());
    assert!(Fan::normal_fan(&LatticePolygon::sigma(5)).is_gorenstein_weak_fano());
    assert!(Fan::normal_fan(&LatticePolygon::rectangle(0, 4, 0, 4)).is_gorenstein_weak_fano());
    assert!(Fan::normal_fan(&g12).anticanonical_lattice_points() >= 1);
}
