use std::collections::BTreeSet;

use proptest::prelude::*;
use syzlab::checks::{
    anticanonical_width_scan, clifford_prediction, enumerate_polygons, interior_boundary_scan,
    reflexive_classes, CliffordReason, Status,
};
use syzlab::fan::is_reflexive;
use syzlab::lattice::{pt, Hull, LatticePoint, LatticePolygon, SpecialShape};

fn polygon(span: i64) -> impl Strategy<Value = LatticePolygon> {
    prop::collection::vec((-span..=span, -span..=span), 3..10)
        .prop_filter_map("degenerate hull", |pts| {
            LatticePolygon::hull_of(pts.into_iter().map(|(x, y)| pt(x, y))).ok()
        })
}

/// Canonical forms of the hulls of all subsets of `points`.
fn subset_hulls(
    points: &[LatticePoint],
    keep: impl Fn(&LatticePolygon) -> bool,
) -> BTreeSet<LatticePolygon> {
    let mut seen = BTreeSet::new();
    let mut out = BTreeSet::new();
    for mask in 0u32..1 << points.len() {
        let chosen = (0..points.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| points[i]);
        let Ok(p) = LatticePolygon::hull_of(chosen) else {
            continue;
        };
        if seen.insert(p.vertices().to_vec()) && keep(&p) {
            out.insert(p.canonical_form());
        }
    }
    out
}

#[test]
fn reflexive_classes_match_subset_oracle() {
    let primitive: Vec<LatticePoint> = (-2..=2)
        .flat_map(|x| (-2..=2).map(move |y| pt(x, y)))
        .filter(|p| p.is_primitive())
        .collect();
    assert_eq!(primitive.len(), 16);
    let oracle = subset_hulls(&primitive, is_reflexive);
    assert_eq!(oracle.len(), 16);
    let found: BTreeSet<LatticePolygon> = reflexive_classes().into_iter().collect();
    assert_eq!(found, oracle);
}

#[test]
fn enumeration_covers_box_oracle() {
    let max_points = 12;
    let grid: Vec<LatticePoint> = (0..=3)
        .flat_map(|x| (0..=3).map(move |y| pt(x, y)))
        .collect();
    let boxed = subset_hulls(&grid, |p| p.point_count() <= max_points);
    let grown: BTreeSet<LatticePolygon> = enumerate_polygons(max_points)
        .unwrap()
        .into_iter()
        .flatten()
        .collect();
    assert!(
        boxed.is_subset(&grown),
        "{} box classes missing",
        boxed.difference(&grown).count()
    );
    let fits = |p: &LatticePolygon| {
        let v = p.vertices();
        v.iter()
            .all(|q| (0..=3).contains(&q.x) && (0..=3).contains(&q.y))
    };
    for p in grown.iter().filter(|p| fits(p)) {
        assert!(boxed.contains(p), "{p}");
    }
}

#[test]
fn enumeration_levels_are_exact_and_distinct() {
    let levels = enumerate_polygons(9).unwrap();
    for (n, level) in levels.iter().enumerate() {
        assert!(level
            .iter()
            .all(|p| p.point_count() == n && p.canonical_form() == *p));
        let distinct: BTreeSet<&LatticePolygon> = level.iter().collect();
        assert_eq!(distinct.len(), level.len());
    }
}

#[test]
fn interior_boundary_scan_finds_only_upsilon() {
    let r = interior_boundary_scan(12).unwrap();
    assert!(r.report.passed(), "{}", r.report.detail);
    assert_eq!(r.violators.len(), 1);
    assert_eq!(r.violators[0].detect_special(), SpecialShape::Upsilon);
    assert!(r.interior_polygons > 0 && r.interior_polygons < r.polygons);
}

#[test]
fn anticanonical_width_holds() {
    let r = anticanonical_width_scan(10).unwrap();
    assert_eq!(r.status, Status::Pass, "{}", r.detail);
    assert!(anticanonical_width_scan(64).is_err());
}

#[test]
fn clifford_examples() {
    let sextic = clifford_prediction(&LatticePolygon::sigma(6)).unwrap();
    assert_eq!(
        (sextic.value, sextic.reason),
        (2, CliffordReason::SigmaMultiple)
    );
    let ups = clifford_prediction(&LatticePolygon::upsilon(2)).unwrap();
    assert_eq!(ups.reason, CliffordReason::Upsilon);
    assert_eq!(ups.value, ups.lattice_width - 1);
    let square = clifford_prediction(&LatticePolygon::rectangle(0, 4, 0, 4)).unwrap();
    assert_eq!((square.value, square.reason), (2, CliffordReason::Generic));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn interior_polygons_have_enough_boundary(p in polygon(6)) {
        let Hull::Polygon(q) = p.interior_hull() else { return Ok(()) };
        if q.detect_special() != SpecialShape::Upsilon {
            prop_assert!(q.boundary_count() as i64 >= q.lattice_width().0 + 2, "{}", q);
        }
    }

    #[test]
    fn clifford_is_width_or_one_less(p in polygon(5)) {
        let Ok(c) = clifford_prediction(&p) else { return Ok(()) };
        prop_assert_eq!(c.value, c.lattice_width - i64::from(c.exceptional));
        prop_assert!(c.value >= 0);
    }
}
