//! Lattice polygons with few lattice points, up to unimodular equivalence.
//!
//! Every polygon with `n + 1 ≥ 4` lattice points has a vertex whose removal
//! leaves a two-dimensional polygon with `n` points, so all classes are
//! reached from `Σ` by repeatedly adding one point `p` such that the hull
//! gains exactly that point. To bound the candidates, move a unimodular
//! triangle of the current polygon to `Σ`: the hull of `Σ` and `(x, y)`
//! already has at least `max(|x|, |y|)/2 + 5/2` lattice points by Pick's
//! formula, so `|x|, |y| ≤ 2N - 5` for hulls with at most `N` points.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use super::{PredicateReport, Status};
use crate::fan::{is_reflexive, Fan};
use crate::lattice::{LatticePoint, LatticePolygon, SpecialShape};

pub const DEFAULT_MAX_POINTS: usize = 12;
/// Largest point count the enumerator accepts.
pub const MAX_POINTS_CAP: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("enumeration up to {requested} points exceeds the cap of {cap}")]
    BudgetExceeded { requested: usize, cap: usize },
}

/// A unimodular triangle among the lattice points.
fn unimodular_triangle(points: &[LatticePoint]) -> (LatticePoint, LatticePoint, LatticePoint) {
    for (i, &a) in points.iter().enumerate() {
        for (j, &b) in points.iter().enumerate().skip(i + 1) {
            for &c in &points[j + 1..] {
                if (b - a).det(c - a).abs() == 1 {
                    return (a, b, c);
                }
            }
        }
    }
    unreachable!("every lattice polygon contains a unimodular triangle")
}

/// Classes with exactly one more lattice point than `q`.
fn extensions(q: &LatticePolygon, max_points: usize) -> Vec<LatticePolygon> {
    let points = q.lattice_points();
    let n = points.len();
    let (a, b, c) = unimodular_triangle(&points);
    let (e1, e2) = (b - a, c - a);
    let bound = 2 * max_points as i64 - 5;
    let mut out = Vec::new();
    for x in -bound..=bound {
        for y in -bound..=bound {
            let p = a + x * e1 + y * e2;
            if q.contains(p) {
                continue;
            }
            let hull = LatticePolygon::hull_of(q.vertices().iter().copied().chain([p]))
                .expect("two-dimensional");
            if hull.point_count() == n + 1 {
                out.push(hull.canonical_form());
            }
        }
    }
    out
}

/// All two-dimensional lattice polygons with at most `max_points` lattice
/// points, one canonical representative per class, grouped by point count
/// (`result[k]` holds the classes with `k` points).
pub fn enumerate_polygons(max_points: usize) -> Result<Vec<Vec<LatticePolygon>>, EnumerationError> {
    if max_points > MAX_POINTS_CAP {
        return Err(EnumerationError::BudgetExceeded {
            requested: max_points,
            cap: MAX_POINTS_CAP,
        });
    }
    let mut levels: Vec<Vec<LatticePolygon>> = vec![Vec::new(); max_points.max(3) + 1];
    if max_points < 3 {
        return Ok(levels.into_iter().take(max_points + 1).collect());
    }
    levels[3] = vec![LatticePolygon::sigma(1).canonical_form()];
    for n in 3..max_points {
        let next: BTreeSet<LatticePolygon> = levels[n]
            .par_iter()
            .flat_map_iter(|q| extensions(q, max_points))
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        levels[n + 1] = next.into_iter().collect();
    }
    Ok(levels)
}

/// Violations of `|∂P ∩ Z²| ≥ lw(P) + 2` among interior polygons.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InteriorBoundaryReport {
    pub max_points: usize,
    pub polygons: usize,
    pub interior_polygons: usize,
    pub violators: Vec<LatticePolygon>,
    pub report: PredicateReport,
}

/// Scans every interior polygon with at most `max_points` lattice points.
/// The expected violator set is `{Υ}`.
pub fn interior_boundary_scan(
    max_points: usize,
) -> Result<InteriorBoundaryReport, EnumerationError> {
    let levels = enumerate_polygons(max_points)?;
    let all: Vec<&LatticePolygon> = levels.iter().flatten().collect();
    let interior: Vec<&LatticePolygon> = all
        .par_iter()
        .copied()
        .filter(|p| p.is_interior_polygon())
        .collect();
    let violators: Vec<LatticePolygon> = interior
        .iter()
        .filter(|p| (p.boundary_count() as i64) < p.lattice_width().0 + 2)
        .map(|&p| p.clone())
        .collect();
    let only_upsilon =
        violators.len() == 1 && violators[0].detect_special() == SpecialShape::Upsilon;
    let report = PredicateReport::new(
        "interior_boundary_bound",
        only_upsilon,
        format!(
            "{} violator class(es) among {} interior polygons",
            violators.len(),
            interior.len()
        ),
        &[
            ("violators", violators.len() as i64),
            ("interior_polygons", interior.len() as i64),
        ],
    );
    Ok(InteriorBoundaryReport {
        max_points,
        polygons: all.len(),
        interior_polygons: interior.len(),
        violators,
        report,
    })
}

/// Reflexive polygons up to equivalence, found among polygons with at most
/// ten lattice points (a reflexive polygon has at most nine boundary points).
pub fn reflexive_classes() -> Vec<LatticePolygon> {
    let levels = enumerate_polygons(10).expect("within cap");
    levels
        .into_iter()
        .flatten()
        .filter(|p| p.interior_count() == 1)
        .filter(|p| {
            let centre = p.interior_points()[0];
            is_reflexive(&p.translate(-centre))
        })
        .collect()
}

/// For every polygon whose normal fan has exactly two anticanonical lattice
/// points, checks `lw(Δ) < |∂Δ ∩ Z²|`.
pub fn anticanonical_width_scan(max_points: usize) -> Result<PredicateReport, EnumerationError> {
    let levels = enumerate_polygons(max_points)?;
    let mut checked = 0;
    for p in levels.iter().flatten() {
        if Fan::normal_fan(p).anticanonical_lattice_points() != 2 {
            continue;
        }
        checked += 1;
        let (lw, _) = p.lattice_width();
        if lw >= p.boundary_count() as i64 {
            return Ok(PredicateReport::new(
                "anticanonical_width",
                false,
                format!(
                    "{p} has lattice width {lw} and {} boundary points",
                    p.boundary_count()
                ),
                &[
                    ("lattice_width", lw),
                    ("boundary", p.boundary_count() as i64),
                ],
            ));
        }
    }
    let mut r = PredicateReport::new(
        "anticanonical_width",
        true,
        format!("{checked} polygons checked"),
        &[],
    );
    if checked == 0 {
        r.status = Status::Skipped;
    }
    Ok(r)
}
