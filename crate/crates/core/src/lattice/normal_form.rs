//! Unimodular normal form of lattice polygons.
//!
//! For every vertex `v` and each of its two incident edges `e`, there is
//! exactly one unimodular affine map sending `v` to the origin, the primitive
//! direction of `e` to `(1,0)`, the polygon into the upper half-plane, and the
//! other neighbour of `v` to a point `(a, b)` with `0 ≤ a < b`. The normal form
//! is the lexicographically smallest counterclockwise vertex cycle (read from
//! the origin) among these `2n` images.

use super::point::{unimodular_complement, LatticePoint};
use super::polygon::LatticePolygon;

impl LatticePolygon {
    /// Representative of the unimodular equivalence class of `self`.
    pub fn canonical_form(&self) -> LatticePolygon {
        let verts = self.vertices();
        let n = verts.len();
        let mut best: Option<Vec<LatticePoint>> = None;
        for i in 0..n {
            for forward in [true, false] {
                let step = |k: usize| {
                    if forward {
                        (i + k) % n
                    } else {
                        (i + n - k) % n
                    }
                };
                let v = verts[i];
                let e = (verts[step(1)] - v).primitive();
                let f = unimodular_complement(e);
                let sign = if forward { 1 } else { -1 };
                // linear map sending e -> (1,0), f -> (0, sign)
                let image = |q: LatticePoint| {
                    let d = q - v;
                    LatticePoint::new(f.y * d.x - f.x * d.y, sign * e.det(d))
                };
                let w = image(verts[step(n - 1)]);
                debug_assert!(w.y > 0);
                let shear = (w.x.rem_euclid(w.y) - w.x) / w.y;
                let cand: Vec<LatticePoint> = (0..n)
                    .map(|k| {
                        let p = image(verts[step(k)]);
                        LatticePoint::new(p.x + shear * p.y, p.y)
                    })
                    .collect();
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        LatticePolygon::from_ccw_unchecked(best.unwrap())
    }

    /// Unimodular equivalence.
    pub fn equivalent(&self, other: &LatticePolygon) -> bool {
        self.len() == other.len()
            && self.twice_area() == other.twice_area()
            && self.boundary_count() == other.boundary_count()
            && self.canonical_form() == other.canonical_form()
    }
}
