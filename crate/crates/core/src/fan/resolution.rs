use std::collections::BTreeMap;

use serde::Serialize;

use super::Fan;
use crate::lattice::{unimodular_complement, LatticePoint};

/// Rays inserted strictly between `u` and `v` (counterclockwise) by the
/// Hirzebruch–Jung resolution of the cone they span.
///
/// The cone is moved by an orientation-preserving unimodular map to
/// `cone((d,-k), (0,1))` with `0 ≤ k < d`. Writing `d/k = [a₁,…,a_s]` as a
/// negative continued fraction, the rays `u₀ = (0,1)`, `u₁ = (1,0)`,
/// `u_{i+1} = a_i·u_i - u_{i-1}` run clockwise from `(0,1)` to `(d,-k)`.
pub fn resolve_cone(u: LatticePoint, v: LatticePoint) -> Vec<LatticePoint> {
    let d = u.det(v);
    assert!(
        d > 0 && u.is_primitive() && v.is_primitive(),
        "invalid cone {u}, {v}"
    );
    if d == 1 {
        return vec![];
    }
    // coordinates p ↦ (det(p, v), det(w, p)) with det(w, v) = 1 send v to (0,1)
    let w = -unimodular_complement(v);
    debug_assert_eq!(w.det(v), 1);
    let beta = w.det(u);
    let k = (-beta).rem_euclid(d);
    // shear (x, y) ↦ (x, y + t·x) with beta + t·d = -k
    let t = (-k - beta) / d;
    let back = |q: LatticePoint| q.x * w + (q.y - t * q.x) * v;

    let mut a = Vec::new();
    let (mut num, mut den) = (d, k);
    while den != 0 {
        let ai = (num + den - 1) / den;
        a.push(ai);
        (num, den) = (den, ai * den - num);
    }
    let mut prev = LatticePoint::new(0, 1);
    let mut cur = LatticePoint::new(1, 0);
    let mut inserted = vec![cur];
    for &ai in &a[..a.len() - 1] {
        let next = ai * cur - prev;
        inserted.push(next);
        prev = cur;
        cur = next;
    }
    debug_assert_eq!(
        a.last().map(|&ai| ai * cur - prev),
        Some(LatticePoint::new(d, -k))
    );
    inserted.iter().rev().map(|&q| back(q)).collect()
}

/// Minimal smooth refinement of a fan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionResult {
    pub original: Fan,
    pub refined: Fan,
    pub inserted: Vec<LatticePoint>,
    /// Inserted ray ↦ the singular cone of the original fan it subdivides.
    #[serde(serialize_with = "provenance_as_list")]
    pub provenance: BTreeMap<LatticePoint, (LatticePoint, LatticePoint)>,
}

fn provenance_as_list<S: serde::Serializer>(
    map: &BTreeMap<LatticePoint, (LatticePoint, LatticePoint)>,
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_seq(map.iter().map(|(ray, cone)| (ray, [cone.0, cone.1])))
}

impl ResolutionResult {
    /// Every inserted ray is needed: dropping it leaves a non-smooth cone.
    pub fn is_minimal(&self) -> bool {
        let rays = self.refined.rays();
        let n = rays.len();
        (0..n)
            .filter(|&i| self.provenance.contains_key(&rays[i]))
            .all(|i| rays[(i + n - 1) % n].det(rays[(i + 1) % n]) != 1)
    }
}

impl Fan {
    pub fn minimal_resolution(&self) -> ResolutionResult {
        let mut rays = Vec::new();
        let mut inserted = Vec::new();
        let mut provenance = BTreeMap::new();
        for (u, v) in self.adjacent_pairs() {
            rays.push(u);
            for r in resolve_cone(u, v) {
                rays.push(r);
                inserted.push(r);
                provenance.insert(r, (u, v));
            }
        }
        let refined = Fan::new(rays).expect("refinement of a complete fan is complete");
        ResolutionResult {
            original: self.clone(),
            refined,
            inserted,
            provenance,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{pt, LatticePolygon};

    #[test]
    fn spec_cones() {
        assert_eq!(resolve_cone(pt(1, 0), pt(0, 1)), vec![]);
        assert_eq!(resolve_cone(pt(1, 0), pt(1, 2)), vec![pt(1, 1)]);
        assert_eq!(resolve_cone(pt(-1, -2), pt(1, 0)), vec![pt(0, -1)]);
    }

    #[test]
    fn chain_of_a_long_cone() {
        // cone((1,0),(1,5)) resolves through (1,1),(1,2),(1,3),(1,4)
        assert_eq!(
            resolve_cone(pt(1, 0), pt(1, 5)),
            vec![pt(1, 1), pt(1, 2), pt(1, 3), pt(1, 4)]
        );
        // cone((0,1),(-5,-2))... take the P(1,1,5)-like cone of determinant 5 with k = 2
        let r = resolve_cone(pt(1, 0), pt(2, 5));
        let mut chain = vec![pt(1, 0)];
        chain.extend(r);
        chain.push(pt(2, 5));
        assert!(chain.windows(2).all(|w| w[0].det(w[1]) == 1));
    }

    #[test]
    fn resolutions_of_examples() {
        let p2 = Fan::normal_fan(&LatticePolygon::sigma(3)).minimal_resolution();
        assert!(p2.inserted.is_empty());
        let fan = Fan::new([pt(1, 0), pt(0, 1), pt(-1, -2)]).unwrap();
        let res = fan.minimal_resolution();
        assert_eq!(res.inserted, vec![pt(0, -1)]);
        assert_eq!(res.provenance[&pt(0, -1)], (pt(-1, -2), pt(1, 0)));
        assert!(res.refined.is_smooth() && res.is_minimal());
    }
}
