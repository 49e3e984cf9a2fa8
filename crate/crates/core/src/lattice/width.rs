use super::point::LatticePoint;
use super::polygon::LatticePolygon;

impl LatticePolygon {
    /// Width `max⟨P,w⟩ - min⟨P,w⟩` in direction `w`.
    pub fn width_in(&self, w: LatticePoint) -> i64 {
        let vals = self.vertices().iter().map(|v| v.dot(w));
        let (lo, hi) = vals.fold((i64::MAX, i64::MIN), |(lo, hi), x| (lo.min(x), hi.max(x)));
        hi - lo
    }

    /// Lattice width together with a primitive direction attaining it.
    ///
    /// Starts from the bound `W₀` over the four directions `(1,0), (0,1),
    /// (1,1), (1,-1)`. For two non-parallel edge vectors `e₁, e₂` every
    /// direction `w` has width at least `max(|⟨e₁,w⟩|, |⟨e₂,w⟩|)`, so only the
    /// finitely many `w` with both pairings at most `W₀` need scanning.
    /// Returned directions have a positive first nonzero coordinate.
    pub fn lattice_width(&self) -> (i64, LatticePoint) {
        let mut best_w = LatticePoint::new(1, 0);
        let mut best = self.width_in(best_w);
        for w in [
            LatticePoint::new(0, 1),
            LatticePoint::new(1, 1),
            LatticePoint::new(1, -1),
        ] {
            let d = self.width_in(w);
            if d < best {
                best = d;
                best_w = w;
            }
        }
        let bound = best;

        let v = self.vertices();
        let e1 = v[1] - v[0];
        let e2 = v[2] - v[1];
        let det = e1.det(e2);
        debug_assert!(det != 0);
        // w = M⁻¹ (s, t) where M has rows e1, e2; M⁻¹ = adj(M) / det.
        for s in -bound..=bound {
            for t in -bound..=bound {
                let nx = e2.y * s - e1.y * t;
                let ny = -e2.x * s + e1.x * t;
                if nx % det != 0 || ny % det != 0 {
                    continue;
                }
                let w = LatticePoint::new(nx / det, ny / det);
                if !w.is_primitive() || !(w.x > 0 || (w.x == 0 && w.y > 0)) {
                    continue;
                }
                let d = self.width_in(w);
                if d < best || (d == best && w < best_w) {
                    best = d;
                    best_w = w;
                }
            }
        }
        (best, best_w)
    }
}
