use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

/// A point of Z², also used for direction and normal vectors.
///
/// Ordering is lexicographic by `(x, y)`, which is the enumeration order used
/// everywhere in the crate.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const ORIGIN: LatticePoint = LatticePoint { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        LatticePoint { x, y }
    }

    pub fn dot(self, other: LatticePoint) -> i64 {
        self.x * other.x + self.y * other.y
    }

    /// Determinant of the 2×2 matrix with columns `self`, `other`.
    pub fn det(self, other: LatticePoint) -> i64 {
        self.x * other.y - self.y * other.x
    }

    /// Lattice length: gcd of the coordinates (0 for the origin).
    pub fn content(self) -> i64 {
        self.x.gcd(&self.y)
    }

    pub fn is_primitive(self) -> bool {
        self.content() == 1
    }

    /// Divides out the content. The origin is returned unchanged.
    pub fn primitive(self) -> LatticePoint {
        let g = self.content();
        if g == 0 {
            self
        } else {
            LatticePoint::new(self.x / g, self.y / g)
        }
    }

    /// Rotation by a quarter turn counterclockwise.
    pub fn perp(self) -> LatticePoint {
        LatticePoint::new(-self.y, self.x)
    }

    /// Half-open angular sector index used for sorting by angle from the
    /// positive x-axis: 0 for angles in [0, π), 1 for [π, 2π).
    fn half(self) -> u8 {
        if self.y > 0 || (self.y == 0 && self.x > 0) {
            0
        } else {
            1
        }
    }

    /// Compares nonzero vectors by their angle in [0, 2π) measured from the
    /// positive x-axis.
    pub fn angle_cmp(self, other: LatticePoint) -> std::cmp::Ordering {
        self.half()
            .cmp(&other.half())
            .then_with(|| 0.cmp(&self.det(other)))
    }
}

impl From<[i64; 2]> for LatticePoint {
    fn from(a: [i64; 2]) -> Self {
        LatticePoint::new(a[0], a[1])
    }
}

impl From<LatticePoint> for [i64; 2] {
    fn from(p: LatticePoint) -> Self {
        [p.x, p.y]
    }
}

impl From<(i64, i64)> for LatticePoint {
    fn from(t: (i64, i64)) -> Self {
        LatticePoint::new(t.0, t.1)
    }
}

impl Add for LatticePoint {
    type Output = LatticePoint;
    fn add(self, o: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for LatticePoint {
    type Output = LatticePoint;
    fn sub(self, o: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for LatticePoint {
    type Output = LatticePoint;
    fn neg(self) -> LatticePoint {
        LatticePoint::new(-self.x, -self.y)
    }
}

impl Mul<LatticePoint> for i64 {
    type Output = LatticePoint;
    fn mul(self, p: LatticePoint) -> LatticePoint {
        LatticePoint::new(self * p.x, self * p.y)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Shorthand constructor used heavily in tests and fixtures.
pub const fn pt(x: i64, y: i64) -> LatticePoint {
    LatticePoint::new(x, y)
}

/// Returns `(g, s, t)` with `s*a + t*b = g = gcd(a, b) >= 0`.
pub fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let e = a.extended_gcd(&b);
    if e.gcd < 0 {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// A vector `f` with `det(e, f) == 1`, for primitive `e`.
pub fn unimodular_complement(e: LatticePoint) -> LatticePoint {
    // det(e, f) = e.x*f.y - e.y*f.x
    let (g, s, t) = extended_gcd(e.x, -e.y);
    debug_assert_eq!(g, 1, "complement requested for non-primitive {e}");
    LatticePoint::new(t, s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_has_unit_determinant() {
        for e in [
            pt(1, 0),
            pt(0, 1),
            pt(-3, -2),
            pt(2, -1),
            pt(5, 7),
            pt(-1, 0),
        ] {
            let f = unimodular_complement(e);
            assert_eq!(e.det(f), 1, "{e} {f}");
        }
    }

    #[test]
    fn angle_order_starts_on_positive_x_axis() {
        let mut v = vec![
            pt(0, -1),
            pt(-1, -1),
            pt(1, 0),
            pt(-1, 0),
            pt(0, 1),
            pt(1, 1),
        ];
        v.sort_by(|a, b| a.angle_cmp(*b));
        assert_eq!(
            v,
            vec![
                pt(1, 0),
                pt(1, 1),
                pt(0, 1),
                pt(-1, 0),
                pt(-1, -1),
                pt(0, -1)
            ]
        );
    }

    #[test]
    fn primitive_divides_content() {
        assert_eq!(pt(-4, 6).primitive(), pt(-2, 3));
        assert_eq!(pt(0, -5).primitive(), pt(0, -1));
        assert_eq!(pt(0, 0).content(), 0);
    }
}
