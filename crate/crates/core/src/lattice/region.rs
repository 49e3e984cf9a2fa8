//! Exact intersections of rational half-planes.
//!
//! Divisor polygons of toric surfaces and moved-out polygons are intersections
//! of half-planes `⟨x, v⟩ ≥ -a` with integral data whose vertices may be
//! rational. Vertices are kept as exact fractions; callers only see the
//! integrality flag and the lattice points.

use num_rational::Ratio;

use super::point::LatticePoint;
use super::polygon::{EdgeInequality, LatticePolygon};

pub type Rational = Ratio<i128>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalPoint {
    pub x: Rational,
    pub y: Rational,
}

impl RationalPoint {
    pub fn is_integral(&self) -> bool {
        self.x.is_integer() && self.y.is_integer()
    }

    pub fn to_lattice(&self) -> Option<LatticePoint> {
        self.is_integral()
            .then(|| LatticePoint::new(self.x.to_integer() as i64, self.y.to_integer() as i64))
    }

    fn cross(o: &RationalPoint, a: &RationalPoint, b: &RationalPoint) -> Rational {
        (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
    }
}

impl From<LatticePoint> for RationalPoint {
    fn from(p: LatticePoint) -> Self {
        RationalPoint {
            x: Rational::from_integer(p.x as i128),
            y: Rational::from_integer(p.y as i128),
        }
    }
}

/// Intersection of finitely many half-planes, assumed bounded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RationalRegion {
    Empty,
    Point(RationalPoint),
    Segment(RationalPoint, RationalPoint),
    /// Counterclockwise vertex list, no three consecutive collinear.
    Polygon(Vec<RationalPoint>),
}

impl RationalRegion {
    /// Intersects the half-planes `⟨x, normal⟩ ≥ -offset`.
    ///
    /// The normals must positively span the plane, otherwise the region would
    /// be unbounded; this holds for the ray generators of a complete fan.
    pub fn from_inequalities(ineqs: &[EdgeInequality]) -> RationalRegion {
        let satisfies = |q: &RationalPoint| {
            ineqs.iter().all(|h| {
                let v = q.x * Rational::from_integer(h.normal.x as i128)
                    + q.y * Rational::from_integer(h.normal.y as i128);
                v >= Rational::from_integer(-(h.offset as i128))
            })
        };
        let mut candidates = Vec::new();
        for (i, h1) in ineqs.iter().enumerate() {
            for h2 in &ineqs[i + 1..] {
                if let Some(q) = line_intersection(h1, h2) {
                    if satisfies(&q) {
                        candidates.push(q);
                    }
                }
            }
        }
        candidates.sort();
        candidates.dedup();
        rational_hull(candidates)
    }

    pub fn vertices(&self) -> Vec<RationalPoint> {
        match self {
            RationalRegion::Empty => vec![],
            RationalRegion::Point(p) => vec![*p],
            RationalRegion::Segment(a, b) => vec![*a, *b],
            RationalRegion::Polygon(v) => v.clone(),
        }
    }

    /// True when every vertex is a lattice point (vacuously for `Empty`).
    pub fn is_integral(&self) -> bool {
        self.vertices().iter().all(RationalPoint::is_integral)
    }

    /// The region as a lattice polygon, if it is two-dimensional and integral.
    pub fn to_lattice_polygon(&self) -> Option<LatticePolygon> {
        match self {
            RationalRegion::Polygon(v) => {
                let pts: Option<Vec<_>> = v.iter().map(RationalPoint::to_lattice).collect();
                LatticePolygon::new(pts?).ok()
            }
            _ => None,
        }
    }

    /// Lattice points of the closed region, in lexicographic order.
    pub fn lattice_points(&self) -> Vec<LatticePoint> {
        let verts = self.vertices();
        if verts.is_empty() {
            return vec![];
        }
        let min_x = verts.iter().map(|p| p.x).min().unwrap().ceil().to_integer() as i64;
        let max_x = verts
            .iter()
            .map(|p| p.x)
            .max()
            .unwrap()
            .floor()
            .to_integer() as i64;
        let min_y = verts.iter().map(|p| p.y).min().unwrap().ceil().to_integer() as i64;
        let max_y = verts
            .iter()
            .map(|p| p.y)
            .max()
            .unwrap()
            .floor()
            .to_integer() as i64;
        let mut out = Vec::new();
        for x in min_x..=max_x {
            for y in min_y..=max_y {
                let q = RationalPoint::from(LatticePoint::new(x, y));
                if self.contains(&q) {
                    out.push(LatticePoint::new(x, y));
                }
            }
        }
        out
    }

    pub fn contains(&self, q: &RationalPoint) -> bool {
        match self {
            RationalRegion::Empty => false,
            RationalRegion::Point(p) => p == q,
            RationalRegion::Segment(a, b) => {
                RationalPoint::cross(a, b, q) == Rational::from_integer(0)
                    && q.x >= a.x.min(b.x)
                    && q.x <= a.x.max(b.x)
                    && q.y >= a.y.min(b.y)
                    && q.y <= a.y.max(b.y)
            }
            RationalRegion::Polygon(v) => (0..v.len()).all(|i| {
                RationalPoint::cross(&v[i], &v[(i + 1) % v.len()], q) >= Rational::from_integer(0)
            }),
        }
    }
}

fn line_intersection(h1: &EdgeInequality, h2: &EdgeInequality) -> Option<RationalPoint> {
    // ⟨x, v1⟩ = -a1, ⟨x, v2⟩ = -a2
    let (v1, v2) = (h1.normal, h2.normal);
    let det = v1.det(v2) as i128;
    if det == 0 {
        return None;
    }
    let (r1, r2) = (-(h1.offset as i128), -(h2.offset as i128));
    let x = r1 * v2.y as i128 - r2 * v1.y as i128;
    let y = v1.x as i128 * r2 - v2.x as i128 * r1;
    Some(RationalPoint {
        x: Ratio::new(x, det),
        y: Ratio::new(y, det),
    })
}

/// Convex hull of distinct, lexicographically sorted rational points.
fn rational_hull(pts: Vec<RationalPoint>) -> RationalRegion {
    match pts.len() {
        0 => return RationalRegion::Empty,
        1 => return RationalRegion::Point(pts[0]),
        _ => {}
    }
    let zero = Rational::from_integer(0);
    let mut lower: Vec<RationalPoint> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && RationalPoint::cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= zero
        {
            lower.pop();
        }
        lower.push(*p);
    }
    let mut upper: Vec<RationalPoint> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && RationalPoint::cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= zero
        {
            upper.pop();
        }
        upper.push(*p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() <= 2 {
        RationalRegion::Segment(pts[0], pts[pts.len() - 1])
    } else {
        RationalRegion::Polygon(lower)
    }
}
