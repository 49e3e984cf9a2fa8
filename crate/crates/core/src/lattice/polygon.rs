use std::fmt;

use serde::{Deserialize, Serialize};

use super::affine::UnimodularAffineMap;
use super::point::LatticePoint;
use super::region::RationalRegion;
use super::LatticeError;

/// Half-plane `⟨x, normal⟩ ≥ -offset` with a primitive normal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeInequality {
    pub normal: LatticePoint,
    pub offset: i64,
}

impl EdgeInequality {
    /// `⟨p, normal⟩ + offset`: the lattice distance of `p` from the supporting
    /// line when the normal is primitive.
    pub fn slack(&self, p: LatticePoint) -> i64 {
        p.dot(self.normal) + self.offset
    }

    pub fn shifted(&self, by: i64) -> EdgeInequality {
        EdgeInequality {
            normal: self.normal,
            offset: self.offset + by,
        }
    }
}

/// A two-dimensional convex lattice polygon.
///
/// Vertices are stored counterclockwise, starting from the lexicographically
/// smallest vertex, with no three consecutive vertices collinear.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LatticePolygon {
    vertices: Vec<LatticePoint>,
}

/// Convex hull of a finite point set, tagged by dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Hull {
    Empty,
    Point(LatticePoint),
    Segment(LatticePoint, LatticePoint),
    Polygon(LatticePolygon),
}

impl Hull {
    /// Convex hull of arbitrary (possibly repeated) points.
    pub fn of(points: impl IntoIterator<Item = LatticePoint>) -> Hull {
        let mut pts: Vec<LatticePoint> = points.into_iter().collect();
        pts.sort();
        pts.dedup();
        match pts.len() {
            0 => return Hull::Empty,
            1 => return Hull::Point(pts[0]),
            _ => {}
        }
        let verts = monotone_chain(&pts);
        if verts.len() <= 2 {
            Hull::Segment(pts[0], pts[pts.len() - 1])
        } else {
            Hull::Polygon(LatticePolygon::from_ccw_unchecked(verts))
        }
    }

    pub fn dimension(&self) -> Option<usize> {
        match self {
            Hull::Empty => None,
            Hull::Point(_) => Some(0),
            Hull::Segment(..) => Some(1),
            Hull::Polygon(_) => Some(2),
        }
    }

    pub fn as_polygon(&self) -> Option<&LatticePolygon> {
        match self {
            Hull::Polygon(p) => Some(p),
            _ => None,
        }
    }

    pub fn into_polygon(self) -> Option<LatticePolygon> {
        match self {
            Hull::Polygon(p) => Some(p),
            _ => None,
        }
    }

    /// Lattice points of the closed hull, lexicographically ordered.
    pub fn lattice_points(&self) -> Vec<LatticePoint> {
        match self {
            Hull::Empty => vec![],
            Hull::Point(p) => vec![*p],
            Hull::Segment(a, b) => {
                let d = *b - *a;
                let g = d.content();
                let step = d.primitive();
                let mut v: Vec<_> = (0..=g).map(|k| *a + k * step).collect();
                v.sort();
                v
            }
            Hull::Polygon(p) => p.lattice_points(),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Hull::Empty => "empty",
            Hull::Point(_) => "point",
            Hull::Segment(..) => "segment",
            Hull::Polygon(_) => "polygon",
        }
    }
}

/// Andrew's monotone chain on sorted distinct points; drops collinear points.
fn monotone_chain(pts: &[LatticePoint]) -> Vec<LatticePoint> {
    let cross = |o: LatticePoint, a: LatticePoint, b: LatticePoint| (a - o).det(b - o);
    let mut lower: Vec<LatticePoint> = Vec::with_capacity(pts.len());
    for &p in pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<LatticePoint> = Vec::with_capacity(pts.len());
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

impl LatticePolygon {
    /// Builds a polygon from its vertices, given in any order.
    ///
    /// Every input point must be a vertex of the convex hull: repeated,
    /// collinear or non-convex input is rejected.
    pub fn new(vertices: impl IntoIterator<Item = LatticePoint>) -> Result<Self, LatticeError> {
        let input: Vec<LatticePoint> = vertices.into_iter().collect();
        if input.len() < 3 {
            return Err(LatticeError::TooFewVertices(input.len()));
        }
        let mut sorted = input.clone();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(LatticeError::RepeatedVertex(w[0]));
        }
        let hull = monotone_chain(&sorted);
        if hull.len() < 3 {
            return Err(LatticeError::Collinear);
        }
        if hull.len() != input.len() {
            let stray = input.iter().find(|p| !hull.contains(p)).copied().unwrap();
            return Err(LatticeError::NotAVertex(stray));
        }
        Ok(LatticePolygon::from_ccw_unchecked(hull))
    }

    /// Convex hull of points, required to be two-dimensional.
    pub fn hull_of(points: impl IntoIterator<Item = LatticePoint>) -> Result<Self, LatticeError> {
        match Hull::of(points) {
            Hull::Polygon(p) => Ok(p),
            other => Err(LatticeError::NotTwoDimensional(other.tag())),
        }
    }

    /// `vertices` must be strictly convex and counterclockwise.
    pub(crate) fn from_ccw_unchecked(mut vertices: Vec<LatticePoint>) -> Self {
        let start = (0..vertices.len()).min_by_key(|&i| vertices[i]).unwrap();
        vertices.rotate_left(start);
        LatticePolygon { vertices }
    }

    /// `conv{(0,0), (k,0), (0,k)}`.
    pub fn sigma(k: i64) -> Self {
        assert!(k >= 1);
        LatticePolygon::from_ccw_unchecked(vec![
            LatticePoint::new(0, 0),
            LatticePoint::new(k, 0),
            LatticePoint::new(0, k),
        ])
    }

    /// `k·conv{(-1,-1), (1,0), (0,1)}`.
    pub fn upsilon(k: i64) -> Self {
        assert!(k >= 1);
        LatticePolygon::from_ccw_unchecked(vec![
            LatticePoint::new(-k, -k),
            LatticePoint::new(k, 0),
            LatticePoint::new(0, k),
        ])
    }

    /// `[x0, x1] × [y0, y1]`.
    pub fn rectangle(x0: i64, x1: i64, y0: i64, y1: i64) -> Self {
        assert!(x0 < x1 && y0 < y1);
        LatticePolygon::from_ccw_unchecked(vec![
            LatticePoint::new(x0, y0),
            LatticePoint::new(x1, y0),
            LatticePoint::new(x1, y1),
            LatticePoint::new(x0, y1),
        ])
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Edges as `(start, end)` pairs in counterclockwise order.
    pub fn edges(&self) -> impl Iterator<Item = (LatticePoint, LatticePoint)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Twice the Euclidean area (shoelace), always a positive integer.
    pub fn twice_area(&self) -> i64 {
        self.edges().map(|(a, b)| a.det(b)).sum()
    }

    pub fn boundary_count(&self) -> usize {
        self.edges().map(|(a, b)| (b - a).content() as usize).sum()
    }

    /// Number of strictly interior lattice points, via Pick's formula.
    pub fn interior_count(&self) -> usize {
        ((self.twice_area() - self.boundary_count() as i64 + 2) / 2) as usize
    }

    /// Total number of lattice points, via Pick's formula.
    pub fn point_count(&self) -> usize {
        self.interior_count() + self.boundary_count()
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        self.edges().all(|(a, b)| (b - a).det(p - a) >= 0)
    }

    pub fn contains_strictly(&self, p: LatticePoint) -> bool {
        self.edges().all(|(a, b)| (b - a).det(p - a) > 0)
    }

    pub fn on_boundary(&self, p: LatticePoint) -> bool {
        self.contains(p) && !self.contains_strictly(p)
    }

    fn bounding_box(&self) -> (LatticePoint, LatticePoint) {
        let min_x = self.vertices.iter().map(|p| p.x).min().unwrap();
        let max_x = self.vertices.iter().map(|p| p.x).max().unwrap();
        let min_y = self.vertices.iter().map(|p| p.y).min().unwrap();
        let max_y = self.vertices.iter().map(|p| p.y).max().unwrap();
        (
            LatticePoint::new(min_x, min_y),
            LatticePoint::new(max_x, max_y),
        )
    }

    fn scan(&self, keep: impl Fn(LatticePoint) -> bool) -> Vec<LatticePoint> {
        let (lo, hi) = self.bounding_box();
        let mut out = Vec::new();
        for x in lo.x..=hi.x {
            for y in lo.y..=hi.y {
                let p = LatticePoint::new(x, y);
                if keep(p) {
                    out.push(p);
                }
            }
        }
        out
    }

    /// All lattice points of the closed polygon, in lexicographic order.
    pub fn lattice_points(&self) -> Vec<LatticePoint> {
        self.scan(|p| self.contains(p))
    }

    pub fn boundary_points(&self) -> Vec<LatticePoint> {
        self.scan(|p| self.on_boundary(p))
    }

    pub fn interior_points(&self) -> Vec<LatticePoint> {
        self.scan(|p| self.contains_strictly(p))
    }

    /// Convex hull of the strictly interior lattice points.
    pub fn interior_hull(&self) -> Hull {
        Hull::of(self.interior_points())
    }

    pub fn dilate(&self, k: i64) -> LatticePolygon {
        assert!(k >= 1, "dilation factor must be positive");
        LatticePolygon::from_ccw_unchecked(self.vertices.iter().map(|&v| k * v).collect())
    }

    pub fn translate(&self, by: LatticePoint) -> LatticePolygon {
        LatticePolygon::from_ccw_unchecked(self.vertices.iter().map(|&v| v + by).collect())
    }

    pub fn transform(&self, map: &UnimodularAffineMap) -> LatticePolygon {
        let mut v: Vec<LatticePoint> = self.vertices.iter().map(|&p| map.apply(p)).collect();
        if map.det() < 0 {
            v.reverse();
        }
        LatticePolygon::from_ccw_unchecked(v)
    }

    /// One inequality per edge, in counterclockwise edge order, with primitive
    /// inner normals.
    pub fn edge_inequalities(&self) -> Vec<EdgeInequality> {
        self.edges()
            .map(|(a, b)| {
                let normal = (b - a).perp().primitive();
                EdgeInequality {
                    normal,
                    offset: -a.dot(normal),
                }
            })
            .collect()
    }

    /// The polygon obtained by moving every edge outward over lattice
    /// distance one, if that polygon has integral vertices.
    pub fn move_out(&self) -> MoveOut {
        let shifted: Vec<EdgeInequality> = self
            .edge_inequalities()
            .iter()
            .map(|h| h.shifted(1))
            .collect();
        let region = RationalRegion::from_inequalities(&shifted);
        match region.to_lattice_polygon() {
            Some(p) => MoveOut::Lattice(p),
            None => MoveOut::NotLattice,
        }
    }

    /// Whether this polygon is the interior polygon of some lattice polygon.
    pub fn is_interior_polygon(&self) -> bool {
        matches!(self.move_out(), MoveOut::Lattice(_))
    }
}

impl fmt::Display for LatticePolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "conv{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl<'de> Deserialize<'de> for LatticePolygon {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            vertices: Vec<LatticePoint>,
        }
        let raw = Raw::deserialize(d)?;
        LatticePolygon::new(raw.vertices).map_err(serde::de::Error::custom)
    }
}

/// Result of [`LatticePolygon::move_out`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MoveOut {
    Lattice(LatticePolygon),
    NotLattice,
}
