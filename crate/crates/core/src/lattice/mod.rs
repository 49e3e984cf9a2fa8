//! Lattice points, lattice polygons and their unimodular invariants.

mod affine;
mod normal_form;
mod point;
mod polygon;
mod region;
mod special;
mod width;

use thiserror::Error;

pub use affine::UnimodularAffineMap;
pub use point::{extended_gcd, pt, unimodular_complement, LatticePoint};
pub use polygon::{EdgeInequality, Hull, LatticePolygon, MoveOut};
pub use region::{Rational, RationalPoint, RationalRegion};
pub use special::SpecialShape;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("a polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertex {0} is repeated")]
    RepeatedVertex(LatticePoint),
    #[error("all vertices are collinear")]
    Collinear,
    #[error("{0} is not a vertex of the convex hull")]
    NotAVertex(LatticePoint),
    #[error("point set spans a {0}, not a polygon")]
    NotTwoDimensional(&'static str),
    #[error("interior hull is not two-dimensional")]
    DegenerateInterior,
}
