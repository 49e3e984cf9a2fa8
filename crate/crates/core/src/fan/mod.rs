//! Complete two-dimensional fans, their minimal resolutions and torus-invariant
//! divisors.

mod divisor;
mod resolution;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{LatticePoint, LatticePolygon};

pub use divisor::{fujita_check, minkowski_point_sum_surjective, FujitaReport, ToricDivisor};
pub use resolution::{resolve_cone, ResolutionResult};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FanError {
    #[error("ray {0} is zero or not primitive")]
    NotPrimitive(LatticePoint),
    #[error("ray {0} occurs twice")]
    DuplicateRay(LatticePoint),
    #[error("rays {0} and {1} do not span a strictly convex cone")]
    NotComplete(LatticePoint, LatticePoint),
    #[error("divisor has {got} coefficients for {expected} rays")]
    CoefficientCount { expected: usize, got: usize },
    #[error("divisor polygon check failed: {0}")]
    AssertionFailure(String),
    #[error(transparent)]
    Lattice(#[from] crate::lattice::LatticeError),
}

/// Complete fan given by its rays in counterclockwise order, starting from the
/// first ray at angle ≥ 0 from the positive x-axis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Fan {
    rays: Vec<LatticePoint>,
}

impl Fan {
    /// Sorts the rays by angle and validates completeness.
    pub fn new(rays: impl IntoIterator<Item = LatticePoint>) -> Result<Fan, FanError> {
        let mut rays: Vec<LatticePoint> = rays.into_iter().collect();
        if let Some(r) = rays.iter().find(|r| !r.is_primitive()) {
            return Err(FanError::NotPrimitive(*r));
        }
        rays.sort_by(|a, b| a.angle_cmp(*b));
        if let Some(w) = rays.windows(2).find(|w| w[0] == w[1]) {
            return Err(FanError::DuplicateRay(w[0]));
        }
        if rays.len() < 3 {
            let (a, b) = (rays[0], *rays.last().unwrap());
            return Err(FanError::NotComplete(a, b));
        }
        let fan = Fan { rays };
        if let Some((a, b)) = fan.adjacent_pairs().find(|(a, b)| a.det(*b) <= 0) {
            return Err(FanError::NotComplete(a, b));
        }
        Ok(fan)
    }

    /// Inner normal fan of a polygon.
    pub fn normal_fan(p: &LatticePolygon) -> Fan {
        Fan::new(p.edge_inequalities().into_iter().map(|h| h.normal))
            .expect("normal fan of a polygon is complete")
    }

    pub fn rays(&self) -> &[LatticePoint] {
        &self.rays
    }

    pub fn len(&self) -> usize {
        self.rays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }

    /// Pairs of cyclically consecutive rays, each spanning a two-dimensional cone.
    pub fn adjacent_pairs(&self) -> impl Iterator<Item = (LatticePoint, LatticePoint)> + '_ {
        let n = self.rays.len();
        (0..n).map(move |i| (self.rays[i], self.rays[(i + 1) % n]))
    }

    pub fn is_smooth(&self) -> bool {
        self.adjacent_pairs().all(|(a, b)| a.det(b) == 1)
    }

    /// Hull of the ray generators is reflexive.
    pub fn is_gorenstein_weak_fano(&self) -> bool {
        LatticePolygon::hull_of(self.rays.iter().copied()).is_ok_and(|p| is_reflexive(&p))
    }

    /// Number of lattice points of the polygon of the divisor with all
    /// coefficients equal to one.
    pub fn anticanonical_lattice_points(&self) -> usize {
        ToricDivisor::anticanonical(self)
            .polygon()
            .lattice_points()
            .len()
    }
}

impl fmt::Display for Fan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "fan[")?;
        for (i, r) in self.rays.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]")
    }
}

impl<'de> Deserialize<'de> for Fan {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            rays: Vec<LatticePoint>,
        }
        let raw = Raw::deserialize(d)?;
        Fan::new(raw.rays).map_err(serde::de::Error::custom)
    }
}

/// The origin is the only interior lattice point and every edge lies at
/// lattice distance one from it.
pub fn is_reflexive(p: &LatticePolygon) -> bool {
    p.contains_strictly(LatticePoint::ORIGIN)
        && p.interior_count() == 1
        && p.edge_inequalities().iter().all(|h| h.offset == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::pt;

    #[test]
    fn normal_fans() {
        assert_eq!(
            Fan::normal_fan(&LatticePolygon::sigma(4)).rays(),
            &[pt(1, 0), pt(0, 1), pt(-1, -1)]
        );
        let t = LatticePolygon::new([pt(0, 0), pt(6, 0), pt(0, 3)]).unwrap();
        assert_eq!(
            Fan::normal_fan(&t).rays(),
            &[pt(1, 0), pt(0, 1), pt(-1, -2)]
        );
        let r = LatticePolygon::rectangle(0, 3, 0, 5);
        assert_eq!(
            Fan::normal_fan(&r).rays(),
            &[pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1)]
        );
    }

    #[test]
    fn rejects_bad_fans() {
        assert_eq!(
            Fan::new([pt(2, 0), pt(0, 1), pt(-1, -1)]),
            Err(FanError::NotPrimitive(pt(2, 0)))
        );
        assert!(matches!(
            Fan::new([pt(1, 0), pt(0, 1), pt(-1, 0)]),
            Err(FanError::NotComplete(..))
        ));
        assert!(matches!(
            Fan::new([pt(1, 0), pt(1, 0), pt(-1, -1), pt(0, 1)]),
            Err(FanError::DuplicateRay(_))
        ));
    }

    #[test]
    fn reflexivity() {
        assert!(is_reflexive(
            &LatticePolygon::new([pt(1, 0), pt(0, 1), pt(-1, -1)]).unwrap()
        ));
        assert!(!is_reflexive(&LatticePolygon::sigma(1)));
        assert!(is_reflexive(
            &LatticePolygon::new([pt(-1, -1), pt(3, -1), pt(-1, 1)]).unwrap()
        ));
        assert!(is_reflexive(
            &LatticePolygon::new([pt(-1, -1), pt(2, -1), pt(-1, 2)]).unwrap()
        ));
        assert!(!is_reflexive(
            &LatticePolygon::new([pt(-1, -1), pt(3, -1), pt(-1, 3)]).unwrap()
        ));
    }

    #[test]
    fn gorenstein_weak_fano_examples() {
        assert!(Fan::normal_fan(&LatticePolygon::sigma(5)).is_gorenstein_weak_fano());
        assert!(Fan::normal_fan(&LatticePolygon::rectangle(0, 4, 0, 4)).is_gorenstein_weak_fano());
        let g12 = LatticePolygon::new([pt(0, 2), pt(6, 0), pt(2, 6)]).unwrap();
        let fan = Fan::normal_fan(&g12);
        assert_eq!(fan.rays(), &[pt(1, 3), pt(-3, -2), pt(2, -1)]);
        assert!(!fan.is_gorenstein_weak_fano());
        assert!(fan.anticanonical_lattice_points() >= 1);
    }

    #[test]
    fn anticanonical_counts() {
        assert_eq!(
            Fan::normal_fan(&LatticePolygon::sigma(1)).anticanonical_lattice_points(),
            10
        );
        let refined = Fan::new([pt(1, 0), pt(0, 1), pt(-1, -2), pt(0, -1)]).unwrap();
        assert_eq!(refined.anticanonical_lattice_points(), 9);
    }
}
