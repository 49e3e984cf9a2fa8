use std::collections::BTreeSet;

use serde::Serialize;

use super::{Fan, FanError};
use crate::lattice::{
    EdgeInequality, Hull, LatticePoint, LatticePolygon, RationalPoint, RationalRegion,
};

/// Torus-invariant divisor `Σ a_v D_v` on the surface of a fan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ToricDivisor {
    fan: Fan,
    coefficients: Vec<i64>,
}

impl ToricDivisor {
    pub fn new(fan: &Fan, coefficients: Vec<i64>) -> Result<Self, FanError> {
        if coefficients.len() != fan.len() {
            return Err(FanError::CoefficientCount {
                expected: fan.len(),
                got: coefficients.len(),
            });
        }
        Ok(ToricDivisor {
            fan: fan.clone(),
            coefficients,
        })
    }

    /// `a_v = -min_{m ∈ P} ⟨m, v⟩`, so that the divisor polygon is `P` whenever
    /// the fan refines the normal fan of `P`.
    pub fn from_polygon(fan: &Fan, p: &LatticePolygon) -> Self {
        let coefficients = fan
            .rays()
            .iter()
            .map(|&v| -p.vertices().iter().map(|m| m.dot(v)).min().unwrap())
            .collect();
        ToricDivisor {
            fan: fan.clone(),
            coefficients,
        }
    }

    /// The canonical divisor `-Σ D_v`.
    pub fn canonical(fan: &Fan) -> Self {
        ToricDivisor {
            fan: fan.clone(),
            coefficients: vec![-1; fan.len()],
        }
    }

    pub fn anticanonical(fan: &Fan) -> Self {
        ToricDivisor {
            fan: fan.clone(),
            coefficients: vec![1; fan.len()],
        }
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    /// Sum of two divisors on the same fan.
    pub fn plus(&self, other: &ToricDivisor) -> ToricDivisor {
        assert_eq!(self.fan, other.fan, "divisors live on different fans");
        let coefficients = self
            .coefficients
            .iter()
            .zip(&other.coefficients)
            .map(|(a, b)| a + b)
            .collect();
        ToricDivisor {
            fan: self.fan.clone(),
            coefficients,
        }
    }

    fn inequalities(&self) -> Vec<EdgeInequality> {
        self.fan
            .rays()
            .iter()
            .zip(&self.coefficients)
            .map(|(&normal, &offset)| EdgeInequality { normal, offset })
            .collect()
    }

    /// `⋂_v {x : ⟨x, v⟩ ≥ -a_v}`.
    pub fn polygon(&self) -> RationalRegion {
        RationalRegion::from_inequalities(&self.inequalities())
    }

    /// Vertex criterion: for every cone, the point where both defining lines
    /// meet lies in the polygon.
    pub fn is_base_point_free(&self) -> bool {
        let region = self.polygon();
        let n = self.fan.len();
        let ineqs = self.inequalities();
        (0..n).all(|i| {
            let (h1, h2) = (ineqs[i], ineqs[(i + 1) % n]);
            match cone_vertex(&h1, &h2) {
                Some(q) => region.contains(&q),
                None => false,
            }
        })
    }
}

fn cone_vertex(h1: &EdgeInequality, h2: &EdgeInequality) -> Option<RationalPoint> {
    let det = h1.normal.det(h2.normal) as i128;
    if det == 0 {
        return None;
    }
    let (r1, r2) = (-(h1.offset as i128), -(h2.offset as i128));
    let x = r1 * h2.normal.y as i128 - r2 * h1.normal.y as i128;
    let y = h1.normal.x as i128 * r2 - h2.normal.x as i128 * r1;
    Some(RationalPoint {
        x: num_rational::Ratio::new(x, det),
        y: num_rational::Ratio::new(y, det),
    })
}

/// Outcome of checking that `P_{D_f} = Δ` and `P_{D_f + K} = Δ⁽¹⁾` on the
/// minimal resolution of the normal fan of `Δ`, with both divisors
/// base-point free.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FujitaReport {
    pub resolved: Fan,
    pub inserted: Vec<LatticePoint>,
    pub d_f: Vec<i64>,
    pub p_d_f: LatticePolygon,
    pub p_l: LatticePolygon,
}

pub fn fujita_check(delta: &LatticePolygon) -> Result<FujitaReport, FanError> {
    let interior = match delta.interior_hull() {
        Hull::Polygon(p) => p,
        _ => return Err(crate::lattice::LatticeError::DegenerateInterior.into()),
    };
    let res = Fan::normal_fan(delta).minimal_resolution();
    let fan = res.refined;
    let d_f = ToricDivisor::from_polygon(&fan, delta);
    let l = d_f.plus(&ToricDivisor::canonical(&fan));
    let fail = |s: String| Err(FanError::AssertionFailure(s));

    let p_d_f = match d_f.polygon().to_lattice_polygon() {
        Some(p) if p == *delta => p,
        other => return fail(format!("P_(D_f) = {other:?} differs from {delta}")),
    };
    let p_l = match l.polygon().to_lattice_polygon() {
        Some(p) if p == interior => p,
        other => return fail(format!("P_L = {other:?} differs from {interior}")),
    };
    if !d_f.is_base_point_free() {
        return fail("D_f is not base-point free".into());
    }
    if !l.is_base_point_free() {
        return fail("D_f + K is not base-point free".into());
    }
    Ok(FujitaReport {
        resolved: fan,
        inserted: res.inserted,
        d_f: d_f.coefficients,
        p_d_f,
        p_l,
    })
}

/// Whether `{a + b : a ∈ A, b ∈ B} = C` as sets.
pub fn minkowski_point_sum_surjective(
    a: &[LatticePoint],
    b: &[LatticePoint],
    c: &[LatticePoint],
) -> bool {
    let sums: BTreeSet<LatticePoint> = a
        .iter()
        .flat_map(|&p| b.iter().map(move |&q| p + q))
        .collect();
    let target: BTreeSet<LatticePoint> = c.iter().copied().collect();
    sums == target
}
