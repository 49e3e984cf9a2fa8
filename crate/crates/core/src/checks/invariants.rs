use serde::Serialize;

use super::{CheckError, PredicateReport};
use crate::fan::Fan;
use crate::lattice::{Hull, LatticePolygon, SpecialShape};

/// `|Δ⁽¹⁾ ∩ Z²|`, the number of interior lattice points of `Δ`.
pub fn genus(delta: &LatticePolygon) -> usize {
    delta.interior_count()
}

fn interior_polygon(delta: &LatticePolygon) -> Result<LatticePolygon, CheckError> {
    let inner = match delta.interior_hull() {
        Hull::Polygon(p) => p,
        _ => return Err(CheckError::DegenerateInterior),
    };
    if inner.point_count() < 4 {
        return Err(CheckError::GenusTooSmall(inner.point_count()));
    }
    Ok(inner)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CliffordReason {
    SigmaMultiple,
    Upsilon,
    TwoUpsilon,
    Generic,
}

/// Clifford index of a generic curve on `X_Δ`: the lattice width of `Δ⁽¹⁾`,
/// lowered by one for the exceptional shapes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CliffordPrediction {
    pub value: i64,
    pub lattice_width: i64,
    pub exceptional: bool,
    pub reason: CliffordReason,
}

pub fn clifford_prediction(delta: &LatticePolygon) -> Result<CliffordPrediction, CheckError> {
    let inner = interior_polygon(delta)?;
    let (lw, _) = inner.lattice_width();
    let reason = match inner.detect_special() {
        SpecialShape::SigmaMultiple(k) if k >= 2 => CliffordReason::SigmaMultiple,
        SpecialShape::Upsilon => CliffordReason::Upsilon,
        SpecialShape::TwoUpsilon => CliffordReason::TwoUpsilon,
        _ => CliffordReason::Generic,
    };
    let exceptional = reason != CliffordReason::Generic;
    Ok(CliffordPrediction {
        value: lw - exceptional as i64,
        lattice_width: lw,
        exceptional,
        reason,
    })
}

/// Hypotheses under which the curve row is the sum of the surface rows,
/// plus the anticanonical condition `|P_{-K} ∩ Z²| ≥ 2` on `X_{Δ⁽¹⁾}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SumFormulaHypotheses {
    pub g: usize,
    pub interior_boundary: usize,
    /// `X_{Δ⁽¹⁾}` is Gorenstein weak Fano.
    pub gorenstein_weak_fano: bool,
    /// `X_Δ` is Gorenstein weak Fano.
    pub outer_gorenstein_weak_fano: bool,
    /// `|∂Δ⁽¹⁾ ∩ Z²| ≥ g/2 + 1`.
    pub boundary_condition: bool,
    pub anticanonical_points: usize,
    pub anticanonical_condition: bool,
}

impl SumFormulaHypotheses {
    /// Either hypothesis holds, so `a = b + c` is predicted.
    pub fn sum_formula_predicted(&self) -> bool {
        self.gorenstein_weak_fano || self.boundary_condition
    }

    /// Gorenstein weak Fano passes from `X_Δ` to `X_{Δ⁽¹⁾}`.
    pub fn substitution_report(&self) -> PredicateReport {
        let holds = !self.outer_gorenstein_weak_fano || self.gorenstein_weak_fano;
        PredicateReport::new(
            "gwf_substitution",
            holds,
            "X_Delta GWF implies X_Delta1 GWF",
            &[
                ("outer_gwf", self.outer_gorenstein_weak_fano as i64),
                ("interior_gwf", self.gorenstein_weak_fano as i64),
            ],
        )
    }
}

pub fn sum_formula_hypotheses(delta: &LatticePolygon) -> Result<SumFormulaHypotheses, CheckError> {
    let inner = interior_polygon(delta)?;
    let g = inner.point_count();
    let boundary = inner.boundary_count();
    let fan = Fan::normal_fan(&inner);
    let anticanonical_points = fan.anticanonical_lattice_points();
    Ok(SumFormulaHypotheses {
        g,
        interior_boundary: boundary,
        gorenstein_weak_fano: fan.is_gorenstein_weak_fano(),
        outer_gorenstein_weak_fano: Fan::normal_fan(delta).is_gorenstein_weak_fano(),
        boundary_condition: 2 * boundary >= g + 2,
        anticanonical_points,
        anticanonical_condition: anticanonical_points >= 2,
    })
}
