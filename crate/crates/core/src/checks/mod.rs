//! Combinatorial invariants and the predicates relating them to Betti rows.

mod enumerate;
mod invariants;
mod predicates;

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

pub use enumerate::{
    anticanonical_width_scan, enumerate_polygons, interior_boundary_scan, reflexive_classes,
    EnumerationError, InteriorBoundaryReport, DEFAULT_MAX_POINTS,
};
pub use invariants::{
    clifford_prediction, genus, sum_formula_hypotheses, CliffordPrediction, CliffordReason,
    SumFormulaHypotheses,
};
pub use predicates::{
    duality_identity_check, duality_rhs, exactness_check, green_check, hering_schenck_check,
    linear_strand_check, serre_duality_check, sum_formula_check,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CheckError {
    #[error("interior polygon is not two-dimensional")]
    DegenerateInterior,
    #[error("genus {0} is below 4")]
    GenusTooSmall(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Outcome of one named check with the integers that justify it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredicateReport {
    pub name: String,
    pub status: Status,
    pub detail: String,
    pub witness: BTreeMap<String, i64>,
}

impl PredicateReport {
    pub fn new(
        name: &str,
        holds: bool,
        detail: impl Into<String>,
        witness: &[(&str, i64)],
    ) -> Self {
        assert!(
            holds || !witness.is_empty(),
            "a failing check needs a witness"
        );
        PredicateReport {
            name: name.to_string(),
            status: if holds { Status::Pass } else { Status::Fail },
            detail: detail.into(),
            witness: witness.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        }
    }

    pub fn skipped(name: &str, detail: impl Into<String>) -> Self {
        PredicateReport {
            name: name.to_string(),
            status: Status::Skipped,
            detail: detail.into(),
            witness: BTreeMap::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Passed or skipped.
    pub fn ok(&self) -> bool {
        self.status != Status::Fail
    }
}
