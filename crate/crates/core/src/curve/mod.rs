//! Betti table of the canonical model of a generic curve `C_f ⊂ X_Δ`,
//! obtained from the surface rows `b`, `c` and the rank of `μ_f` on
//! cohomology.

mod betti;
mod induced;
mod poly;
mod sample;

use thiserror::Error;

use crate::koszul::KoszulError;
use crate::lattice::LatticePoint;

pub use betti::{
    constancy_experiment, curve_betti, ConstancyReport, CurveBetti, CurveOptions, InducedRankResult,
};
pub use induced::{interior_mu_vanishing, mu_matrix, multiplication_matrix, InducedSetup};
pub use poly::{LaurentPolynomial, ParseError, Term};
pub use sample::{sample_f, sample_seed, CoefficientAssignment, SamplingMode};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error(transparent)]
    Koszul(#[from] KoszulError),
    #[error("consistency failure: {0}")]
    ConsistencyFailure(String),
    #[error("coefficient of x^{term} vanishes modulo {prime}")]
    CoefficientVanishes { term: LatticePoint, prime: u64 },
    #[error("monomial {0} of f lies outside the polygon")]
    SupportOutsidePolygon(LatticePoint),
    #[error("{0} is not a point of the interior polygon")]
    NotInInterior(LatticePoint),
}
