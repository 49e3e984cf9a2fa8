//! Koszul complexes of the toric surface `X ⊂ P^{g-1}` embedded by `Δ⁽¹⁾`,
//! assembled as sparse matrices over prime fields.

mod basis;
mod differential;
mod echelon;
mod field;
mod matrix;
mod rank;
mod surface;

use thiserror::Error;

use crate::lattice::LatticePoint;

pub use basis::{binomial, ExteriorIndex, MonomialBasis, Subsets};
pub use differential::koszul_differential;
pub use echelon::{kernel_basis, Echelon, Scratch};
pub use field::{is_prime, PrimeField, DEFAULT_PRIMES};
pub use matrix::{KoszulMatrix, SparseVec};
pub use rank::{
    backend, backends, default_backend, dense_rank, BlockedBackend, DenseBackend, RankBackend,
    SparseBackend,
};
pub(crate) use surface::row_entry;
pub use surface::{
    surface_betti, surface_betti_of, untwisted_c, DiffKey, KoszulOptions, Piece, PrimeRows,
    RankTable, SurfaceBetti, SurfaceComplex, DEFAULT_BUDGET,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KoszulError {
    #[error("interior polygon is not two-dimensional")]
    DegenerateInterior,
    #[error("genus {0} is below 4")]
    GenusTooSmall(usize),
    #[error("monomial {0} falls outside the target region")]
    RegionMismatch(LatticePoint),
    #[error("estimated {estimated} matrix cells exceed the budget of {budget}")]
    BudgetExceeded { estimated: u128, budget: u128 },
}
