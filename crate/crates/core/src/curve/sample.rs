use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::poly::LaurentPolynomial;
use super::CurveError;
use crate::koszul::PrimeField;
use crate::lattice::{LatticePoint, LatticePolygon};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SamplingMode {
    /// Coefficients on every lattice point of `Δ`.
    Full,
    /// Coefficients on the boundary points of `Δ` only.
    Boundary,
}

/// Coefficients of `f = Σ c_m x^m` modulo a prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientAssignment {
    pub support: Vec<LatticePoint>,
    pub values: Vec<u64>,
    pub prime: u64,
    pub seed: Option<u64>,
}

impl CoefficientAssignment {
    /// A single monomial with coefficient 1.
    pub fn monomial(m: LatticePoint, prime: u64) -> Self {
        CoefficientAssignment {
            support: vec![m],
            values: vec![1],
            prime,
            seed: None,
        }
    }

    /// Reduces an integer polynomial; every coefficient must stay nonzero.
    pub fn from_polynomial(f: &LaurentPolynomial, prime: u64) -> Result<Self, CurveError> {
        let field = PrimeField::new(prime);
        let mut support = Vec::new();
        let mut values = Vec::new();
        for t in f.terms() {
            let v = field.from_i64(t.c);
            if v == 0 {
                return Err(CurveError::CoefficientVanishes {
                    term: LatticePoint::new(t.i, t.j),
                    prime,
                });
            }
            support.push(LatticePoint::new(t.i, t.j));
            values.push(v);
        }
        Ok(CoefficientAssignment {
            support,
            values,
            prime,
            seed: None,
        })
    }

    pub fn terms(&self) -> impl Iterator<Item = (LatticePoint, u64)> + '_ {
        self.support
            .iter()
            .copied()
            .zip(self.values.iter().copied())
    }
}

/// Uniform nonzero coefficients on the chosen support, determined by
/// `(seed, prime, mode)`.
pub fn sample_f(
    delta: &LatticePolygon,
    prime: u64,
    seed: u64,
    mode: SamplingMode,
) -> CoefficientAssignment {
    let support = match mode {
        SamplingMode::Full => delta.lattice_points(),
        SamplingMode::Boundary => delta.boundary_points(),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(prime);
    let values = support.iter().map(|_| rng.gen_range(1..prime)).collect();
    CoefficientAssignment {
        support,
        values,
        prime,
        seed: Some(seed),
    }
}

/// Seed of sample `i` derived from a master seed.
pub fn sample_seed(master: u64, i: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(master);
    rng.set_stream(i);
    rng.next_u64()
}
