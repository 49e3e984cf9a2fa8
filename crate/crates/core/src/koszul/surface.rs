//! Betti rows `b` and `c` of the toric surface embedded by `Δ⁽¹⁾`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::basis::{binomial, MonomialBasis};
use super::differential::koszul_differential;
use super::field::DEFAULT_PRIMES;
use super::rank::{default_backend, RankBackend};
use super::KoszulError;
use crate::lattice::{Hull, LatticePolygon};

/// Cell budget used when none is configured.
pub const DEFAULT_BUDGET: u128 = 50_000_000;

#[derive(Clone)]
pub struct KoszulOptions {
    pub primes: Vec<u64>,
    /// Largest admissible working-memory estimate of a single matrix, in cells.
    pub budget: u128,
    pub backend: &'static dyn RankBackend,
}

impl Default for KoszulOptions {
    fn default() -> Self {
        KoszulOptions {
            primes: DEFAULT_PRIMES.to_vec(),
            budget: DEFAULT_BUDGET,
            backend: default_backend(),
        }
    }
}

impl std::fmt::Debug for KoszulOptions {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("KoszulOptions")
            .field("primes", &self.primes)
            .field("budget", &self.budget)
            .field("backend", &self.backend.name())
            .finish()
    }
}

/// Graded pieces of the section ring used by the complexes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Piece {
    /// `{0}`.
    Zero,
    /// `Δ⁽¹⁾`.
    One,
    /// `2Δ⁽¹⁾`.
    Two,
    /// `3Δ⁽¹⁾`.
    Three,
    /// Interior points of `Δ⁽¹⁾`.
    InnerOne,
    /// Interior points of `2Δ⁽¹⁾`.
    InnerTwo,
}

impl Piece {
    /// Piece reached by one differential.
    pub fn target(self) -> Piece {
        match self {
            Piece::Zero => Piece::One,
            Piece::One => Piece::Two,
            Piece::Two => Piece::Three,
            Piece::InnerOne => Piece::InnerTwo,
            Piece::Three | Piece::InnerTwo => unreachable!("no target for {self:?}"),
        }
    }
}

/// A differential `∧^p V ⊗ V_source → ∧^{p-1} V ⊗ V_{source + Δ⁽¹⁾}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DiffKey {
    pub p: usize,
    pub source: Piece,
}

/// Monomial bases of `Δ⁽¹⁾` and its multiples.
#[derive(Clone, Debug)]
pub struct SurfaceComplex {
    pub interior: LatticePolygon,
    pub v: MonomialBasis,
    zero: MonomialBasis,
    two: MonomialBasis,
    three: MonomialBasis,
    inner_one: MonomialBasis,
    inner_two: MonomialBasis,
}

impl SurfaceComplex {
    /// Requires a two-dimensional `Δ⁽¹⁾` with at least four lattice points.
    pub fn new(interior: &LatticePolygon) -> Result<Self, KoszulError> {
        let g = interior.point_count();
        if g < 4 {
            return Err(KoszulError::GenusTooSmall(g));
        }
        let two = interior.dilate(2);
        Ok(SurfaceComplex {
            interior: interior.clone(),
            v: MonomialBasis::new(interior.lattice_points()),
            zero: MonomialBasis::constant(),
            two: MonomialBasis::new(two.lattice_points()),
            three: MonomialBasis::new(interior.dilate(3).lattice_points()),
            inner_one: MonomialBasis::new(interior.interior_points()),
            inner_two: MonomialBasis::new(two.interior_points()),
        })
    }

    /// From the outer polygon `Δ`.
    pub fn from_outer(delta: &LatticePolygon) -> Result<Self, KoszulError> {
        match delta.interior_hull() {
            Hull::Polygon(p) => SurfaceComplex::new(&p),
            _ => Err(KoszulError::DegenerateInterior),
        }
    }

    pub fn genus(&self) -> usize {
        self.v.len()
    }

    pub fn basis(&self, piece: Piece) -> &MonomialBasis {
        match piece {
            Piece::Zero => &self.zero,
            Piece::One => &self.v,
            Piece::Two => &self.two,
            Piece::Three => &self.three,
            Piece::InnerOne => &self.inner_one,
            Piece::InnerTwo => &self.inner_two,
        }
    }

    pub fn shape(&self, key: DiffKey) -> (u128, u128, u128) {
        let n = self.genus();
        let cols = binomial(n, key.p).saturating_mul(self.basis(key.source).len() as u128);
        let rows = if key.p == 0 {
            0
        } else {
            binomial(n, key.p - 1).saturating_mul(self.basis(key.source.target()).len() as u128)
        };
        (rows, cols, cols.saturating_mul(key.p as u128))
    }

    pub fn differential(
        &self,
        key: DiffKey,
        prime: u64,
    ) -> Result<crate::koszul::KoszulMatrix, KoszulError> {
        koszul_differential(
            key.p,
            self.basis(key.source),
            self.basis(key.source.target()),
            &self.v,
            prime,
        )
    }

    /// Differentials whose ranks determine `b` and `c`.
    pub fn betti_plan(&self) -> Vec<DiffKey> {
        let g = self.genus();
        let mut keys = Vec::new();
        for l in 1..=g - 3 {
            keys.push(DiffKey {
                p: l,
                source: Piece::One,
            });
            keys.push(DiffKey {
                p: l + 1,
                source: Piece::Zero,
            });
            keys.push(DiffKey {
                p: l - 1,
                source: Piece::InnerOne,
            });
        }
        keys.sort();
        keys.dedup();
        keys
    }

    /// Differentials of the untwisted complex computing `dim K_{g-2-ℓ,2}`.
    pub fn dual_plan(&self) -> Vec<DiffKey> {
        let g = self.genus();
        let mut keys = Vec::new();
        for l in 1..=g - 3 {
            keys.push(DiffKey {
                p: g - 2 - l,
                source: Piece::Two,
            });
            keys.push(DiffKey {
                p: g - 1 - l,
                source: Piece::One,
            });
        }
        keys.sort();
        keys.dedup();
        keys
    }

    /// Refuses plans whose largest matrix exceeds the budget.
    pub fn check_budget(
        &self,
        keys: &[DiffKey],
        opts: &KoszulOptions,
    ) -> Result<u128, KoszulError> {
        let estimated = keys
            .iter()
            .map(|&k| {
                let (r, c, nnz) = self.shape(k);
                opts.backend.estimated_cells(r, c, nnz)
            })
            .max()
            .unwrap_or(0);
        if estimated > opts.budget {
            return Err(KoszulError::BudgetExceeded {
                estimated,
                budget: opts.budget,
            });
        }
        Ok(estimated)
    }

    /// Ranks of the given differentials for every prime, computed in parallel.
    pub fn ranks(&self, keys: &[DiffKey], opts: &KoszulOptions) -> Result<RankTable, KoszulError> {
        self.check_budget(keys, opts)?;
        let jobs: Vec<(u64, DiffKey)> = opts
            .primes
            .iter()
            .flat_map(|&p| keys.iter().map(move |&k| (p, k)))
            .collect();
        let results: Result<Vec<_>, KoszulError> = jobs
            .par_iter()
            .map(|&(prime, key)| {
                let m = self.differential(key, prime)?;
                Ok(((prime, key), (m.cols(), opts.backend.rank(&m))))
            })
            .collect();
        let mut table = RankTable::default();
        for ((prime, key), (cols, rank)) in results? {
            table.cols.insert(key, cols);
            table.ranks.entry(key).or_default().insert(prime, rank);
        }
        Ok(table)
    }
}

/// Ranks indexed by differential and prime.
#[derive(Clone, Debug, Default)]
pub struct RankTable {
    cols: BTreeMap<DiffKey, usize>,
    ranks: BTreeMap<DiffKey, BTreeMap<u64, usize>>,
}

impl RankTable {
    /// Rank at one prime.
    pub fn rank_at(&self, key: DiffKey, prime: u64) -> usize {
        self.ranks[&key][&prime]
    }

    /// Largest rank over the primes; ranks mod p never exceed the rank over Q.
    pub fn rank(&self, key: DiffKey) -> usize {
        self.ranks[&key].values().copied().max().unwrap()
    }

    pub fn nullity(&self, key: DiffKey) -> usize {
        self.cols[&key] - self.rank(key)
    }

    pub fn nullity_at(&self, key: DiffKey, prime: u64) -> usize {
        self.cols[&key] - self.rank_at(key, prime)
    }

    pub fn primes_agree(&self) -> bool {
        self.ranks
            .values()
            .all(|m| m.values().all(|&r| Some(&r) == m.values().next()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeRows {
    pub prime: u64,
    pub b: Vec<u64>,
    pub c: Vec<u64>,
}

/// Rows `b_ℓ = dim K_{ℓ,1}(X, L)` and `c_ℓ = dim K_{ℓ-1,1}(X; K, L)` for
/// `ℓ = 1, …, g-3`, stored at index `ℓ - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceBetti {
    pub g: usize,
    pub b: Vec<u64>,
    pub c: Vec<u64>,
    pub primes: Vec<u64>,
    pub per_prime: Vec<PrimeRows>,
    pub primes_agree: bool,
}

impl SurfaceBetti {
    /// `b_ℓ` with the convention `b_ℓ = 0` outside `1..=g-3`.
    pub fn b(&self, l: i64) -> u64 {
        row_entry(&self.b, l)
    }

    pub fn c(&self, l: i64) -> u64 {
        row_entry(&self.c, l)
    }
}

pub(crate) fn row_entry(row: &[u64], l: i64) -> u64 {
    if l >= 1 && (l as usize) <= row.len() {
        row[l as usize - 1]
    } else {
        0
    }
}

fn rows_from(
    cx: &SurfaceComplex,
    nullity: impl Fn(DiffKey) -> usize,
    rank: impl Fn(DiffKey) -> usize,
) -> (Vec<u64>, Vec<u64>) {
    let g = cx.genus();
    let mut b = Vec::new();
    let mut c = Vec::new();
    for l in 1..=g - 3 {
        let top = nullity(DiffKey {
            p: l,
            source: Piece::One,
        });
        let incoming = rank(DiffKey {
            p: l + 1,
            source: Piece::Zero,
        });
        b.push((top - incoming) as u64);
        c.push(nullity(DiffKey {
            p: l - 1,
            source: Piece::InnerOne,
        }) as u64);
    }
    (b, c)
}

pub fn surface_betti(
    interior: &LatticePolygon,
    opts: &KoszulOptions,
) -> Result<SurfaceBetti, KoszulError> {
    let cx = SurfaceComplex::new(interior)?;
    surface_betti_of(&cx, opts)
}

pub fn surface_betti_of(
    cx: &SurfaceComplex,
    opts: &KoszulOptions,
) -> Result<SurfaceBetti, KoszulError> {
    let table = cx.ranks(&cx.betti_plan(), opts)?;
    let (b, c) = rows_from(cx, |k| table.nullity(k), |k| table.rank(k));
    let per_prime = opts
        .primes
        .iter()
        .map(|&p| {
            let (b, c) = rows_from(cx, |k| table.nullity_at(k, p), |k| table.rank_at(k, p));
            PrimeRows { prime: p, b, c }
        })
        .collect();
    Ok(SurfaceBetti {
        g: cx.genus(),
        b,
        c,
        primes: opts.primes.clone(),
        per_prime,
        primes_agree: table.primes_agree(),
    })
}

/// `c_ℓ` recomputed as `dim K_{g-2-ℓ,2}(X, L)` from the untwisted complex.
pub fn untwisted_c(cx: &SurfaceComplex, opts: &KoszulOptions) -> Result<Vec<u64>, KoszulError> {
    let table = cx.ranks(&cx.dual_plan(), opts)?;
    let g = cx.genus();
    Ok((1..=g - 3)
        .map(|l| {
            let kernel = table.nullity(DiffKey {
                p: g - 2 - l,
                source: Piece::Two,
            });
            let image = table.rank(DiffKey {
                p: g - 1 - l,
                source: Piece::One,
            });
            (kernel - image) as u64
        })
        .collect())
}
