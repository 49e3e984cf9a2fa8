//! The map `μ_f : K_{ℓ-1,1}(X; K, L) → K_{ℓ-1,2}(X, L)` induced by
//! multiplication with `f`.

use std::collections::HashMap;

use super::sample::CoefficientAssignment;
use super::CurveError;
use crate::koszul::{
    kernel_basis, DiffKey, Echelon, ExteriorIndex, KoszulError, KoszulMatrix, MonomialBasis, Piece,
    PrimeField, SparseVec, SurfaceComplex,
};

/// Matrix of `∧^{ℓ-1} V ⊗ V_{Δ⁽²⁾} → ∧^{ℓ-1} V ⊗ V_{2Δ⁽¹⁾}`,
/// `v_S ⊗ w ↦ Σ_m c_m v_S ⊗ (m + w)`.
pub fn mu_matrix(
    f: &CoefficientAssignment,
    l: usize,
    cx: &SurfaceComplex,
) -> Result<KoszulMatrix, CurveError> {
    multiplication_matrix(
        f,
        l - 1,
        cx.basis(Piece::InnerOne),
        cx.basis(Piece::Two),
        cx.genus(),
    )
}

/// Multiplication by `f` on `∧^p V ⊗ V_source → ∧^p V ⊗ V_target`, `dim V = n`.
pub fn multiplication_matrix(
    f: &CoefficientAssignment,
    p: usize,
    source: &MonomialBasis,
    target: &MonomialBasis,
    n: usize,
) -> Result<KoszulMatrix, CurveError> {
    let wedge = ExteriorIndex::new(n, p).len();
    let columns = (0..wedge * source.len())
        .map(|j| {
            let col = mu_column(f, j as u32, 1, source, target)?;
            Ok(col.into_iter().map(|(r, v)| (r, v as u64)).collect())
        })
        .collect::<Result<Vec<_>, CurveError>>()?;
    Ok(KoszulMatrix::from_columns(
        wedge * target.len(),
        f.prime,
        columns,
    ))
}

/// `x · μ_f(e_j)`.
fn mu_column(
    f: &CoefficientAssignment,
    j: u32,
    x: u64,
    src: &MonomialBasis,
    tgt: &MonomialBasis,
) -> Result<Vec<(u32, u32)>, CurveError> {
    let field = PrimeField::new(f.prime);
    let (s, w) = (j as usize / src.len(), j as usize % src.len());
    let wpt = src.points()[w];
    let mut out = Vec::with_capacity(f.support.len());
    for (m, c) in f.terms() {
        let u = m + wpt;
        let t = tgt
            .index_of(u)
            .ok_or(CurveError::Koszul(KoszulError::RegionMismatch(u)))?;
        out.push(((s * tgt.len() + t) as u32, field.mul(c, x) as u32));
    }
    Ok(out)
}

/// `μ_f` applied to a sparse vector of `∧^{ℓ-1} V ⊗ V_{Δ⁽²⁾}`.
fn mu_apply(
    f: &CoefficientAssignment,
    v: &[(u32, u32)],
    cx: &SurfaceComplex,
) -> Result<SparseVec, CurveError> {
    let field = PrimeField::new(f.prime);
    let (src, tgt) = (cx.basis(Piece::InnerOne), cx.basis(Piece::Two));
    let mut acc: HashMap<u32, u64> = HashMap::new();
    for &(j, x) in v {
        for (r, y) in mu_column(f, j, x as u64, src, tgt)? {
            let e = acc.entry(r).or_insert(0);
            *e = field.add(*e, y as u64);
        }
    }
    let mut out: SparseVec = acc
        .into_iter()
        .filter(|&(_, x)| x != 0)
        .map(|(r, x)| (r, x as u32))
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// Sample-independent data for one `(ℓ, prime)`: a kernel basis of the top
/// row, the echelon of the incoming bottom differential, and the outgoing
/// bottom differential.
pub struct InducedSetup<'a> {
    pub l: usize,
    pub prime: u64,
    cx: &'a SurfaceComplex,
    kernel: Vec<SparseVec>,
    image: Echelon,
    outgoing: KoszulMatrix,
}

impl<'a> InducedSetup<'a> {
    pub fn new(cx: &'a SurfaceComplex, l: usize, prime: u64) -> Result<Self, CurveError> {
        assert!(l >= 1 && l + 2 <= cx.genus(), "ℓ = {l} out of range");
        let top = cx.differential(
            DiffKey {
                p: l - 1,
                source: Piece::InnerOne,
            },
            prime,
        )?;
        let incoming = cx.differential(
            DiffKey {
                p: l,
                source: Piece::One,
            },
            prime,
        )?;
        let outgoing = cx.differential(
            DiffKey {
                p: l - 1,
                source: Piece::Two,
            },
            prime,
        )?;
        Ok(InducedSetup {
            l,
            prime,
            cx,
            kernel: kernel_basis(&top),
            image: Echelon::of(&incoming),
            outgoing,
        })
    }

    /// `dim K_{ℓ-1,1}(X; K, L)`.
    pub fn domain_dim(&self) -> usize {
        self.kernel.len()
    }

    /// Rank of `μ_f` on cohomology.
    pub fn rank(&self, f: &CoefficientAssignment) -> Result<usize, CurveError> {
        assert_eq!(
            f.prime, self.prime,
            "assignment taken modulo a different prime"
        );
        let mut scratch = self.image.scratch();
        let mut residuals = Echelon::new(self.image.rows(), self.prime);
        for n in &self.kernel {
            let image = mu_apply(f, n, self.cx)?;
            if !self.outgoing.apply(&image).is_empty() {
                return Err(CurveError::ConsistencyFailure(format!(
                    "μ_f maps a cycle outside the kernel of the outgoing differential (ℓ = {})",
                    self.l
                )));
            }
            let residual = self.image.reduce(&image, &mut scratch);
            if !residual.is_empty() {
                residuals.insert(&residual);
            }
        }
        Ok(residuals.rank())
    }
}

/// Whether multiplication by the monomial `x^m`, `m ∈ Δ⁽¹⁾`, vanishes on
/// cohomology.
pub fn interior_mu_vanishing(
    l: usize,
    m: crate::lattice::LatticePoint,
    cx: &SurfaceComplex,
    prime: u64,
) -> Result<bool, CurveError> {
    if !cx.interior.contains(m) {
        return Err(CurveError::NotInInterior(m));
    }
    let setup = InducedSetup::new(cx, l, prime)?;
    if setup.domain_dim() == 0 {
        return Ok(true);
    }
    Ok(setup.rank(&CoefficientAssignment::monomial(m, prime))? == 0)
}
