use super::basis::{ExteriorIndex, MonomialBasis};
use super::field::PrimeField;
use super::matrix::KoszulMatrix;
use super::KoszulError;

/// Matrix of the Koszul differential
/// `∧^p V ⊗ V_source → ∧^{p-1} V ⊗ V_target`,
/// `v_{s₀} ∧ … ∧ v_{s_{p-1}} ⊗ w ↦ Σ_i (-1)^i v_{s₀} ∧ … v̂_{s_i} … ⊗ (v_{s_i} + w)`.
///
/// Column `rank(S)·|source| + idx(w)`, row `rank(S')·|target| + idx(u)`.
pub fn koszul_differential(
    p: usize,
    source: &MonomialBasis,
    target: &MonomialBasis,
    v: &MonomialBasis,
    prime: u64,
) -> Result<KoszulMatrix, KoszulError> {
    let n = v.len();
    let dom = ExteriorIndex::new(n, p);
    let cols = dom.len() * source.len();
    if p == 0 {
        return Ok(KoszulMatrix::zero(0, cols, prime));
    }
    let cod = ExteriorIndex::new(n, p - 1);
    let rows = cod.len() * target.len();
    let f = PrimeField::new(prime);
    let minus_one = f.neg(1);

    let mut columns = Vec::with_capacity(cols);
    let mut face = vec![0usize; p - 1];
    for subset in dom.subsets() {
        for &w in source.points() {
            let mut col = Vec::with_capacity(p);
            for i in 0..p {
                face[..i].copy_from_slice(&subset[..i]);
                face[i..].copy_from_slice(&subset[i + 1..]);
                let u = v.points()[subset[i]] + w;
                let t = target.index_of(u).ok_or(KoszulError::RegionMismatch(u))?;
                let row = cod.rank(&face) * target.len() + t;
                col.push((row as u32, if i % 2 == 0 { 1 } else { minus_one }));
            }
            columns.push(col);
        }
    }
    Ok(KoszulMatrix::from_columns(rows, prime, columns))
}
