//! Rank computation backends, selectable by name.

use std::collections::HashMap;

use rayon::prelude::*;

use super::echelon::Echelon;
use super::field::PrimeField;
use super::matrix::KoszulMatrix;

/// Blocks with at most this many cells are eliminated densely.
const DENSE_BLOCK_CELLS: usize = 1 << 18;

pub trait RankBackend: Send + Sync {
    fn name(&self) -> &'static str;

    fn rank(&self, m: &KoszulMatrix) -> usize;

    /// Working-memory estimate, in matrix cells, used by the budget guard.
    fn estimated_cells(&self, _rows: u128, _cols: u128, nnz: u128) -> u128 {
        nnz
    }
}

/// Splits the matrix into connected components of its row/column incidence
/// graph and eliminates each block separately.
pub struct BlockedBackend;

/// Sparse elimination of the whole matrix.
pub struct SparseBackend;

/// Dense Gaussian elimination of the whole matrix.
pub struct DenseBackend;

static BACKENDS: &[&dyn RankBackend] = &[&BlockedBackend, &SparseBackend, &DenseBackend];

pub fn backends() -> &'static [&'static dyn RankBackend] {
    BACKENDS
}

pub fn backend(name: &str) -> Option<&'static dyn RankBackend> {
    BACKENDS.iter().copied().find(|b| b.name() == name)
}

pub fn default_backend() -> &'static dyn RankBackend {
    &BlockedBackend
}

impl RankBackend for SparseBackend {
    fn name(&self) -> &'static str {
        "sparse"
    }

    fn rank(&self, m: &KoszulMatrix) -> usize {
        Echelon::of(m).rank()
    }
}

impl RankBackend for DenseBackend {
    fn name(&self) -> &'static str {
        "dense"
    }

    fn rank(&self, m: &KoszulMatrix) -> usize {
        dense_rank(m.to_dense(), &m.field())
    }

    fn estimated_cells(&self, rows: u128, cols: u128, _nnz: u128) -> u128 {
        rows.saturating_mul(cols)
    }
}

impl RankBackend for BlockedBackend {
    fn name(&self) -> &'static str {
        "blocked"
    }

    fn rank(&self, m: &KoszulMatrix) -> usize {
        let field = m.field();
        components(m)
            .par_iter()
            .map(|b| block_rank(m, b, &field))
            .sum()
    }
}

struct Block {
    cols: Vec<usize>,
    rows: Vec<u32>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Connected components; nodes `0..rows` are rows, `rows..rows+cols` columns.
fn components(m: &KoszulMatrix) -> Vec<Block> {
    let n = m.rows() + m.cols();
    let mut parent: Vec<usize> = (0..n).collect();
    for (j, col) in m.columns().iter().enumerate() {
        let cj = m.rows() + j;
        for &(r, _) in col {
            let (a, b) = (find(&mut parent, r as usize), find(&mut parent, cj));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut blocks: HashMap<usize, Block> = HashMap::new();
    for (j, col) in m.columns().iter().enumerate() {
        if col.is_empty() {
            continue;
        }
        let root = find(&mut parent, m.rows() + j);
        blocks
            .entry(root)
            .or_insert_with(|| Block {
                cols: Vec::new(),
                rows: Vec::new(),
            })
            .cols
            .push(j);
    }
    for r in 0..m.rows() {
        let root = find(&mut parent, r);
        if let Some(b) = blocks.get_mut(&root) {
            b.rows.push(r as u32);
        }
    }
    let mut out: Vec<Block> = blocks.into_values().collect();
    out.sort_by_key(|b| b.cols[0]);
    out
}

fn block_rank(m: &KoszulMatrix, b: &Block, field: &PrimeField) -> usize {
    let local: HashMap<u32, u32> = b
        .rows
        .iter()
        .enumerate()
        .map(|(i, &r)| (r, i as u32))
        .collect();
    if b.rows.len() * b.cols.len() <= DENSE_BLOCK_CELLS {
        let mut d = vec![vec![0u64; b.cols.len()]; b.rows.len()];
        for (jj, &j) in b.cols.iter().enumerate() {
            for &(r, v) in m.column(j) {
                d[local[&r] as usize][jj] = v as u64;
            }
        }
        dense_rank(d, field)
    } else {
        let mut e = Echelon::new(b.rows.len(), field.modulus());
        for &j in &b.cols {
            let c: Vec<(u32, u32)> = m.column(j).iter().map(|&(r, v)| (local[&r], v)).collect();
            e.insert(&c);
        }
        e.rank()
    }
}

/// Rank of a dense row-major matrix by Gaussian elimination.
pub fn dense_rank(mut a: Vec<Vec<u64>>, f: &PrimeField) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, p);
        let inv = f.inv(a[rank][c]);
        for x in a[rank][c..].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == rank || row[c] == 0 {
                continue;
            }
            let factor = f.neg(row[c]);
            for (x, &y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if y != 0 {
                    *x = f.add(*x, f.mul(factor, y));
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
