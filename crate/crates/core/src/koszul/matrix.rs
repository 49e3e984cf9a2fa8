use std::fmt::Write as _;

use super::field::PrimeField;

/// Sparse column: `(row, value)` pairs with strictly increasing rows and
/// values in `[1, p-1]`.
pub type SparseVec = Vec<(u32, u32)>;

/// Sparse matrix over `Z/pZ`, stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulMatrix {
    rows: usize,
    prime: u64,
    columns: Vec<SparseVec>,
}

impl KoszulMatrix {
    pub fn zero(rows: usize, cols: usize, prime: u64) -> Self {
        KoszulMatrix {
            rows,
            prime,
            columns: vec![Vec::new(); cols],
        }
    }

    /// Builds from columns, sorting rows, summing duplicates and dropping zeros.
    pub fn from_columns(rows: usize, prime: u64, columns: Vec<Vec<(u32, u64)>>) -> Self {
        let f = PrimeField::new(prime);
        let columns = columns
            .into_iter()
            .map(|c| normalize(&f, rows, c))
            .collect();
        KoszulMatrix {
            rows,
            prime,
            columns,
        }
    }

    pub fn from_triples(
        rows: usize,
        cols: usize,
        prime: u64,
        triples: impl IntoIterator<Item = (usize, usize, u64)>,
    ) -> Self {
        let mut columns = vec![Vec::new(); cols];
        for (r, c, v) in triples {
            columns[c].push((r as u32, v));
        }
        KoszulMatrix::from_columns(rows, prime, columns)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.prime)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn column(&self, j: usize) -> &[(u32, u32)] {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    /// Sorted `(row, col, value)` triples.
    pub fn triples(&self) -> Vec<(usize, usize, u64)> {
        let mut t: Vec<_> = self
            .columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |&(r, v)| (r as usize, c, v as u64)))
            .collect();
        t.sort_unstable();
        t
    }

    /// Text dump: a header line `rows cols prime nnz`, then one
    /// `row col value` line per entry in sorted order.
    pub fn dump(&self) -> String {
        let mut s = format!(
            "{} {} {} {}\n",
            self.rows,
            self.cols(),
            self.prime,
            self.nnz()
        );
        for (r, c, v) in self.triples() {
            writeln!(s, "{r} {c} {v}").unwrap();
        }
        s
    }

    /// Parses the output of [`KoszulMatrix::dump`].
    pub fn parse_dump(text: &str) -> Option<Self> {
        let mut lines = text.lines();
        let head: Vec<u64> = lines
            .next()?
            .split_whitespace()
            .map(|t| t.parse().ok())
            .collect::<Option<_>>()?;
        let [rows, cols, prime, nnz] = head[..] else {
            return None;
        };
        let mut triples = Vec::new();
        for line in lines.filter(|l| !l.trim().is_empty()) {
            let t: Vec<u64> = line
                .split_whitespace()
                .map(|t| t.parse().ok())
                .collect::<Option<_>>()?;
            let [r, c, v] = t[..] else { return None };
            triples.push((r as usize, c as usize, v));
        }
        (triples.len() as u64 == nnz)
            .then(|| KoszulMatrix::from_triples(rows as usize, cols as usize, prime, triples))
    }

    /// `self · v` for a sparse column vector `v` indexed by the columns of `self`.
    pub fn apply(&self, v: &[(u32, u32)]) -> SparseVec {
        let f = self.field();
        let mut acc: Vec<(u32, u64)> = Vec::new();
        for &(j, x) in v {
            for &(r, y) in &self.columns[j as usize] {
                acc.push((r, f.mul(x as u64, y as u64)));
            }
        }
        normalize(&f, self.rows, acc)
    }

    /// The product `self · rhs`.
    pub fn compose(&self, rhs: &KoszulMatrix) -> KoszulMatrix {
        assert_eq!(self.cols(), rhs.rows(), "dimension mismatch");
        assert_eq!(self.prime, rhs.prime, "prime mismatch");
        let columns = rhs.columns.iter().map(|c| self.apply(c)).collect();
        KoszulMatrix {
            rows: self.rows,
            prime: self.prime,
            columns,
        }
    }

    /// Dense row-major copy, for small matrices.
    pub fn to_dense(&self) -> Vec<Vec<u64>> {
        let mut d = vec![vec![0u64; self.cols()]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                d[r as usize][c] = v as u64;
            }
        }
        d
    }
}

pub(crate) fn normalize(f: &PrimeField, rows: usize, mut c: Vec<(u32, u64)>) -> SparseVec {
    c.sort_unstable_by_key(|e| e.0);
    let mut out: SparseVec = Vec::with_capacity(c.len());
    let mut last: Option<(u32, u64)> = None;
    for (r, v) in c {
        assert!((r as usize) < rows, "row {r} out of range {rows}");
        let v = v % f.modulus();
        match last {
            Some((lr, lv)) if lr == r => last = Some((r, f.add(lv, v))),
            Some((lr, lv)) => {
                if lv != 0 {
                    out.push((lr, lv as u32));
                }
                last = Some((r, v));
            }
            None => last = Some((r, v)),
        }
    }
    if let Some((lr, lv)) = last {
        if lv != 0 {
            out.push((lr, lv as u32));
        }
    }
    out
}
