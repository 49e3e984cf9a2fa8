//! Incremental sparse row echelon form over `Z/pZ`.
//!
//! Columns are reduced against stored pivot vectors in increasing row order.
//! A pivot vector has leading entry 1 at its pivot row and no entries above
//! it.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::field::PrimeField;
use super::matrix::{KoszulMatrix, SparseVec};

const NONE: u32 = u32::MAX;

/// Working memory for reductions against a fixed row count.
pub struct Scratch {
    acc: Vec<u64>,
    queued: Vec<bool>,
    touched: Vec<u32>,
    heap: BinaryHeap<Reverse<u32>>,
    combo: Vec<u64>,
    combo_touched: Vec<u32>,
}

impl Scratch {
    pub fn new(rows: usize) -> Self {
        Scratch {
            acc: vec![0; rows],
            queued: vec![false; rows],
            touched: Vec::new(),
            heap: BinaryHeap::new(),
            combo: Vec::new(),
            combo_touched: Vec::new(),
        }
    }

    fn load(&mut self, v: &[(u32, u32)]) {
        for &(r, x) in v {
            self.acc[r as usize] = x as u64;
            self.touched.push(r);
            self.queued[r as usize] = true;
            self.heap.push(Reverse(r));
        }
    }

    /// Drains the accumulator into a sorted sparse vector.
    fn take(&mut self) -> SparseVec {
        self.touched.sort_unstable();
        self.touched.dedup();
        let mut out = Vec::new();
        for &r in &self.touched {
            let x = self.acc[r as usize];
            if x != 0 {
                out.push((r, x as u32));
            }
            self.acc[r as usize] = 0;
            self.queued[r as usize] = false;
        }
        self.touched.clear();
        self.heap.clear();
        out
    }

    fn take_combo(&mut self) -> SparseVec {
        self.combo_touched.sort_unstable();
        self.combo_touched.dedup();
        let mut out = Vec::new();
        for &c in &self.combo_touched {
            let x = self.combo[c as usize];
            if x != 0 {
                out.push((c, x as u32));
            }
            self.combo[c as usize] = 0;
        }
        self.combo_touched.clear();
        out
    }
}

pub struct Echelon {
    field: PrimeField,
    rows: usize,
    pivot_of_row: Vec<u32>,
    pivots: Vec<SparseVec>,
    combos: Option<Vec<SparseVec>>,
    scratch: Scratch,
}

impl Echelon {
    pub fn new(rows: usize, prime: u64) -> Self {
        Echelon {
            field: PrimeField::new(prime),
            rows,
            pivot_of_row: vec![NONE; rows],
            pivots: Vec::new(),
            combos: None,
            scratch: Scratch::new(rows),
        }
    }

    /// An echelon that also records, for each pivot, which combination of
    /// inserted columns produced it; dependent columns then yield kernel
    /// vectors.
    pub fn tracked(rows: usize, cols: usize, prime: u64) -> Self {
        let mut e = Echelon::new(rows, prime);
        e.combos = Some(Vec::new());
        e.scratch.combo = vec![0; cols];
        e
    }

    /// Echelon of the column span of `m`.
    pub fn of(m: &KoszulMatrix) -> Self {
        let mut e = Echelon::new(m.rows(), m.prime());
        for c in m.columns() {
            e.insert(c);
        }
        e
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Eliminates the loaded vector. Stops at the first row without a pivot
    /// when `stop_at_free`, returning that row.
    fn eliminate(&self, s: &mut Scratch, stop_at_free: bool) -> Option<u32> {
        let f = &self.field;
        let mut lead = None;
        while let Some(Reverse(r)) = s.heap.pop() {
            let x = s.acc[r as usize];
            if x == 0 {
                continue;
            }
            let pi = self.pivot_of_row[r as usize];
            if pi == NONE {
                lead.get_or_insert(r);
                if stop_at_free {
                    break;
                }
                continue;
            }
            let factor = f.neg(x);
            for &(rr, y) in &self.pivots[pi as usize] {
                let i = rr as usize;
                s.acc[i] = f.add(s.acc[i], f.mul(factor, y as u64));
                if !s.queued[i] {
                    s.queued[i] = true;
                    s.touched.push(rr);
                    s.heap.push(Reverse(rr));
                }
            }
            if let Some(combos) = &self.combos {
                for &(c, y) in &combos[pi as usize] {
                    let i = c as usize;
                    if s.combo[i] == 0 {
                        s.combo_touched.push(c);
                    }
                    s.combo[i] = f.add(s.combo[i], f.mul(factor, y as u64));
                }
            }
        }
        lead
    }

    fn store(&mut self, lead: u32, mut v: SparseVec, mut combo: Option<SparseVec>) {
        let f = self.field;
        debug_assert_eq!(v[0].0, lead);
        let inv = f.inv(v[0].1 as u64);
        for e in v.iter_mut() {
            e.1 = f.mul(e.1 as u64, inv) as u32;
        }
        if let Some(c) = combo.as_mut() {
            for e in c.iter_mut() {
                e.1 = f.mul(e.1 as u64, inv) as u32;
            }
        }
        self.pivot_of_row[lead as usize] = self.pivots.len() as u32;
        self.pivots.push(v);
        if let (Some(cs), Some(c)) = (self.combos.as_mut(), combo) {
            cs.push(c);
        }
    }

    /// Adds a column; returns whether the rank grew.
    pub fn insert(&mut self, v: &[(u32, u32)]) -> bool {
        let mut s = std::mem::replace(&mut self.scratch, Scratch::new(0));
        s.load(v);
        let lead = self.eliminate(&mut s, true);
        let out = s.take();
        self.scratch = s;
        match lead {
            Some(r) => {
                self.store(r, out, None);
                true
            }
            None => false,
        }
    }

    /// Adds column number `col` of a tracked echelon. Returns a kernel vector
    /// (over column indices) when the column is dependent on earlier ones.
    pub fn insert_tracked(&mut self, v: &[(u32, u32)], col: u32) -> Option<SparseVec> {
        assert!(self.combos.is_some(), "echelon does not track combinations");
        let mut s = std::mem::replace(&mut self.scratch, Scratch::new(0));
        s.load(v);
        s.combo[col as usize] = 1;
        s.combo_touched.push(col);
        let lead = self.eliminate(&mut s, true);
        let out = s.take();
        let combo = s.take_combo();
        self.scratch = s;
        match lead {
            Some(r) => {
                self.store(r, out, Some(combo));
                None
            }
            None => Some(combo),
        }
    }

    /// Fully reduces `v`: the result has no entry in any pivot row, and is
    /// zero exactly when `v` lies in the span.
    pub fn reduce(&self, v: &[(u32, u32)], s: &mut Scratch) -> SparseVec {
        s.load(v);
        self.eliminate(s, false);
        s.take()
    }

    pub fn scratch(&self) -> Scratch {
        Scratch::new(self.rows)
    }
}

/// Basis of the kernel of `m`, as sparse vectors over its columns.
pub fn kernel_basis(m: &KoszulMatrix) -> Vec<SparseVec> {
    let mut e = Echelon::tracked(m.rows(), m.cols(), m.prime());
    m.columns()
        .iter()
        .enumerate()
        .filter_map(|(j, c)| e.insert_tracked(c, j as u32))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u64 = 101;

    #[test]
    fn rank_and_kernel_of_small_matrix() {
        // columns c0 = (1,1,0), c1 = (0,1,1), c2 = c0 + c1, c3 = 0
        let m = KoszulMatrix::from_triples(
            3,
            4,
            P,
            [
                (0, 0, 1),
                (1, 0, 1),
                (1, 1, 1),
                (2, 1, 1),
                (0, 2, 1),
                (1, 2, 2),
                (2, 2, 1),
            ],
        );
        assert_eq!(Echelon::of(&m).rank(), 2);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.apply(v).is_empty());
        }
    }

    #[test]
    fn full_reduction_clears_pivot_rows() {
        let m = KoszulMatrix::from_triples(3, 1, P, [(0, 0, 1), (2, 0, 5)]);
        let e = Echelon::of(&m);
        let mut s = e.scratch();
        assert!(e.reduce(&[(0, 3), (2, 15)], &mut s).is_empty());
        let r = e.reduce(&[(0, 1), (1, 1)], &mut s);
        assert_eq!(r, vec![(1, 1), (2, (P - 5) as u32)]);
    }
}
