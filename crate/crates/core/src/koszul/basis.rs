use std::collections::HashMap;

use crate::lattice::LatticePoint;

/// Lattice points of a region in lexicographic order, with reverse lookup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBasis {
    points: Vec<LatticePoint>,
    index: HashMap<LatticePoint, usize>,
}

impl MonomialBasis {
    pub fn new(points: impl IntoIterator<Item = LatticePoint>) -> Self {
        let mut points: Vec<LatticePoint> = points.into_iter().collect();
        points.sort();
        points.dedup();
        let index = points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        MonomialBasis { points, index }
    }

    /// The one-element basis `{0}` of the degree-zero piece.
    pub fn constant() -> Self {
        MonomialBasis::new([LatticePoint::ORIGIN])
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn index_of(&self, p: LatticePoint) -> Option<usize> {
        self.index.get(&p).copied()
    }
}

/// `C(n, k)` saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = match r.checked_mul((n - i) as u128) {
            Some(x) => x / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    r
}

/// The `p`-subsets of `{0, …, n-1}` indexed by the combinatorial number
/// system: `{s₀ < s₁ < … < s_{p-1}} ↦ Σ C(s_i, i+1)` (colexicographic order).
#[derive(Clone, Debug)]
pub struct ExteriorIndex {
    n: usize,
    p: usize,
    table: Vec<Vec<u64>>,
}

impl ExteriorIndex {
    pub fn new(n: usize, p: usize) -> Self {
        let mut table = vec![vec![0u64; p + 2]; n + 1];
        for (m, row) in table.iter_mut().enumerate() {
            for (k, cell) in row.iter_mut().enumerate() {
                *cell = u64::try_from(binomial(m, k)).expect("exterior power too large");
            }
        }
        ExteriorIndex { n, p, table }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// `C(n, p)`.
    pub fn len(&self) -> usize {
        self.table[self.n][self.p] as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn rank(&self, subset: &[usize]) -> usize {
        debug_assert_eq!(subset.len(), self.p);
        subset
            .iter()
            .enumerate()
            .map(|(i, &s)| self.table[s][i + 1] as usize)
            .sum()
    }

    pub fn unrank(&self, mut r: usize) -> Vec<usize> {
        let mut out = vec![0; self.p];
        let mut m = self.n;
        for i in (0..self.p).rev() {
            m -= 1;
            while self.table[m][i + 1] as usize > r {
                m -= 1;
            }
            out[i] = m;
            r -= self.table[m][i + 1] as usize;
        }
        out
    }

    /// All subsets in rank order.
    pub fn subsets(&self) -> Subsets {
        Subsets {
            current: (0..self.p).collect(),
            n: self.n,
            done: self.p > self.n,
        }
    }
}

/// Colexicographic enumeration of sorted subsets.
pub struct Subsets {
    current: Vec<usize>,
    n: usize,
    done: bool,
}

impl Iterator for Subsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let p = self.current.len();
        let mut i = 0;
        while i < p
            && (if i + 1 < p {
                self.current[i] + 1 == self.current[i + 1]
            } else {
                self.current[i] + 1 == self.n
            })
        {
            i += 1;
        }
        if i == p {
            self.done = true;
        } else {
            self.current[i] += 1;
            for (j, c) in self.current[..i].iter_mut().enumerate() {
                *c = j;
            }
        }
        Some(out)
    }
}
