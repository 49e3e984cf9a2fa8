use serde::{Deserialize, Serialize};

use super::point::LatticePoint;

/// Affine map `(x y) ↦ (x y)·A + b` with `A ∈ GL₂(Z)`, acting on row vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnimodularAffineMap {
    matrix: [[i64; 2]; 2],
    shift: LatticePoint,
}

impl UnimodularAffineMap {
    /// Returns `None` unless `|det A| = 1`.
    pub fn new(matrix: [[i64; 2]; 2], shift: LatticePoint) -> Option<Self> {
        let det = matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0];
        (det.abs() == 1).then_some(UnimodularAffineMap { matrix, shift })
    }

    pub fn identity() -> Self {
        UnimodularAffineMap {
            matrix: [[1, 0], [0, 1]],
            shift: LatticePoint::ORIGIN,
        }
    }

    pub fn translation(shift: LatticePoint) -> Self {
        UnimodularAffineMap {
            matrix: [[1, 0], [0, 1]],
            shift,
        }
    }

    pub fn matrix(&self) -> [[i64; 2]; 2] {
        self.matrix
    }

    pub fn shift(&self) -> LatticePoint {
        self.shift
    }

    pub fn det(&self) -> i64 {
        self.matrix[0][0] * self.matrix[1][1] - self.matrix[0][1] * self.matrix[1][0]
    }

    /// Image of a point.
    pub fn apply(&self, p: LatticePoint) -> LatticePoint {
        let a = &self.matrix;
        LatticePoint::new(
            p.x * a[0][0] + p.y * a[1][0] + self.shift.x,
            p.x * a[0][1] + p.y * a[1][1] + self.shift.y,
        )
    }

    /// Image of a direction vector (the shift is ignored).
    pub fn apply_linear(&self, p: LatticePoint) -> LatticePoint {
        let a = &self.matrix;
        LatticePoint::new(p.x * a[0][0] + p.y * a[1][0], p.x * a[0][1] + p.y * a[1][1])
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &UnimodularAffineMap) -> UnimodularAffineMap {
        let a = &self.matrix;
        let b = &other.matrix;
        let mut m = [[0i64; 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        UnimodularAffineMap {
            matrix: m,
            shift: other.apply(self.shift),
        }
    }

    pub fn inverse(&self) -> UnimodularAffineMap {
        let a = &self.matrix;
        let d = self.det();
        // inverse of a unimodular matrix is the adjugate times det (= 1/det)
        let inv = [[a[1][1] * d, -a[0][1] * d], [-a[1][0] * d, a[0][0] * d]];
        let lin = UnimodularAffineMap {
            matrix: inv,
            shift: LatticePoint::ORIGIN,
        };
        let s = lin.apply_linear(self.shift);
        UnimodularAffineMap {
            matrix: inv,
            shift: -s,
        }
    }
}
