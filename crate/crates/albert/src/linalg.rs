//! Dense exact linear algebra over a scalar field: reduced row echelon form,
//! rank, kernels and determinants by Gaussian elimination with exact
//! division. Sizes here are tiny (at most 27 or 20 rows), so no pivoting
//! strategy beyond "first nonzero" is needed.

use crate::scalar::Field;

#[derive(Clone, PartialEq, Debug)]
pub struct Mat<K> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K: Field> Mat<K> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![K::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = K::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &K {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut K {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[K] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<K>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "inner dimension mismatch");
        let mut out = Self::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let t = a.mul(rhs.at(k, j));
                    *out.at_mut(i, j) = out.at(i, j).add(&t);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[K]) -> Vec<K> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = K::zero();
                for j in 0..self.cols {
                    acc = acc.add(&self.at(i, j).mul(&v[j]));
                }
                acc
            })
            .collect()
    }

    /// In-place reduction to reduced row echelon form; returns the pivot
    /// columns. The result is canonical: two row spaces are equal iff their
    /// RREFs are equal.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for col in 0..self.cols {
            let Some(pivot_row) = (lead..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(lead, pivot_row);
            let inv = self
                .at(lead, col)
                .inv()
                .expect("pivot is nonzero by selection");
            for j in col..self.cols {
                *self.at_mut(lead, j) = self.at(lead, j).mul(&inv);
            }
            for r in 0..self.rows {
                if r != lead && !self.at(r, col).is_zero() {
                    let factor = self.at(r, col).clone();
                    for j in col..self.cols {
                        let t = factor.mul(self.at(lead, j));
                        *self.at_mut(r, j) = self.at(r, j).sub(&t);
                    }
                }
            }
            pivots.push(col);
            lead += 1;
            if lead == self.rows {
                break;
            }
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Canonical echelon basis of the row space (zero rows dropped).
    pub fn row_space_basis(&self) -> Vec<Vec<K>> {
        let mut m = self.clone();
        let rank = m.rref().len();
        (0..rank).map(|r| m.row(r).to_vec()).collect()
    }

    /// Basis of `{ v | A v = 0 }` via back-substitution from the RREF.
    pub fn kernel_basis(&self) -> Vec<Vec<K>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![K::zero(); self.cols];
            v[f] = K::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = m.at(r, f).neg();
            }
            out.push(v);
        }
        out
    }

    /// Determinant by elimination; square matrices only.
    pub fn det(&self) -> K {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = K::one();
        for col in 0..n {
            let Some(pivot_row) = (col..n).find(|&r| !m.at(r, col).is_zero()) else {
                return K::zero();
            };
            if pivot_row != col {
                m.swap_rows(col, pivot_row);
                det = det.neg();
            }
            let pivot = m.at(col, col).clone();
            det = det.mul(&pivot);
            let inv = pivot.inv().expect("nonzero pivot");
            for r in col + 1..n {
                if m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).mul(&inv);
                for j in col..n {
                    let t = factor.mul(m.at(col, j));
                    *m.at_mut(r, j) = m.at(r, j).sub(&t);
                }
            }
        }
        det
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

/// Rank of a list of coordinate vectors.
pub fn rank_of<K: Field>(vecs: &[Vec<K>]) -> usize {
    if vecs.is_empty() {
        return 0;
    }
    Mat::from_rows(vecs.to_vec()).rank()
}

/// True if `v` lies in the span of `basis` (each of equal length).
pub fn in_span<K: Field>(basis: &[Vec<K>], v: &[K]) -> bool {
    if v.iter().all(|c| c.is_zero()) {
        return true;
    }
    if basis.is_empty() {
        return false;
    }
    let r = rank_of(basis);
    let mut all = basis.to_vec();
    all.push(v.to_vec());
    rank_of(&all) == r
}
