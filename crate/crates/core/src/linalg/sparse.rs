use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::dense::IntMatrix;

/// Sparse integer matrix; zero entries are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseIntMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), BigInt>,
}

impl SparseIntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseIntMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn set(&mut self, r: usize, c: usize, value: impl Into<BigInt>) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        let value = value.into();
        if value.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), value);
        }
    }

    pub fn add_to(&mut self, r: usize, c: usize, value: impl Into<BigInt>) {
        let cur = self.get(r, c) + value.into();
        self.set(r, c, cur);
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        self.entries.get(&(r, c)).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn transpose(&self) -> SparseIntMatrix {
        SparseIntMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: self.entries.iter().map(|(&(r, c), v)| ((c, r), v.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &SparseIntMatrix) -> SparseIntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut by_row: Vec<Vec<(usize, &BigInt)>> = alloc::vec![Vec::new(); other.rows];
        for (&(r, c), v) in &other.entries {
            by_row[r].push((c, v));
        }
        let mut out = SparseIntMatrix::zeros(self.rows, other.cols);
        for (&(r, k), a) in &self.entries {
            for &(c, b) in &by_row[k] {
                out.add_to(r, c, a * b);
            }
        }
        out
    }

    /// Row-major sparse rows, each sorted by column.
    pub fn to_rows(&self) -> Vec<Vec<(usize, BigInt)>> {
        let mut rows = alloc::vec![Vec::new(); self.rows];
        for (&(r, c), v) in &self.entries {
            rows[r].push((c, v.clone()));
        }
        rows
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, self.cols);
        for (&(r, c), v) in &self.entries {
            m[(r, c)] = v.clone();
        }
        m
    }

    pub fn from_dense(m: &IntMatrix) -> SparseIntMatrix {
        let mut out = SparseIntMatrix::zeros(m.rows(), m.cols());
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                out.set(r, c, m[(r, c)].clone());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_entries_not_stored() {
        let mut m = SparseIntMatrix::zeros(2, 2);
        m.set(0, 1, 3);
        m.add_to(0, 1, -3);
        assert!(m.is_zero());
        m.set(1, 0, 2);
        assert_eq!(m.transpose().get(0, 1), BigInt::from(2));
        let p = m.mul(&m.transpose());
        assert_eq!(p.get(1, 1), BigInt::from(4));
        assert_eq!(p.nnz(), 1);
    }
}
