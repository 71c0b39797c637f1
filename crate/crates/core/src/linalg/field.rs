//! Gaussian elimination over exact fields, dense and sparse.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::sparse::SparseIntMatrix;
use crate::error::{Error, Result};
use crate::util::is_prime;

pub trait Field {
    type Elem: Clone + PartialEq + core::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_int(&self, a: &BigInt) -> Self::Elem;

    fn from_i64(&self, a: i64) -> Self::Elem {
        self.from_int(&BigInt::from(a))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn from_int(&self, a: &BigInt) -> BigRational {
        BigRational::from_integer(a.clone())
    }
}

/// Integers modulo a prime `p < 2^63`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 63 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + (self.p - *b) as u128) % self.p as u128) as u64
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        // Fermat: a^(p-2)
        let (mut base, mut exp, mut acc) = (*a, self.p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }
    fn from_int(&self, a: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let r = ((a % &p) + &p) % &p;
        u64::try_from(r).unwrap()
    }
}

/// Rank of an integer matrix reduced into `field`, by sparse row echelon
/// insertion: each row is reduced against the pivots found so far.
pub fn rank_of<F: Field>(field: &F, m: &SparseIntMatrix) -> usize {
    let mut pivots: BTreeMap<usize, BTreeMap<usize, F::Elem>> = BTreeMap::new();
    for row in m.to_rows() {
        let mut r: BTreeMap<usize, F::Elem> = row
            .into_iter()
            .map(|(c, v)| (c, field.from_int(&v)))
            .filter(|(_, v)| !field.is_zero(v))
            .collect();
        while let Some((&lead, lead_val)) = r.iter().next() {
            let Some(p) = pivots.get(&lead) else {
                let inv = field.inv(lead_val);
                let normalized = r.into_iter().map(|(c, v)| (c, field.mul(&v, &inv))).collect();
                pivots.insert(lead, normalized);
                break;
            };
            let factor = lead_val.clone();
            for (c, v) in p {
                let cur = r.get(c).cloned().unwrap_or_else(|| field.zero());
                let next = field.sub(&cur, &field.mul(&factor, v));
                if field.is_zero(&next) {
                    r.remove(c);
                } else {
                    r.insert(*c, next);
                }
            }
        }
    }
    pivots.len()
}

/// Row-major dense matrix over a field.
#[derive(Clone, Debug)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field + Clone> Matrix<F> {
    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = m.field.one();
        }
        m
    }

    pub fn from_int_rows(field: F, rows: usize, cols: usize, entries: impl IntoIterator<Item = (usize, usize, BigInt)>) -> Self {
        let mut m = Self::zeros(field, rows, cols);
        for (r, c, v) in entries {
            let x = m.field.from_int(&v);
            let cur = m.get(r, c).clone();
            m.set(r, c, m.field.add(&cur, &x));
        }
        m
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows);
        let f = &self.field;
        let mut out = Matrix::zeros(f.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = f.mul(a, other.get(k, j));
                    let cur = out.get(i, j);
                    let sum = f.add(cur, &prod);
                    out.set(i, j, sum);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(f.zero(), |acc, j| f.add(&acc, &f.mul(self.get(i, j), &v[j])))
            })
            .collect()
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !f.is_zero(self.get(i, c))) else {
                continue;
            };
            for j in 0..self.cols {
                self.data.swap(p * self.cols + j, r * self.cols + j);
            }
            let inv = f.inv(self.get(r, c));
            for j in c..self.cols {
                let v = f.mul(self.get(r, j), &inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || f.is_zero(self.get(i, c)) {
                    continue;
                }
                let factor = self.get(i, c).clone();
                for j in c..self.cols {
                    let v = f.sub(self.get(i, j), &f.mul(&factor, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{x : self * x = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<F::Elem>> {
        let f = self.field.clone();
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = vec![f.zero(); self.cols];
            x[free] = f.one();
            for (row, &p) in pivots.iter().enumerate() {
                x[p] = f.neg(m.get(row, free));
            }
            basis.push(x);
        }
        basis
    }

    /// Solves `self * x = b` for each column `b` of `rhs`; `None` if any is inconsistent.
    pub fn solve_many(&self, rhs: &Matrix<F>) -> Option<Matrix<F>> {
        assert_eq!(self.rows, rhs.rows);
        let f = self.field.clone();
        let width = self.cols + rhs.cols;
        let mut aug = Matrix::zeros(f.clone(), self.rows, width);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            for j in 0..rhs.cols {
                aug.set(i, self.cols + j, rhs.get(i, j).clone());
            }
        }
        let pivots = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(f, self.cols, rhs.cols);
        for (row, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(p, j, aug.get(row, self.cols + j).clone());
            }
        }
        Some(x)
    }

    pub fn solve(&self, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let mut rhs = Matrix::zeros(self.field.clone(), self.rows, 1);
        for (i, v) in b.iter().enumerate() {
            rhs.set(i, 0, v.clone());
        }
        self.solve_many(&rhs).map(|x| x.column(0))
    }
}

impl<F: Field> PartialEq for Matrix<F> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

/// Incrementally maintained row-reduced set of vectors, for testing whether
/// a new vector lies in the span of earlier ones.
#[derive(Clone, Debug)]
pub struct IndependentSet<F: Field> {
    field: F,
    // (pivot column, vector normalized to 1 at pivot)
    reduced: Vec<(usize, Vec<F::Elem>)>,
}

impl<F: Field + Clone> IndependentSet<F> {
    pub fn new(field: F) -> Self {
        IndependentSet {
            field,
            reduced: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.reduced.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reduced.is_empty()
    }

    fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut v = v.to_vec();
        for (p, r) in &self.reduced {
            if f.is_zero(&v[*p]) {
                continue;
            }
            let factor = v[*p].clone();
            for (x, y) in v.iter_mut().zip(r) {
                *x = f.sub(x, &f.mul(&factor, y));
            }
        }
        v
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    /// Adds `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: &[F::Elem]) -> bool {
        let f = self.field.clone();
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&v[p]);
        for x in v.iter_mut() {
            *x = f.mul(x, &inv);
        }
        for (_, r) in self.reduced.iter_mut() {
            if f.is_zero(&r[p]) {
                continue;
            }
            let factor = r[p].clone();
            for (x, y) in r.iter_mut().zip(&v) {
                *x = f.sub(x, &f.mul(&factor, y));
            }
        }
        self.reduced.push((p, v));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(a))
    }

    #[test]
    fn prime_field_arithmetic() {
        assert_eq!(PrimeField::new(4), Err(Error::NotPrime(4)));
        let f = PrimeField::new(7).unwrap();
        for a in 1..7u64 {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
        assert_eq!(f.from_i64(-1), 6);
        assert_eq!(f.sub(&2, &5), 4);
    }

    #[test]
    fn rank_depends_on_characteristic() {
        // det = 2
        let rows = [(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, -1)];
        let ents = || rows.iter().map(|&(r, c, v)| (r, c, BigInt::from(v)));
        assert_eq!(Matrix::from_int_rows(Rationals, 2, 2, ents()).rank(), 2);
        assert_eq!(Matrix::from_int_rows(PrimeField::new(2).unwrap(), 2, 2, ents()).rank(), 1);
        assert_eq!(Matrix::from_int_rows(PrimeField::new(3).unwrap(), 2, 2, ents()).rank(), 2);
    }

    #[test]
    fn sparse_rank_matches_dense() {
        let mut m = SparseIntMatrix::zeros(3, 4);
        for (r, c, v) in [(0, 0, 2), (0, 3, 4), (1, 1, 3), (2, 0, 1), (2, 1, 1), (2, 3, 5)] {
            m.set(r, c, v);
        }
        let dense = |f| Matrix::from_int_rows(f, 3, 4, m.entries().map(|(r, c, v)| (r, c, v.clone()))).rank();
        assert_eq!(rank_of(&Rationals, &m), 3);
        assert_eq!(rank_of(&Rationals, &m), Matrix::from_int_rows(Rationals, 3, 4, m.entries().map(|(r, c, v)| (r, c, v.clone()))).rank());
        for p in [2, 3, 5] {
            let f = PrimeField::new(p).unwrap();
            assert_eq!(rank_of(&f, &m), dense(f));
        }
        assert_eq!(rank_of(&PrimeField::new(2).unwrap(), &m), 2);
    }

    #[test]
    fn nullspace_and_solve() {
        let ents = [(0, 0, 1), (0, 1, 2), (0, 2, 3), (1, 0, 2), (1, 1, 4), (1, 2, 6)];
        let m = Matrix::from_int_rows(Rationals, 2, 3, ents.iter().map(|&(r, c, v)| (r, c, BigInt::from(v))));
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        let x = m.solve(&[q(6), q(12)]).unwrap();
        assert_eq!(m.mul_vec(&x), [q(6), q(12)]);
        assert!(m.solve(&[q(1), q(1)]).is_none());
    }

    #[test]
    fn independent_set_tracks_span() {
        let mut s = IndependentSet::new(Rationals);
        assert!(s.insert(&[q(1), q(1), q(0)]));
        assert!(s.insert(&[q(0), q(1), q(1)]));
        assert!(!s.insert(&[q(1), q(2), q(1)]));
        assert!(s.contains(&[q(2), q(0), q(-2)]));
        assert!(s.insert(&[q(0), q(0), q(1)]));
        assert_eq!(s.len(), 3);
    }
}
