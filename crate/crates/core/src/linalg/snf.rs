//! Smith normal form by sparse integer elimination.
//!
//! Pivots are chosen among the remaining nonzero entries: units first, ranked
//! by Markowitz cost `(r - 1)(c - 1)`; otherwise the entry of smallest
//! magnitude. A non-unit pivot reduces its row and column by rounded division,
//! and whenever a nonzero remainder survives the smallest remainder becomes the
//! new pivot. Once every pivot is isolated the diagonal is brought into
//! divisibility order with 2x2 gcd steps.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::dense::IntMatrix;
use super::sparse::SparseIntMatrix;

/// Unimodular transforms with `u * a * v = diag(d_1, ..., d_r, 0, ...)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfTransforms {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    /// Positive, each dividing the next.
    pub invariant_factors: Vec<BigInt>,
    pub transforms: Option<SnfTransforms>,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Invariant factors greater than one, as the torsion of a cokernel.
    pub fn torsion(&self) -> Vec<BigUint> {
        self.invariant_factors
            .iter()
            .filter(|d| !d.is_one())
            .map(|d| d.magnitude().clone())
            .collect()
    }

    /// The diagonal matrix `u * a * v` should equal.
    pub fn diagonal(&self, rows: usize, cols: usize) -> IntMatrix {
        let mut d = IntMatrix::zeros(rows, cols);
        for (t, f) in self.invariant_factors.iter().enumerate() {
            d[(t, t)] = f.clone();
        }
        d
    }
}

struct Tracking {
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

struct Eliminator {
    rows: Vec<BTreeMap<usize, BigInt>>,
    col_rows: Vec<BTreeSet<usize>>,
    tracking: Option<Tracking>,
}

/// `a / p` rounded to the nearest integer, so the remainder is at most `|p| / 2`.
fn round_div(a: &BigInt, p: &BigInt) -> BigInt {
    let (q, r) = a.div_mod_floor(p);
    if (&r + &r).abs() > p.abs() {
        q + 1
    } else {
        q
    }
}

impl Eliminator {
    fn new(a: &SparseIntMatrix, track: bool) -> Self {
        let mut rows = alloc::vec![BTreeMap::new(); a.rows()];
        let mut col_rows = alloc::vec![BTreeSet::new(); a.cols()];
        for (r, c, v) in a.entries() {
            rows[r].insert(c, v.clone());
            col_rows[c].insert(r);
        }
        let tracking = track.then(|| Tracking {
            u: IntMatrix::identity(a.rows()),
            u_inv: IntMatrix::identity(a.rows()),
            v: IntMatrix::identity(a.cols()),
            v_inv: IntMatrix::identity(a.cols()),
        });
        Eliminator {
            rows,
            col_rows,
            tracking,
        }
    }

    fn set(&mut self, r: usize, c: usize, value: BigInt) {
        if value.is_zero() {
            self.rows[r].remove(&c);
            self.col_rows[c].remove(&r);
        } else {
            self.rows[r].insert(c, value);
            self.col_rows[c].insert(r);
        }
    }

    /// row[r] -= q * row[i]
    fn row_sub(&mut self, r: usize, i: usize, q: &BigInt) {
        let pivot_row: Vec<(usize, BigInt)> = self.rows[i].iter().map(|(&c, v)| (c, v.clone())).collect();
        for (c, v) in pivot_row {
            let cur = self.rows[r].get(&c).cloned().unwrap_or_default();
            self.set(r, c, cur - q * v);
        }
        if let Some(t) = self.tracking.as_mut() {
            t.u.add_row_multiple(r, i, &-q);
            t.u_inv.add_col_multiple(i, r, q);
        }
    }

    /// col[c] -= q * col[j]
    fn col_sub(&mut self, c: usize, j: usize, q: &BigInt) {
        let members: Vec<usize> = self.col_rows[j].iter().copied().collect();
        for r in members {
            let v = self.rows[r][&j].clone();
            let cur = self.rows[r].get(&c).cloned().unwrap_or_default();
            self.set(r, c, cur - q * v);
        }
        if let Some(t) = self.tracking.as_mut() {
            t.v.add_col_multiple(c, j, &-q);
            t.v_inv.add_row_multiple(j, c, q);
        }
    }

    fn pick_pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<((bool, BigUint, usize), (usize, usize))> = None;
        for (r, row) in self.rows.iter().enumerate() {
            for (&c, v) in row {
                let unit = v.magnitude().is_one();
                let cost = (row.len() - 1) * (self.col_rows[c].len() - 1);
                let key = if unit {
                    (false, BigUint::zero(), cost)
                } else {
                    (true, v.magnitude().clone(), cost)
                };
                if best.as_ref().map_or(true, |(k, _)| key < *k) {
                    let done = unit && cost == 0;
                    best = Some((key, (r, c)));
                    if done {
                        return best.map(|(_, p)| p);
                    }
                }
            }
        }
        best.map(|(_, p)| p)
    }

    fn smallest_in_column(&self, j: usize) -> usize {
        *self.col_rows[j]
            .iter()
            .min_by_key(|&&r| self.rows[r][&j].magnitude().clone())
            .unwrap()
    }

    fn smallest_in_row(&self, i: usize) -> usize {
        *self.rows[i]
            .iter()
            .min_by_key(|(_, v)| v.magnitude().clone())
            .unwrap()
            .0
    }

    /// Isolates one pivot; returns its position and value.
    fn isolate(&mut self, mut i: usize, mut j: usize) -> (usize, usize, BigInt) {
        loop {
            let p = self.rows[i][&j].clone();
            let others: Vec<usize> = self.col_rows[j].iter().copied().filter(|&r| r != i).collect();
            let mut remainder = false;
            for r in others {
                let q = round_div(&self.rows[r][&j], &p);
                if !q.is_zero() {
                    self.row_sub(r, i, &q);
                }
                remainder |= self.rows[r].contains_key(&j);
            }
            if remainder {
                i = self.smallest_in_column(j);
                continue;
            }
            let others: Vec<usize> = self.rows[i].keys().copied().filter(|&c| c != j).collect();
            for c in others {
                let q = round_div(&self.rows[i][&c], &p);
                if !q.is_zero() {
                    self.col_sub(c, j, &q);
                }
                remainder |= self.rows[i].contains_key(&c);
            }
            if remainder {
                j = self.smallest_in_row(i);
                continue;
            }
            self.rows[i].remove(&j);
            self.col_rows[j].remove(&i);
            return (i, j, p);
        }
    }
}

/// Rearranges a diagonal so each entry divides the next; `step(k, l, ...)` is
/// told about every 2x2 move so callers can mirror it on transforms.
fn normalize_diagonal(d: &mut [BigInt], mut step: impl FnMut(usize, usize, &BigInt, &BigInt, &BigInt, &BigInt, &BigInt)) {
    for k in 0..d.len() {
        for l in k + 1..d.len() {
            let (a, b) = (d[k].clone(), d[l].clone());
            if (&b % &a).is_zero() {
                continue;
            }
            let eg = a.extended_gcd(&b);
            let g = eg.gcd;
            step(k, l, &a, &b, &g, &eg.x, &eg.y);
            d[l] = &a / &g * &b;
            d[k] = g;
        }
    }
}

pub fn smith_normal_form(a: &SparseIntMatrix, want_transforms: bool) -> SnfResult {
    let mut el = Eliminator::new(a, want_transforms);
    let mut pivots = Vec::new();
    while let Some((i, j)) = el.pick_pivot() {
        pivots.push(el.isolate(i, j));
    }
    let mut diag: Vec<BigInt> = pivots.iter().map(|(_, _, p)| p.abs()).collect();

    let Some(mut t) = el.tracking else {
        normalize_diagonal(&mut diag, |_, _, _, _, _, _, _| {});
        return SnfResult {
            invariant_factors: diag,
            transforms: None,
        };
    };

    let order = |pivot_axis: Vec<usize>, n: usize| -> Vec<usize> {
        let used: BTreeSet<usize> = pivot_axis.iter().copied().collect();
        pivot_axis.into_iter().chain((0..n).filter(|x| !used.contains(x))).collect()
    };
    let row_order = order(pivots.iter().map(|p| p.0).collect(), a.rows());
    let col_order = order(pivots.iter().map(|p| p.1).collect(), a.cols());
    let mut u = t.u.permute_rows(&row_order);
    let mut u_inv = t.u_inv.permute_cols(&row_order);
    t.v = t.v.permute_cols(&col_order);
    t.v_inv = t.v_inv.permute_rows(&col_order);
    let (mut v, mut v_inv) = (t.v, t.v_inv);
    for (k, (_, _, p)) in pivots.iter().enumerate() {
        if p.is_negative() {
            u.negate_row(k);
            u_inv.negate_col(k);
        }
    }
    let one = BigInt::one();
    let minus_one = -BigInt::one();
    normalize_diagonal(&mut diag, |k, l, a, b, g, s, t| {
        let (ag, bg) = (a / g, b / g);
        u.combine_rows(k, l, [s, t, &-&bg, &ag]);
        u_inv.combine_cols(k, l, [&ag, &-t, &bg, s]);
        v.combine_cols(k, l, [&one, &-(t * &bg), &one, &(s * &ag)]);
        v_inv.combine_rows(k, l, [&(s * &ag), &(t * &bg), &minus_one, &one]);
    });
    SnfResult {
        invariant_factors: diag,
        transforms: Some(SnfTransforms { u, u_inv, v, v_inv }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn sparse(rows: &[Vec<i64>]) -> SparseIntMatrix {
        let c = rows.first().map_or(0, |r| r.len());
        let mut m = SparseIntMatrix::zeros(rows.len(), c);
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Textbook dense SNF on i128: move the smallest entry to the corner,
    /// reduce, repeat; then fix divisibility by adding rows.
    fn dense_oracle(mut m: Vec<Vec<i128>>) -> Vec<i128> {
        let rows = m.len();
        let cols = if rows == 0 { 0 } else { m[0].len() };
        let mut out = Vec::new();
        let mut t = 0;
        while t < rows.min(cols) {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if m[i][j] != 0 && best.map_or(true, |(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            m.swap(t, bi);
            for row in m.iter_mut() {
                row.swap(t, bj);
            }
            let mut clean = true;
            for i in t + 1..rows {
                let q = m[i][t] / m[t][t];
                for j in t..cols {
                    m[i][j] -= q * m[t][j];
                }
                clean &= m[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = m[t][j] / m[t][t];
                for i in t..rows {
                    m[i][j] -= q * m[i][t];
                }
                clean &= m[t][j] == 0;
            }
            if !clean {
                continue;
            }
            let p = m[t][t];
            if let Some((i, _)) = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| m[i][j] % p != 0)
            {
                for j in t..cols {
                    m[t][j] += m[i][j];
                }
                continue;
            }
            out.push(p.abs());
            t += 1;
        }
        out
    }

    fn check_transforms(a: &SparseIntMatrix, res: &SnfResult) {
        let t = res.transforms.as_ref().unwrap();
        let dense = a.to_dense();
        assert_eq!(t.u.mul(&dense).mul(&t.v), res.diagonal(a.rows(), a.cols()));
        assert_eq!(t.u.mul(&t.u_inv), IntMatrix::identity(a.rows()));
        assert_eq!(t.v.mul(&t.v_inv), IntMatrix::identity(a.cols()));
        assert!(t.u.determinant().magnitude().is_one());
        assert!(t.v.determinant().magnitude().is_one());
        for w in res.invariant_factors.windows(2) {
            assert!((&w[1] % &w[0]).is_zero());
        }
    }

    #[test]
    fn diagonal_two_three() {
        let a = sparse(&[vec![2, 0], vec![0, 3]]);
        let res = smith_normal_form(&a, true);
        assert_eq!(res.invariant_factors, ints(&[1, 6]));
        check_transforms(&a, &res);
    }

    #[test]
    fn zero_matrix() {
        let a = SparseIntMatrix::zeros(3, 4);
        let res = smith_normal_form(&a, true);
        assert!(res.invariant_factors.is_empty());
        check_transforms(&a, &res);
        assert!(smith_normal_form(&SparseIntMatrix::zeros(0, 0), true).invariant_factors.is_empty());
    }

    #[test]
    fn small_known_forms() {
        let a = sparse(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let res = smith_normal_form(&a, true);
        assert_eq!(res.invariant_factors, ints(&[2, 6, 12]));
        check_transforms(&a, &res);
        let b = sparse(&[vec![6, 0, 0], vec![0, 10, 0], vec![0, 0, 15]]);
        assert_eq!(smith_normal_form(&b, false).invariant_factors, ints(&[1, 30, 30]));
    }

    #[test]
    fn oracle_handles_divisibility_fix() {
        assert_eq!(dense_oracle(vec![vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(dense_oracle(vec![vec![0, 0], vec![0, 0]]), Vec::<i128>::new());
    }

    proptest! {
        #[test]
        fn matches_dense_oracle(entries in proptest::collection::vec(-9i64..=9, 36)) {
            let rows: Vec<Vec<i64>> = entries.chunks(6).map(|c| c.to_vec()).collect();
            let a = sparse(&rows);
            let res = smith_normal_form(&a, true);
            let oracle = dense_oracle(rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect());
            let got: Vec<i128> = res.invariant_factors.iter().map(|d| i128::try_from(d.clone()).unwrap()).collect();
            prop_assert_eq!(got, oracle);
            check_transforms(&a, &res);
        }

        #[test]
        fn sparse_rectangular_with_transforms(
            rows in 1usize..7, cols in 1usize..7,
            entries in proptest::collection::vec(prop_oneof![4 => Just(0i64), 1 => -4i64..=4], 49),
        ) {
            let m: Vec<Vec<i64>> = (0..rows).map(|r| entries[r * 7..r * 7 + cols].to_vec()).collect();
            let a = sparse(&m);
            let res = smith_normal_form(&a, true);
            check_transforms(&a, &res);
            let plain = smith_normal_form(&a, false);
            prop_assert_eq!(plain.invariant_factors, res.invariant_factors);
        }
    }
}
