//! Simplicial homology with integer, rational or prime-field coefficients,
//! and the maps induced on it by simplicial maps.
//!
//! Reduced conventions: the void complex has zero homology everywhere;
//! `{∅}` has `H̃_{-1}` equal to the coefficient group; any nonempty complex has
//! `H̃_{-1} = 0`. Unreduced homology is only defined in degrees `>= 0`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::complex::{SimplicialComplex, SimplicialMap};
use crate::error::{Error, Result};
use crate::linalg::{rank_of, smith_normal_form, Field, IntMatrix, Matrix, PrimeField, Rationals, SparseIntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coefficients {
    Integers,
    Rationals,
    Prime(u64),
}

impl Coefficients {
    pub fn label(&self) -> String {
        match self {
            Coefficients::Integers => String::from("Z"),
            Coefficients::Rationals => String::from("Q"),
            Coefficients::Prime(p) => format!("F{p}"),
        }
    }

    /// 0 for `Z` and `Q`.
    pub fn characteristic(&self) -> u64 {
        match self {
            Coefficients::Prime(p) => *p,
            _ => 0,
        }
    }
}

/// A finitely generated abelian group (or vector space): free rank plus
/// invariant factors `>= 2`, each dividing the next.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HomologyGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigUint>,
}

impl HomologyGroup {
    pub fn free(rank: usize) -> Self {
        HomologyGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Last invariant factor, or 1 when torsion-free.
    pub fn exponent(&self) -> BigUint {
        self.torsion.last().cloned().unwrap_or_else(BigUint::one)
    }

    /// Number of invariant factors divisible by `p`.
    pub fn p_rank(&self, p: u64) -> usize {
        let p = BigUint::from(p);
        self.torsion.iter().filter(|d| (*d % &p).is_zero()).count()
    }
}

fn check_degree(i: i64, reduced: bool) -> Result<()> {
    if i < -1 || (i == -1 && !reduced) {
        return Err(Error::BadDegree(i));
    }
    Ok(())
}

fn field_rank(m: &SparseIntMatrix, coeff: Coefficients) -> Result<usize> {
    Ok(match coeff {
        Coefficients::Integers => smith_normal_form(m, false).rank(),
        Coefficients::Rationals => rank_of(&Rationals, m),
        Coefficients::Prime(p) => rank_of(&PrimeField::new(p)?, m),
    })
}

/// `H_i` (or `H̃_i`) of a complex.
pub fn homology(c: &SimplicialComplex, i: i64, coeff: Coefficients, reduced: bool) -> Result<HomologyGroup> {
    check_degree(i, reduced)?;
    if let Coefficients::Prime(p) = coeff {
        PrimeField::new(p)?;
    }
    let n = c.faces(i).len();
    if n == 0 {
        return Ok(HomologyGroup::default());
    }
    let d_i = c.boundary(i, reduced);
    let d_next = c.boundary(i + 1, reduced);
    match coeff {
        Coefficients::Integers => {
            let r_i = smith_normal_form(&d_i, false).rank();
            let snf = smith_normal_form(&d_next, false);
            Ok(HomologyGroup {
                free_rank: n - r_i - snf.rank(),
                torsion: snf.torsion(),
            })
        }
        _ => Ok(HomologyGroup::free(n - field_rank(&d_i, coeff)? - field_rank(&d_next, coeff)?)),
    }
}

/// `dim H̃^j(Δ; K)` over a field, from the coboundaries `δ^j = ∂_{j+1}^T`.
pub fn reduced_cohomology_dim(c: &SimplicialComplex, j: i64, characteristic: u64) -> Result<usize> {
    if j < -1 {
        return Err(Error::BadDegree(j));
    }
    let coeff = if characteristic == 0 {
        Coefficients::Rationals
    } else {
        Coefficients::Prime(characteristic)
    };
    let n = c.faces(j).len();
    if n == 0 {
        return Ok(0);
    }
    let delta_j = c.boundary(j + 1, true).transpose();
    let delta_prev = c.boundary(j, true).transpose();
    Ok(n - field_rank(&delta_j, coeff)? - field_rank(&delta_prev, coeff)?)
}

/// Euler characteristic from Betti numbers over `Q`, reduced or not.
pub fn euler_from_betti(c: &SimplicialComplex, reduced: bool) -> Result<i64> {
    let Some(d) = c.dimension() else { return Ok(0) };
    let start = if reduced { -1 } else { 0 };
    let mut chi = 0i64;
    for i in start..=d.max(start) {
        let b = homology(c, i, Coefficients::Rationals, reduced)?.free_rank as i64;
        chi += if i.rem_euclid(2) == 0 { b } else { -b };
    }
    Ok(chi)
}

/// Checks `dim H_i(Δ; F_p) = rank H_i(Δ; Z) + t_p(H_i) + t_p(H_{i-1})` in
/// unreduced homology, `i >= 0`.
pub fn uct_consistency(c: &SimplicialComplex, i: i64, p: u64) -> Result<bool> {
    check_degree(i, false)?;
    let mod_p = homology(c, i, Coefficients::Prime(p), false)?.free_rank;
    let h_i = homology(c, i, Coefficients::Integers, false)?;
    let prev = if i == 0 {
        0
    } else {
        homology(c, i - 1, Coefficients::Integers, false)?.p_rank(p)
    };
    Ok(mod_p == h_i.free_rank + h_i.p_rank(p) + prev)
}

/// Deterministic basis of `H_i` over a field: cycle representatives chosen
/// greedily from the nullspace basis of `∂_i`, skipping anything already in
/// the span of the boundaries and earlier picks.
#[derive(Clone, Debug)]
pub struct FieldHomologyBasis<F: Field> {
    boundaries: Matrix<F>,
    pub representatives: Vec<Vec<F::Elem>>,
}

fn to_field_matrix<F: Field + Clone>(field: &F, m: &SparseIntMatrix) -> Matrix<F> {
    Matrix::from_int_rows(field.clone(), m.rows(), m.cols(), m.entries().map(|(r, c, v)| (r, c, v.clone())))
}

impl<F: Field + Clone> FieldHomologyBasis<F> {
    pub fn new(field: &F, c: &SimplicialComplex, i: i64, reduced: bool) -> Result<Self> {
        check_degree(i, reduced)?;
        let boundaries = to_field_matrix(field, &c.boundary(i + 1, reduced));
        let cycles = to_field_matrix(field, &c.boundary(i, reduced));
        let n = c.faces(i).len();
        let mut span = crate::linalg::IndependentSet::new(field.clone());
        for col in 0..boundaries.cols() {
            span.insert(&boundaries.column(col));
        }
        let kernel = if cycles.rows() == 0 {
            (0..n)
                .map(|k| {
                    let mut v = vec![field.zero(); n];
                    v[k] = field.one();
                    v
                })
                .collect()
        } else {
            cycles.nullspace()
        };
        let mut representatives = Vec::new();
        for z in kernel {
            if span.insert(&z) {
                representatives.push(z);
            }
        }
        Ok(FieldHomologyBasis {
            boundaries,
            representatives,
        })
    }

    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    /// Coordinates of a cycle's class in the representative basis.
    pub fn coordinates(&self, cycle: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let f = self.boundaries.field().clone();
        let n = cycle.len();
        let b = self.boundaries.cols();
        let mut a = Matrix::zeros(f.clone(), n, b + self.dim());
        for r in 0..n {
            for c in 0..b {
                a.set(r, c, self.boundaries.get(r, c).clone());
            }
            for (k, z) in self.representatives.iter().enumerate() {
                a.set(r, b + k, z[r].clone());
            }
        }
        let x = a.solve(cycle)?;
        Some(x[b..].to_vec())
    }
}

/// Matrix of `H_i(f)` over a field, rows indexed by the codomain basis and
/// columns by the domain basis.
pub fn induced_map_over_field<F: Field + Clone>(field: &F, f: &SimplicialMap, i: i64, reduced: bool) -> Result<Matrix<F>> {
    let dom = FieldHomologyBasis::new(field, &f.domain, i, reduced)?;
    let cod = FieldHomologyBasis::new(field, &f.codomain, i, reduced)?;
    let chain = if i == -1 {
        let mut m = SparseIntMatrix::zeros(f.codomain.faces(-1).len(), f.domain.faces(-1).len());
        if m.rows() == 1 && m.cols() == 1 {
            m.set(0, 0, 1);
        }
        m
    } else {
        f.chain_matrix(i)
    };
    let chain = to_field_matrix(field, &chain);
    let mut out = Matrix::zeros(field.clone(), cod.dim(), dom.dim());
    for (col, z) in dom.representatives.iter().enumerate() {
        let image = chain.mul_vec(z);
        let coords = cod
            .coordinates(&image)
            .ok_or_else(|| Error::NotFunctorial(String::from("image of a cycle is not a cycle")))?;
        for (row, x) in coords.into_iter().enumerate() {
            out.set(row, col, x);
        }
    }
    Ok(out)
}

/// `H_i(Δ; Z)` with explicit generators.
///
/// With `∂_i` in Smith form `U ∂_i V = D` of rank `r`, the last columns of `V`
/// are a basis `K` of the cycles and rows `r..` of `V^{-1}` give coordinates
/// in it. Writing `∂_{i+1} = K M` and `P M Q = diag(d)`, the columns of
/// `K P^{-1}` generate homology: order `d_j` for the first `rank M` of them
/// (order 1 ones are dropped), infinite for the rest.
#[derive(Clone, Debug)]
pub struct IntegralHomologyBasis {
    /// Generator orders; zero marks a free generator. Torsion comes first.
    pub orders: Vec<BigUint>,
    /// Generator cycles as chains on `faces(i)`.
    pub cycles: Vec<Vec<BigInt>>,
    kernel_coords: IntMatrix,
    p: IntMatrix,
    /// Row of `P` (coordinate) for each generator.
    rows: Vec<usize>,
}

impl IntegralHomologyBasis {
    pub fn new(c: &SimplicialComplex, i: i64, reduced: bool) -> Result<Self> {
        check_degree(i, reduced)?;
        let n = c.faces(i).len();
        let d_i = c.boundary(i, reduced);
        let snf_i = smith_normal_form(&d_i, true);
        let t = snf_i.transforms.unwrap();
        let r = snf_i.invariant_factors.len();
        let k = n - r;
        let kernel: Vec<Vec<BigInt>> = (r..n).map(|j| t.v.column(j)).collect();
        let mut kernel_coords = IntMatrix::zeros(k, n);
        for a in 0..k {
            for b in 0..n {
                kernel_coords[(a, b)] = t.v_inv[(r + a, b)].clone();
            }
        }
        let d_next = c.boundary(i + 1, reduced).to_dense();
        let m = kernel_coords.mul(&d_next);
        let snf_m = smith_normal_form(&SparseIntMatrix::from_dense(&m), true);
        let tm = snf_m.transforms.unwrap();
        let s = snf_m.invariant_factors.len();
        let mut orders = Vec::new();
        let mut rows = Vec::new();
        for j in 0..k {
            let order = if j < s {
                let d = snf_m.invariant_factors[j].magnitude().clone();
                if d.is_one() {
                    continue;
                }
                d
            } else {
                BigUint::zero()
            };
            orders.push(order);
            rows.push(j);
        }
        let cycles = rows
            .iter()
            .map(|&j| {
                let gen = tm.u_inv.column(j);
                (0..n)
                    .map(|x| (0..k).map(|a| &kernel[a][x] * &gen[a]).sum())
                    .collect()
            })
            .collect();
        Ok(IntegralHomologyBasis {
            orders,
            cycles,
            kernel_coords,
            p: tm.u,
            rows,
        })
    }

    pub fn group(&self) -> HomologyGroup {
        HomologyGroup {
            free_rank: self.orders.iter().filter(|o| o.is_zero()).count(),
            torsion: self.orders.iter().filter(|o| !o.is_zero()).cloned().collect(),
        }
    }

    /// Coordinates of a cycle's class; torsion coordinates reduced into
    /// `0..order`.
    pub fn coordinates(&self, cycle: &[BigInt]) -> Vec<BigInt> {
        let w = self.kernel_coords.mul_vec(cycle);
        let y = self.p.mul_vec(&w);
        self.rows
            .iter()
            .zip(&self.orders)
            .map(|(&j, o)| {
                if o.is_zero() {
                    y[j].clone()
                } else {
                    y[j].mod_floor(&BigInt::from(o.clone()))
                }
            })
            .collect()
    }
}

/// `H_i(f)` over `Z` in the generators of [`IntegralHomologyBasis`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralHomologyMap {
    pub source_orders: Vec<BigUint>,
    pub target_orders: Vec<BigUint>,
    /// Entry `(r, c)`: coordinate of the image of source generator `c` on
    /// target generator `r`.
    pub matrix: IntMatrix,
}

impl IntegralHomologyMap {
    /// The block between free generators.
    pub fn free_part(&self) -> IntMatrix {
        let rows: Vec<usize> = (0..self.target_orders.len()).filter(|&r| self.target_orders[r].is_zero()).collect();
        let cols: Vec<usize> = (0..self.source_orders.len()).filter(|&c| self.source_orders[c].is_zero()).collect();
        let mut m = IntMatrix::zeros(rows.len(), cols.len());
        for (a, &r) in rows.iter().enumerate() {
            for (b, &c) in cols.iter().enumerate() {
                m[(a, b)] = self.matrix[(r, c)].clone();
            }
        }
        m
    }

    pub fn is_identity(&self) -> bool {
        self.source_orders == self.target_orders
            && (0..self.matrix.rows()).all(|r| {
                (0..self.matrix.cols()).all(|c| self.matrix[(r, c)] == BigInt::from((r == c) as u8))
            })
    }
}

pub fn induced_map_over_integers(f: &SimplicialMap, i: i64, reduced: bool) -> Result<IntegralHomologyMap> {
    let dom = IntegralHomologyBasis::new(&f.domain, i, reduced)?;
    let cod = IntegralHomologyBasis::new(&f.codomain, i, reduced)?;
    let chain = if i == -1 {
        let mut m = IntMatrix::zeros(f.codomain.faces(-1).len(), f.domain.faces(-1).len());
        if m.rows() == 1 && m.cols() == 1 {
            m[(0, 0)] = BigInt::one();
        }
        m
    } else {
        f.chain_matrix(i).to_dense()
    };
    let mut matrix = IntMatrix::zeros(cod.orders.len(), dom.orders.len());
    for (col, z) in dom.cycles.iter().enumerate() {
        let image = chain.mul_vec(z);
        for (row, x) in cod.coordinates(&image).into_iter().enumerate() {
            matrix[(row, col)] = x;
        }
    }
    Ok(IntegralHomologyMap {
        source_orders: dom.orders,
        target_orders: cod.orders,
        matrix,
    })
}

/// Sign-free check that a chain vector is a cycle.
pub fn is_cycle(c: &SimplicialComplex, i: i64, reduced: bool, chain: &[BigInt]) -> bool {
    let d = c.boundary(i, reduced).to_dense();
    d.mul_vec(chain).iter().all(|x| x.is_zero())
}

/// Largest absolute entry, for sanity reports.
pub fn max_abs_entry(m: &IntMatrix) -> BigInt {
    let mut best = BigInt::zero();
    for r in 0..m.rows() {
        for x in m.row(r) {
            if x.abs() > best {
                best = x.abs();
            }
        }
    }
    best
}
