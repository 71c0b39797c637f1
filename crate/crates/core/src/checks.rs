//! Invariant checks run over graph corpora. Each returns the failures it
//! found as short messages; an empty list means every check passed.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::complex::{ComplexKind, SimplicialComplex};
use crate::error::Result;
use crate::families::{ModuleEvaluator, NamedGraph};
use crate::graph::Graph;
use crate::homology::uct_consistency;
use crate::linalg::{smith_normal_form, IntMatrix, Matrix, Rationals, SparseIntMatrix};
use crate::minors::{enumerate, MinorMorphism};

fn top(c: &SimplicialComplex) -> i64 {
    c.dimension().unwrap_or(-1)
}

/// `∂_k ∘ ∂_{k+1} = 0` in reduced and unreduced chains.
pub fn boundary_squares(name: &str, c: &SimplicialComplex) -> Vec<String> {
    let mut out = Vec::new();
    for reduced in [false, true] {
        for k in 0..=top(c) {
            if !c.boundary(k, reduced).mul(&c.boundary(k + 1, reduced)).is_zero() {
                out.push(format!("{name}: ∂{k}∂{} != 0 (reduced = {reduced})", k + 1));
            }
        }
    }
    out
}

fn is_diagonal_chain(d: &IntMatrix, factors: &[BigInt]) -> bool {
    for r in 0..d.rows() {
        for c in 0..d.cols() {
            let expect = if r == c && r < factors.len() {
                factors[r].clone()
            } else {
                BigInt::zero()
            };
            if d.row(r)[c] != expect {
                return false;
            }
        }
    }
    factors.iter().all(|f| *f > BigInt::zero()) && factors.windows(2).all(|w| (&w[1] % &w[0]).is_zero())
}

/// Smith normal form of `a`: `U A V = D`, `U U⁻¹ = I`, `V V⁻¹ = I`, and
/// each invariant factor divides the next.
pub fn snf_reconstruction(name: &str, a: &SparseIntMatrix) -> Vec<String> {
    let snf = smith_normal_form(a, true);
    let t = snf.transforms.as_ref().expect("transforms requested");
    let dense = a.to_dense();
    let mut out = Vec::new();
    if !is_diagonal_chain(&t.u.mul(&dense).mul(&t.v), &snf.invariant_factors) {
        out.push(format!("{name}: U·A·V is not the divisibility-ordered diagonal"));
    }
    if t.u.mul(&t.u_inv) != IntMatrix::identity(a.rows()) || t.v.mul(&t.v_inv) != IntMatrix::identity(a.cols()) {
        out.push(format!("{name}: transforms are not inverse pairs"));
    }
    out
}

/// Boundary SNF checks in every degree.
pub fn snf_on_boundaries(name: &str, c: &SimplicialComplex) -> Vec<String> {
    (0..=top(c) + 1)
        .flat_map(|k| snf_reconstruction(&format!("{name} ∂{k}"), &c.boundary(k, true)))
        .collect()
}

pub fn uct(name: &str, c: &SimplicialComplex, primes: &[u64]) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for i in 0..=top(c).max(0) {
        for &p in primes {
            if !uct_consistency(c, i, p)? {
                out.push(format!("{name}: UCT fails at i = {i}, p = {p}"));
            }
        }
    }
    Ok(out)
}

/// The boundary, SNF and UCT checks for each graph and complex kind.
pub fn complex_suite(graphs: &[NamedGraph], kinds: &[ComplexKind], primes: &[u64]) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for g in graphs {
        for kind in kinds {
            let c = kind.build(&g.graph);
            let name = format!("{} {}", g.name, kind.name());
            out.extend(boundary_squares(&name, &c));
            out.extend(snf_on_boundaries(&name, &c));
            out.extend(uct(&name, &c, primes)?);
        }
    }
    Ok(out)
}

/// Counts of what [`functoriality`] looked at.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FunctorialityTally {
    pub identities: usize,
    pub compositions: usize,
    pub failures: Vec<String>,
}

/// `M(id) = I` and `M(ψ ∘ φ) = M(φ) M(ψ)` for all morphisms between the
/// given graphs.
pub fn functoriality(m: &dyn ModuleEvaluator, graphs: &[Arc<Graph>]) -> Result<FunctorialityTally> {
    let mut tally = FunctorialityTally::default();
    let name = m.name();
    let mut homs: Vec<Vec<Vec<MinorMorphism>>> = Vec::with_capacity(graphs.len());
    for g in graphs {
        let mut row = Vec::with_capacity(graphs.len());
        for h in graphs {
            row.push(enumerate(g, h)?);
        }
        homs.push(row);
    }
    for (i, g) in graphs.iter().enumerate() {
        let id = m.induced(&MinorMorphism::identity(g.clone()))?;
        let n = m.dimension(g)?;
        tally.identities += 1;
        if id != Matrix::identity(Rationals, n) {
            tally.failures.push(format!("{name}: identity on graph {i} is not I"));
        }
    }
    for (a, row) in homs.iter().enumerate() {
        for (b, phis) in row.iter().enumerate() {
            for phi in phis {
                let m_phi = m.induced(phi)?;
                for (c, psis) in homs[b].iter().enumerate() {
                    for psi in psis {
                        let lhs = m.induced(&phi.then(psi)?)?;
                        let rhs = m_phi.mul(&m.induced(psi)?);
                        tally.compositions += 1;
                        if lhs != rhs {
                            tally.failures.push(format!("{name}: composition {a} → {b} → {c} is not respected"));
                        }
                    }
                }
            }
        }
    }
    Ok(tally)
}

