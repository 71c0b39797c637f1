//! Edge ideals of complement line graphs and their multigraded Betti numbers.
//!
//! `I_{L^c}(G)` is generated by `x_e x_f` over pairs of edges with no common
//! vertex. Its Stanley–Reisner complex is the flag complex of `L(G)`, and
//! Hochster's formula reads Betti numbers off restrictions of that complex:
//! `β_{i,σ}(I) = dim H̃^{|σ|-i-2}(Δ|_σ; K)`. The Koszul computation in
//! [`koszul_betti_oracle`] gets the same numbers straight from the ideal.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::reduced_cohomology_dim;
use crate::linalg::{rank_of, PrimeField, Rationals, SparseIntMatrix};
use crate::util::combinations;

/// Variable cap for the Koszul oracle.
pub const KOSZUL_VARIABLE_LIMIT: usize = 8;
/// Variable cap for full Betti tables (every subset is visited).
pub const BETTI_VARIABLE_LIMIT: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquarefreeMonomialIdeal {
    variables: Vec<String>,
    generators: Vec<Vec<usize>>,
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

impl SquarefreeMonomialIdeal {
    /// Generators are supports (variable index sets); non-minimal ones are dropped.
    pub fn new(variables: Vec<String>, generators: Vec<Vec<usize>>) -> Self {
        let mut gens: Vec<Vec<usize>> = generators
            .into_iter()
            .map(|mut g| {
                g.sort_unstable();
                g.dedup();
                g
            })
            .collect();
        gens.sort();
        gens.dedup();
        let minimal: Vec<Vec<usize>> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && is_subset(h, g)))
            .cloned()
            .collect();
        SquarefreeMonomialIdeal {
            variables,
            generators: minimal,
        }
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn generators(&self) -> &[Vec<usize>] {
        &self.generators
    }

    pub fn generator_labels(&self) -> Vec<Vec<String>> {
        self.generators
            .iter()
            .map(|g| g.iter().map(|&i| self.variables[i].clone()).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Whether `x^b` lies in the ideal.
    pub fn contains_monomial(&self, exponents: &[u32]) -> bool {
        self.generators.iter().any(|g| g.iter().all(|&v| exponents[v] > 0))
    }

    /// Faces are the variable sets containing no generator.
    pub fn stanley_reisner_complex(&self) -> SimplicialComplex {
        let mut ground = self.variables.clone();
        ground.sort();
        debug_assert_eq!(ground, self.variables, "variables must be sorted");
        SimplicialComplex::from_extension_rule(self.variables.clone(), |face, j| {
            !self
                .generators
                .iter()
                .any(|g| g.contains(&j) && g.iter().all(|v| *v == j || face.contains(v)))
        })
    }
}

/// `⟨x_e x_f : e, f share no vertex⟩` on the edge ids of `g`.
pub fn edge_ideal_lc(g: &Graph) -> SquarefreeMonomialIdeal {
    let lc = g.complement_line_graph();
    SquarefreeMonomialIdeal::new(g.edge_ids(), lc.edges().map(|(a, b)| alloc::vec![a, b]).collect())
}

fn check_field(characteristic: u64) -> Result<()> {
    if characteristic != 0 {
        PrimeField::new(characteristic)?;
    }
    Ok(())
}

/// `β_{i,σ}` of a squarefree monomial ideal by Hochster's formula.
pub fn hochster_betti_of_ideal(ideal: &SquarefreeMonomialIdeal, i: usize, sigma: &[usize], characteristic: u64) -> Result<usize> {
    check_field(characteristic)?;
    let j = sigma.len() as i64 - i as i64 - 2;
    if j < -1 {
        return Ok(0);
    }
    let restricted = ideal.stanley_reisner_complex().restrict(sigma)?;
    reduced_cohomology_dim(&restricted, j, characteristic)
}

/// `β_{i,σ}(I_{L^c}(G))` with `σ` given as edge indices.
pub fn hochster_betti(g: &Graph, i: usize, sigma: &[usize], characteristic: u64) -> Result<usize> {
    hochster_betti_of_ideal(&edge_ideal_lc(g), i, sigma, characteristic)
}

/// `dim Tor_i(I, K)` in multidegree `a` from the Koszul complex.
///
/// In degree `a`, `K_i ⊗ I` has a basis `e_τ ⊗ x^{a-τ}` over `|τ| = i`,
/// `τ ⊆ supp(a)`, with `x^{a-τ} ∈ I`; the differential removes one index `j`
/// of `τ` with sign `(-1)^position` and multiplies by `x_j`.
pub fn koszul_betti_oracle(ideal: &SquarefreeMonomialIdeal, i: usize, a: &[u32], characteristic: u64) -> Result<usize> {
    let n = ideal.variables.len();
    if n > KOSZUL_VARIABLE_LIMIT {
        return Err(Error::TooLarge {
            what: "variable count",
            limit: KOSZUL_VARIABLE_LIMIT,
            got: n,
        });
    }
    if a.len() != n {
        return Err(Error::Mismatch);
    }
    check_field(characteristic)?;
    let support: Vec<usize> = (0..n).filter(|&v| a[v] > 0).collect();
    let basis = |k: usize| -> Vec<Vec<usize>> {
        combinations(support.len(), k)
            .into_iter()
            .map(|p| p.iter().map(|&x| support[x]).collect::<Vec<usize>>())
            .filter(|tau| {
                let mut b = a.to_vec();
                for &v in tau {
                    b[v] -= 1;
                }
                ideal.contains_monomial(&b)
            })
            .collect()
    };
    let differential = |from: &[Vec<usize>], to: &[Vec<usize>]| -> SparseIntMatrix {
        let mut m = SparseIntMatrix::zeros(to.len(), from.len());
        for (c, tau) in from.iter().enumerate() {
            for p in 0..tau.len() {
                let face: Vec<usize> = tau.iter().enumerate().filter(|&(q, _)| q != p).map(|(_, &v)| v).collect();
                if let Ok(r) = to.binary_search(&face) {
                    m.set(r, c, if p % 2 == 0 { 1 } else { -1 });
                }
            }
        }
        m
    };
    let here = basis(i);
    if here.is_empty() {
        return Ok(0);
    }
    let below = if i == 0 { Vec::new() } else { basis(i - 1) };
    let above = basis(i + 1);
    let d_out = differential(&here, &below);
    let d_in = differential(&above, &here);
    let rank = |m: &SparseIntMatrix| -> Result<usize> {
        Ok(if characteristic == 0 {
            rank_of(&Rationals, m)
        } else {
            rank_of(&PrimeField::new(characteristic)?, m)
        })
    };
    Ok(here.len() - rank(&d_out)? - rank(&d_in)?)
}

/// Squarefree multidegree of a variable subset.
pub fn squarefree_degree(n: usize, sigma: &[usize]) -> Vec<u32> {
    let mut a = alloc::vec![0u32; n];
    for &v in sigma {
        a[v] = 1;
    }
    a
}

/// Nonzero `β_{i,σ}` for `i <= max_i`, keyed by `(i, σ)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    pub variables: Vec<String>,
    pub entries: BTreeMap<(usize, Vec<usize>), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize, sigma: &[usize]) -> usize {
        self.entries.get(&(i, sigma.to_vec())).copied().unwrap_or(0)
    }

    /// `Σ_{|σ| = a} β_{i,σ}`.
    pub fn coarse(&self, i: usize, a: usize) -> usize {
        self.entries
            .iter()
            .filter(|((k, s), _)| *k == i && s.len() == a)
            .map(|(_, v)| v)
            .sum()
    }

    /// Largest `|σ|` with `β_{i,σ} != 0`, or -1.
    pub fn max_nonzero_degree(&self, i: usize) -> i64 {
        self.entries
            .keys()
            .filter(|(k, _)| *k == i)
            .map(|(_, s)| s.len() as i64)
            .max()
            .unwrap_or(-1)
    }
}

fn check_table_size(g: &Graph) -> Result<()> {
    if g.edge_count() > BETTI_VARIABLE_LIMIT {
        return Err(Error::TooLarge {
            what: "edge count",
            limit: BETTI_VARIABLE_LIMIT,
            got: g.edge_count(),
        });
    }
    Ok(())
}

/// All nonzero Hochster Betti numbers with `i <= max_i`.
pub fn betti_table(g: &Graph, max_i: usize, characteristic: u64) -> Result<BettiTable> {
    check_table_size(g)?;
    check_field(characteristic)?;
    let ideal = edge_ideal_lc(g);
    let delta = ideal.stanley_reisner_complex();
    let n = g.edge_count();
    let mut entries = BTreeMap::new();
    for mask in 0u32..1 << n {
        let sigma: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let restricted = delta.restrict(&sigma)?;
        for i in 0..=max_i {
            let j = sigma.len() as i64 - i as i64 - 2;
            if j < -1 {
                break;
            }
            let b = reduced_cohomology_dim(&restricted, j, characteristic)?;
            if b != 0 {
                entries.insert((i, sigma.clone()), b);
            }
        }
    }
    Ok(BettiTable {
        variables: g.edge_ids(),
        entries,
    })
}

/// `β^G_{i,a} = Σ_{|σ| = a} β_{i,σ}`.
pub fn coarse_betti(g: &Graph, i: usize, a: usize, characteristic: u64) -> Result<usize> {
    check_table_size(g)?;
    let ideal = edge_ideal_lc(g);
    let mut total = 0;
    for sigma in combinations(g.edge_count(), a) {
        total += hochster_betti_of_ideal(&ideal, i, &sigma, characteristic)?;
    }
    Ok(total)
}

/// Largest `a` with `β^G_{i,a} != 0`, or -1.
pub fn max_nonzero_degree(g: &Graph, i: usize, characteristic: u64) -> Result<i64> {
    for a in (0..=g.edge_count()).rev() {
        if coarse_betti(g, i, a, characteristic)? != 0 {
            return Ok(a as i64);
        }
    }
    Ok(-1)
}
