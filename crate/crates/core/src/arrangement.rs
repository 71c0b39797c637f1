//! Cohomology of complements of the graphical arrangement of `L^c(G)`.
//!
//! Vertices of `L^c(G)` are the edges of `G`; each edge `{e, f}` of `L^c(G)`
//! gives the subspace `x_e = x_f` in `(C^d)^{E(G)}`. Ranks come from the
//! chromatic polynomial of `L^c(G)`: the coefficient of `k^{n-j}` is, up to
//! sign, the rank in degree `j(2d - 1)`. The presentation by generators and
//! cycle relations is built separately and checked against those ranks.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::canon::{simple_canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{Graph, SimpleGraph};
use crate::linalg::{IndependentSet, Rationals};
use crate::minors::MinorMorphism;
use crate::util::{combinations, sort_sign};

/// Edge cap for deletion–contraction.
pub const CHROMATIC_EDGE_LIMIT: usize = 60;
/// Cap on the number of cycles collected for a presentation.
pub const CYCLE_COUNT_LIMIT: usize = 100_000;
/// Cap on generators for the degree-by-degree rank computation.
pub const OS_GENERATOR_LIMIT: usize = 40;

/// Integer polynomial, coefficient of `k^i` at index `i`.
pub type Polynomial = Vec<BigInt>;

fn trim(mut p: Polynomial) -> Polynomial {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Polynomial {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[BigInt], b: &[BigInt]) -> Polynomial {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    trim((0..n).map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero)).collect())
}

/// `k^n`.
fn monomial(n: usize) -> Polynomial {
    let mut p = vec![BigInt::zero(); n + 1];
    p[n] = BigInt::one();
    p
}

pub fn evaluate(p: &[BigInt], k: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * k + c)
}

fn contract(h: &SimpleGraph, u: usize, v: usize) -> SimpleGraph {
    // v merges into u; later vertices shift down
    let idx = |x: usize| {
        let x = if x == v { u } else { x };
        if x > v {
            x - 1
        } else {
            x
        }
    };
    SimpleGraph::from_indices(
        h.vertex_count() - 1,
        h.edges().filter(|&e| e != (u.min(v), u.max(v))).map(|(a, b)| (idx(a), idx(b))),
    )
}

fn delete(h: &SimpleGraph, u: usize, v: usize) -> SimpleGraph {
    SimpleGraph::from_indices(h.vertex_count(), h.edges().filter(|&e| e != (u.min(v), u.max(v))))
}

fn induced(h: &SimpleGraph, vs: &[usize]) -> SimpleGraph {
    let pos = |x: usize| vs.binary_search(&x).ok();
    SimpleGraph::from_indices(
        vs.len(),
        h.edges().filter_map(|(a, b)| Some((pos(a)?, pos(b)?))),
    )
}

fn chromatic_rec(h: &SimpleGraph, memo: &mut BTreeMap<CanonicalForm, Polynomial>) -> Polynomial {
    let n = h.vertex_count();
    let m = h.edge_count();
    if m == 0 {
        return monomial(n);
    }
    if m == n * (n - 1) / 2 {
        // falling factorial k(k-1)...(k-n+1)
        return (0..n).fold(vec![BigInt::one()], |acc, i| poly_mul(&acc, &[BigInt::from(-(i as i64)), BigInt::one()]));
    }
    let comps = h.components();
    if comps.len() > 1 {
        return comps
            .iter()
            .fold(vec![BigInt::one()], |acc, c| poly_mul(&acc, &chromatic_rec(&induced(h, c), memo)));
    }
    let key = simple_canonical_form(h);
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let (u, v) = h.edges().next().unwrap();
    let p = poly_sub(&chromatic_rec(&delete(h, u, v), memo), &chromatic_rec(&contract(h, u, v), memo));
    memo.insert(key, p.clone());
    p
}

/// Chromatic polynomial by deletion–contraction, memoized on canonical forms.
pub fn chromatic_polynomial(h: &SimpleGraph) -> Result<Polynomial> {
    if h.edge_count() > CHROMATIC_EDGE_LIMIT {
        return Err(Error::TooLarge {
            what: "edge count",
            limit: CHROMATIC_EDGE_LIMIT,
            got: h.edge_count(),
        });
    }
    Ok(chromatic_rec(h, &mut BTreeMap::new()))
}

/// Cohomology ranks by degree: `ranks[j]` sits in degree `j * generator_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoincareVector {
    pub generator_degree: usize,
    pub ranks: Vec<BigUint>,
}

impl PoincareVector {
    pub fn rank_at(&self, degree: usize) -> BigUint {
        if degree % self.generator_degree != 0 {
            return BigUint::zero();
        }
        self.ranks.get(degree / self.generator_degree).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.ranks.iter().sum()
    }

    /// `(degree, rank)` for every nonzero rank.
    pub fn nonzero(&self) -> Vec<(usize, BigUint)> {
        self.ranks
            .iter()
            .enumerate()
            .filter(|(_, r)| !r.is_zero())
            .map(|(j, r)| (j * self.generator_degree, r.clone()))
            .collect()
    }
}

fn check_d(d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::InvalidSize(String::from("d must be at least 1")));
    }
    Ok(())
}

/// Ranks of `H^*(Conf(L^c(G), C^d))`.
pub fn conf_poincare(g: &Graph, d: usize) -> Result<PoincareVector> {
    check_d(d)?;
    let chi = chromatic_polynomial(&g.complement_line_graph())?;
    let n = g.edge_count();
    let ranks = (0..=n)
        .map(|j| chi.get(n - j).map(|c| c.magnitude().clone()).unwrap_or_default())
        .collect::<Vec<_>>();
    let last = ranks.iter().rposition(|r| !r.is_zero()).unwrap_or(0);
    Ok(PoincareVector {
        generator_degree: 2 * d - 1,
        ranks: ranks[..=last].to_vec(),
    })
}

/// How generators multiply in the presented algebra; the parity is that of
/// the real codimension `r` of the removed subspaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    /// `r` even: exterior algebra (generators anticommute).
    Even,
    /// `r` odd: symmetric algebra with `e² = 0`.
    Odd,
}

impl Parity {
    /// Complex coefficients: codimension `2d`, always even.
    pub fn complex(_d: usize) -> Parity {
        Parity::Even
    }

    /// Real coefficients: codimension `d`.
    pub fn real(d: usize) -> Parity {
        if d % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Sign of the product of two disjoint sorted monomials, put in order.
    fn product_sign(&self, left: &[usize], right: &[usize]) -> i32 {
        if left.iter().any(|x| right.contains(x)) {
            return 0;
        }
        match self {
            Parity::Even => {
                let seq: Vec<usize> = left.iter().chain(right).copied().collect();
                sort_sign(&seq)
            }
            Parity::Odd => 1,
        }
    }
}

/// `Σ_i (-1)^i e_{C \ c_i}` for a cycle `C` of generators (sorted indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub cycle: Vec<usize>,
    pub terms: Vec<(i32, Vec<usize>)>,
}

impl Relation {
    fn for_cycle(cycle: Vec<usize>) -> Relation {
        let terms = (0..cycle.len())
            .map(|i| {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                let mono = cycle.iter().enumerate().filter(|&(p, _)| p != i).map(|(_, &x)| x).collect();
                (sign, mono)
            })
            .collect();
        Relation { cycle, terms }
    }

    pub fn degree(&self) -> usize {
        self.cycle.len() - 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OSPresentation {
    /// Edges of `L^c(G)` as pairs of edge indices of `G`, sorted.
    pub generators: Vec<(usize, usize)>,
    pub generator_labels: Vec<(String, String)>,
    pub generator_degree: usize,
    pub parity: Parity,
    pub relations: Vec<Relation>,
    /// Longest cycle considered, if capped.
    pub cycle_cap: Option<usize>,
}

/// Simple cycles of a simple graph as sorted edge-index sets, shortest
/// first; `max_len` bounds the number of edges in a cycle.
pub fn simple_cycles(h: &SimpleGraph, max_len: Option<usize>) -> Result<Vec<Vec<usize>>> {
    let edges: Vec<(usize, usize)> = h.edges().collect();
    let edge_index = |a: usize, b: usize| edges.binary_search(&(a.min(b), a.max(b))).unwrap();
    let n = h.vertex_count();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| h.neighbors(v)).collect();
    let cap = max_len.unwrap_or(n);
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    for start in 0..n {
        let mut path = vec![start];
        let mut on_path = vec![false; n];
        on_path[start] = true;
        let mut stack: Vec<usize> = vec![0];
        while let Some(next_idx) = stack.last_mut() {
            let v = *path.last().unwrap();
            if *next_idx >= adj[v].len() {
                stack.pop();
                on_path[v] = false;
                path.pop();
                continue;
            }
            let w = adj[v][*next_idx];
            *next_idx += 1;
            if w == start && path.len() >= 3 {
                let mut cyc: Vec<usize> = path.windows(2).map(|p| edge_index(p[0], p[1])).collect();
                cyc.push(edge_index(v, start));
                cyc.sort_unstable();
                found.insert(cyc);
                if found.len() > CYCLE_COUNT_LIMIT {
                    return Err(Error::TooLarge {
                        what: "cycle count",
                        limit: CYCLE_COUNT_LIMIT,
                        got: found.len(),
                    });
                }
            } else if w > start && !on_path[w] && path.len() < cap {
                on_path[w] = true;
                path.push(w);
                stack.push(0);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = found.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

pub fn os_presentation(g: &Graph, d: usize, max_cycle_len: Option<usize>) -> Result<OSPresentation> {
    presentation_with_parity(g, 2 * d - 1, Parity::complex(d), max_cycle_len, d)
}

/// The real-coefficient variant: generators in degree `d - 1` (zero when
/// `d = 1`, reported as degree 0).
pub fn os_presentation_real(g: &Graph, d: usize, max_cycle_len: Option<usize>) -> Result<OSPresentation> {
    presentation_with_parity(g, d - 1, Parity::real(d), max_cycle_len, d)
}

fn presentation_with_parity(g: &Graph, degree: usize, parity: Parity, cap: Option<usize>, d: usize) -> Result<OSPresentation> {
    check_d(d)?;
    let lc = g.complement_line_graph();
    let generators: Vec<(usize, usize)> = lc.edges().collect();
    let ids = g.edge_ids();
    let generator_labels = generators.iter().map(|&(a, b)| (ids[a].clone(), ids[b].clone())).collect();
    let relations = simple_cycles(&lc, cap)?.into_iter().map(Relation::for_cycle).collect();
    Ok(OSPresentation {
        generators,
        generator_labels,
        generator_degree: degree,
        parity,
        relations,
        cycle_cap: cap,
    })
}

impl OSPresentation {
    /// Rank of the presented algebra in word length `j` over `Q`.
    pub fn rank_in_length(&self, j: usize) -> Result<usize> {
        let n = self.generators.len();
        if n > OS_GENERATOR_LIMIT {
            return Err(Error::TooLarge {
                what: "generator count",
                limit: OS_GENERATOR_LIMIT,
                got: n,
            });
        }
        if j > n {
            return Ok(0);
        }
        let basis = combinations(n, j);
        let mut span = IndependentSet::new(Rationals);
        for rel in self.relations.iter().filter(|r| r.degree() <= j) {
            for m in combinations(n, j - rel.degree()) {
                let mut v = vec![BigRational::zero(); basis.len()];
                let mut any = false;
                for (sign, term) in &rel.terms {
                    let s = self.parity.product_sign(&m, term);
                    if s == 0 {
                        continue;
                    }
                    let mut mono: Vec<usize> = m.iter().chain(term).copied().collect();
                    mono.sort_unstable();
                    let idx = basis.binary_search(&mono).unwrap();
                    v[idx] += BigRational::from_integer(BigInt::from(s * sign));
                    any = true;
                }
                if any {
                    span.insert(&v);
                }
            }
        }
        Ok(basis.len() - span.len())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OsRankRow {
    pub degree: usize,
    pub presented: usize,
    pub chromatic: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OsRankReport {
    pub generator_degree: usize,
    pub rows: Vec<OsRankRow>,
}

impl OsRankReport {
    pub fn agrees(&self) -> bool {
        self.rows.iter().all(|r| BigUint::from(r.presented) == r.chromatic)
    }
}

/// Compares presented ranks with chromatic ranks in every degree up to
/// `max_degree`, using cycles no longer than needed.
pub fn os_rank_check(g: &Graph, d: usize, max_degree: usize) -> Result<OsRankReport> {
    check_d(d)?;
    let r = 2 * d - 1;
    let max_len = max_degree / r;
    let pres = os_presentation(g, d, Some(max_len + 1))?;
    let poincare = conf_poincare(g, d)?;
    let mut rows = Vec::new();
    for j in 0..=max_len {
        rows.push(OsRankRow {
            degree: j * r,
            presented: pres.rank_in_length(j)?,
            chromatic: poincare.rank_at(j * r),
        });
    }
    Ok(OsRankReport {
        generator_degree: r,
        rows,
    })
}

/// Result of pulling a presentation back along a minor morphism.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PullbackReport {
    pub generators_mapped: usize,
    pub relations_mapped: usize,
    pub failures: Vec<String>,
}

/// For `φ: G → G'`, sends each generator `{e', f'}` of `L^c(G')` to
/// `{φ*e', φ*f'}` and checks that generators land on generators and every
/// cycle relation lands on `±` the relation of the image cycle.
pub fn presentation_pullback(phi: &MinorMorphism, d: usize) -> Result<PullbackReport> {
    let (g, h) = (phi.source(), phi.target());
    let src = os_presentation(h, d, None)?;
    let dst = os_presentation(g, d, None)?;
    let inj = phi.edge_injection();
    let mut report = PullbackReport::default();
    let mut gen_map = Vec::new();
    for &(a, b) in &src.generators {
        let (x, y) = (inj.apply(a), inj.apply(b));
        match dst.generators.binary_search(&(x.min(y), x.max(y))) {
            Ok(i) => gen_map.push(i),
            Err(_) => {
                report.failures.push(alloc::format!("generator ({}, {}) has no image", h.edge(a).id, h.edge(b).id));
                return Ok(report);
            }
        }
        report.generators_mapped += 1;
    }
    let dst_relations: BTreeMap<&Vec<usize>, &Relation> = dst.relations.iter().map(|r| (&r.cycle, r)).collect();
    for rel in &src.relations {
        let mut cycle: Vec<usize> = rel.cycle.iter().map(|&x| gen_map[x]).collect();
        cycle.sort_unstable();
        let Some(target) = dst_relations.get(&cycle) else {
            report.failures.push(alloc::format!("cycle {:?} does not map to a cycle", rel.cycle));
            continue;
        };
        let image: BTreeMap<Vec<usize>, i32> = rel
            .terms
            .iter()
            .map(|(s, m)| {
                let mapped: Vec<usize> = m.iter().map(|&x| gen_map[x]).collect();
                let sign = s * sort_sign(&mapped);
                let mut sorted = mapped;
                sorted.sort_unstable();
                (sorted, sign)
            })
            .collect();
        let expected: BTreeMap<Vec<usize>, i32> = target.terms.iter().map(|(s, m)| (m.clone(), *s)).collect();
        let negated: BTreeMap<Vec<usize>, i32> = expected.iter().map(|(m, s)| (m.clone(), -s)).collect();
        if image != expected && image != negated {
            report.failures.push(alloc::format!("relation on {:?} maps off its image relation", rel.cycle));
        }
        report.relations_mapped += 1;
    }
    Ok(report)
}

/// Number of acyclic orientations, `|χ(-1)|`.
pub fn acyclic_orientations(h: &SimpleGraph) -> Result<BigUint> {
    Ok(evaluate(&chromatic_polynomial(h)?, &BigInt::from(-1)).magnitude().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{standard_graph, StandardGraph};

    fn graph(kind: StandardGraph) -> Graph {
        standard_graph(kind).unwrap()
    }

    /// Proper colorings with `k` colors by exhaustive search.
    fn count_colorings(h: &SimpleGraph, k: u64) -> u64 {
        let n = h.vertex_count();
        let edges: Vec<(usize, usize)> = h.edges().collect();
        let total = k.pow(n as u32);
        (0..total)
            .filter(|&code| {
                let color = |v: usize| (code / k.pow(v as u32)) % k;
                edges.iter().all(|&(a, b)| color(a) != color(b))
            })
            .count() as u64
    }

    fn ints(xs: &[i64]) -> Polynomial {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn chromatic_examples() {
        let tri = SimpleGraph::from_indices(3, [(0, 1), (1, 2), (0, 2)]);
        assert_eq!(chromatic_polynomial(&tri).unwrap(), ints(&[0, 2, -3, 1]));
        assert_eq!(chromatic_polynomial(&SimpleGraph::from_indices(4, [])).unwrap(), ints(&[0, 0, 0, 0, 1]));
        let petersen = graph(StandardGraph::Complete(5)).complement_line_graph();
        let p = chromatic_polynomial(&petersen).unwrap();
        assert_eq!(count_colorings(&petersen, 3), 120);
        assert_eq!(evaluate(&p, &BigInt::from(3)), BigInt::from(120));
    }

    #[test]
    fn chromatic_matches_coloring_oracle() {
        let graphs = [
            SimpleGraph::from_indices(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]),
            SimpleGraph::complete_bipartite_plus_point(2, 3),
            graph(StandardGraph::Complete(4)).line_graph(),
            SimpleGraph::from_indices(6, [(0, 1), (2, 3), (3, 4), (4, 2)]),
        ];
        for h in &graphs {
            let p = chromatic_polynomial(h).unwrap();
            for k in 0..5u64 {
                assert_eq!(evaluate(&p, &BigInt::from(k)), BigInt::from(count_colorings(h, k)));
            }
        }
    }

    #[test]
    fn poincare_examples() {
        let p3 = graph(StandardGraph::Path(3));
        let pv = conf_poincare(&p3, 1).unwrap();
        assert_eq!(pv.ranks, vec![BigUint::one(), BigUint::one()]);
        let k3 = conf_poincare(&graph(StandardGraph::Complete(3)), 2).unwrap();
        assert_eq!(k3.nonzero(), vec![(0, BigUint::one())]);
        let pv2 = conf_poincare(&p3, 2).unwrap();
        assert_eq!(pv2.rank_at(3), BigUint::one());
        assert_eq!(pv2.rank_at(1), BigUint::zero());
    }

    #[test]
    fn two_star_trees_match_bipartite_arrangements() {
        for a in 1..=3 {
            for b in 1..=3 {
                let g = graph(StandardGraph::TwoStarTree(a, b));
                let lc = g.complement_line_graph();
                assert!(lc.is_isomorphic(&SimpleGraph::complete_bipartite_plus_point(a, b)));
                let kab = SimpleGraph::from_indices(a + b, (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j))));
                // isolated vertex multiplies by k, shifting nothing in the ranks
                let expected = chromatic_polynomial(&kab).unwrap();
                let n = a + b;
                let pv = conf_poincare(&g, 1).unwrap();
                for (j, r) in pv.ranks.iter().enumerate() {
                    assert_eq!(r, expected[n - j].magnitude());
                }
            }
        }
    }

    #[test]
    fn cycles() {
        let k4 = SimpleGraph::from_indices(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let c = simple_cycles(&k4, None).unwrap();
        assert_eq!(c.len(), 7);
        assert_eq!(simple_cycles(&k4, Some(3)).unwrap().len(), 4);
    }

    #[test]
    fn presentation_ranks() {
        // L^c(K_{3,3}-ish): use the triangle-shaped L^c found among small graphs
        let g = Graph::new(
            &["a", "b", "c", "d", "e", "f"],
            &[("x", "a", "b"), ("y", "c", "d"), ("z", "e", "f"), ("p", "b", "c"), ("q", "d", "e")],
        )
        .unwrap();
        let pres = os_presentation(&g, 1, None).unwrap();
        assert!(pres.relations.iter().any(|r| r.cycle.len() == 3));
        let report = os_rank_check(&g, 1, 3).unwrap();
        assert!(report.agrees(), "{report:?}");
        assert!(os_presentation(&graph(StandardGraph::Star(4)), 1, None).unwrap().generators.is_empty());
    }

    #[test]
    fn sum_rule() {
        let g = graph(StandardGraph::Path(5));
        let pv = conf_poincare(&g, 1).unwrap();
        assert_eq!(pv.total(), acyclic_orientations(&g.complement_line_graph()).unwrap());
    }
}
