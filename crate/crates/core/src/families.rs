//! Graph enumeration and scans over families of graphs.
//!
//! Every scan reports what it observed on the graphs it was given. Observed
//! maxima (torsion exponents, span deficits) describe the scanned family only.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::canon::{brute_force_form_of_pairs, canonical_form, BruteForm};
use crate::complex::{induced_simplicial_map, ComplexKind};
use crate::error::{Error, Result};
use crate::graph::{standard_graph, Graph, StandardGraph};
use crate::homology::{homology, induced_map_over_field, uct_consistency, Coefficients, FieldHomologyBasis, HomologyGroup};
use crate::linalg::{IndependentSet, Matrix, Rationals};
use crate::minors::{enumerate, MinorMorphism};
use crate::util::{binomial, label, DisjointSets};

/// Largest edge count accepted by [`enumerate_graphs`].
pub const ENUMERATE_EDGE_LIMIT: usize = 8;
/// Largest edge count accepted by [`enumerate_graphs_exhaustive`].
pub const EXHAUSTIVE_EDGE_LIMIT: usize = 5;
/// Largest semilength accepted by [`hd_series`].
pub const DYCK_LIMIT: usize = 8;

fn graph_from_pairs(n: usize, pairs: &[(usize, usize)]) -> Graph {
    let vs: Vec<String> = (0..n).map(|i| label("v", i, n)).collect();
    let es: Vec<(String, String, String)> = pairs
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| (label("e", i, pairs.len()), vs[a].clone(), vs[b].clone()))
        .collect();
    Graph::new(&vs, &es).expect("pairs index existing vertices")
}

fn check_edge_limit(max_edges: usize, limit: usize) -> Result<()> {
    if max_edges > limit {
        return Err(Error::TooLarge {
            what: "max edges",
            limit,
            got: max_edges,
        });
    }
    Ok(())
}

/// One representative per isomorphism class of connected graphs with
/// `1..=max_edges` edges, on canonical labels, ordered by edge count and
/// then canonical code.
///
/// Graphs are grown one edge at a time from the point: a new loop, a new
/// edge between existing vertices, or a pendant edge to a new vertex.
pub fn enumerate_graphs(max_edges: usize, simple_only: bool) -> Result<Vec<Graph>> {
    check_edge_limit(max_edges, ENUMERATE_EDGE_LIMIT)?;
    let mut out = Vec::new();
    let mut level: Vec<(usize, Vec<(usize, usize)>)> = vec![(1, Vec::new())];
    for _ in 0..max_edges {
        let mut next = BTreeMap::new();
        for (n, pairs) in &level {
            let mut extensions = Vec::new();
            for a in 0..*n {
                for b in a..*n {
                    if simple_only && (a == b || pairs.contains(&(a, b))) {
                        continue;
                    }
                    extensions.push((*n, (a, b)));
                }
                extensions.push((n + 1, (a, *n)));
            }
            for (m, pair) in extensions {
                let mut p = pairs.clone();
                p.push(pair);
                let form = canonical_form(&graph_from_pairs(m, &p));
                next.entry(form).or_insert((m, p));
            }
        }
        level = Vec::with_capacity(next.len());
        for (form, entry) in next {
            out.push(form.to_graph());
            level.push(entry);
        }
    }
    Ok(out)
}

fn connected_and_spanning(n: usize, pairs: &[(usize, usize)]) -> bool {
    let mut ds = DisjointSets::new(n);
    let mut touched = vec![false; n];
    for &(a, b) in pairs {
        ds.union(a, b);
        touched[a] = true;
        touched[b] = true;
    }
    touched.iter().all(|&t| t) && ds.labels().1 == 1
}

/// Independent count: every multiset of endpoint pairs on `n` vertices,
/// deduplicated by the brute-force form. Returns the forms, sorted.
pub fn enumerate_graphs_exhaustive(max_edges: usize, simple_only: bool) -> Result<Vec<BruteForm>> {
    check_edge_limit(max_edges, EXHAUSTIVE_EDGE_LIMIT)?;
    let mut seen = BTreeSet::new();
    for e in 1..=max_edges {
        for n in 1..=e + 1 {
            let all: Vec<(usize, usize)> = (0..n)
                .flat_map(|a| (a..n).map(move |b| (a, b)))
                .filter(|&(a, b)| !simple_only || a != b)
                .collect();
            // nondecreasing index sequences; strictly increasing when simple
            let mut idx = vec![0usize; e];
            loop {
                let valid = !simple_only || idx.windows(2).all(|w| w[0] < w[1]);
                if valid && !all.is_empty() {
                    let pairs: Vec<(usize, usize)> = idx.iter().map(|&i| all[i]).collect();
                    if connected_and_spanning(n, &pairs) {
                        seen.insert(brute_force_form_of_pairs(n, &pairs));
                    }
                }
                let Some(pos) = (0..e).rev().find(|&p| idx[p] + 1 < all.len()) else {
                    break;
                };
                idx[pos] += 1;
                for q in pos + 1..e {
                    idx[q] = idx[pos];
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// A graph with a display name.
#[derive(Clone, Debug)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Arc<Graph>,
}

/// The enumerated corpus, named `e<edges>#<index>`.
pub fn corpus(max_edges: usize, simple_only: bool) -> Result<Vec<NamedGraph>> {
    let graphs = enumerate_graphs(max_edges, simple_only)?;
    let mut counters: BTreeMap<usize, usize> = BTreeMap::new();
    Ok(graphs
        .into_iter()
        .map(|g| {
            let c = counters.entry(g.edge_count()).or_default();
            let name = format!("e{}#{}", g.edge_count(), c);
            *c += 1;
            NamedGraph { name, graph: Arc::new(g) }
        })
        .collect())
}

/// `K_3 .. K_max_n`.
pub fn complete_family(max_n: usize) -> Result<Vec<NamedGraph>> {
    (3..=max_n)
        .map(|n| {
            Ok(NamedGraph {
                name: format!("K{n}"),
                graph: Arc::new(standard_graph(StandardGraph::Complete(n))?),
            })
        })
        .collect()
}

/// A module over the minor category, evaluated over `Q`. For `φ: G → G'`
/// the induced matrix maps `M(G')` to `M(G)`, so it has `dim M(G)` rows.
pub trait ModuleEvaluator: Send + Sync {
    fn name(&self) -> String;
    fn dimension(&self, g: &Arc<Graph>) -> Result<usize>;
    fn induced(&self, phi: &MinorMorphism) -> Result<Matrix<Rationals>>;
}

/// The constant module `Q`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Constant;

impl ModuleEvaluator for Constant {
    fn name(&self) -> String {
        "constant".to_string()
    }

    fn dimension(&self, _g: &Arc<Graph>) -> Result<usize> {
        Ok(1)
    }

    fn induced(&self, _phi: &MinorMorphism) -> Result<Matrix<Rationals>> {
        Ok(Matrix::identity(Rationals, 1))
    }
}

/// The free module on the edge set; maps are the edge injections.
#[derive(Clone, Copy, Debug, Default)]
pub struct EdgeModule;

impl ModuleEvaluator for EdgeModule {
    fn name(&self) -> String {
        "edge".to_string()
    }

    fn dimension(&self, g: &Arc<Graph>) -> Result<usize> {
        Ok(g.edge_count())
    }

    fn induced(&self, phi: &MinorMorphism) -> Result<Matrix<Rationals>> {
        let inj = phi.edge_injection();
        let (rows, cols) = (phi.source().edge_count(), phi.target().edge_count());
        Ok(Matrix::from_int_rows(Rationals, rows, cols, (0..cols).map(|c| (inj.apply(c), c, BigInt::one()))))
    }
}

/// `P_H`: basis the minor morphisms `G → H`, acted on by precomposition.
#[derive(Clone, Debug)]
pub struct PrincipalProjective {
    pub target: Arc<Graph>,
}

impl ModuleEvaluator for PrincipalProjective {
    fn name(&self) -> String {
        format!("principal({}v,{}e)", self.target.vertex_count(), self.target.edge_count())
    }

    fn dimension(&self, g: &Arc<Graph>) -> Result<usize> {
        Ok(enumerate(g, &self.target)?.len())
    }

    fn induced(&self, phi: &MinorMorphism) -> Result<Matrix<Rationals>> {
        let rows = enumerate(phi.source(), &self.target)?;
        let cols = enumerate(phi.target(), &self.target)?;
        let mut entries = Vec::with_capacity(cols.len());
        for (c, psi) in cols.iter().enumerate() {
            let composite = phi.then(psi)?;
            let r = rows
                .iter()
                .position(|m| *m == composite)
                .ok_or_else(|| Error::NotFunctorial("composite missing from enumeration".to_string()))?;
            entries.push((r, c, BigInt::one()));
        }
        Ok(Matrix::from_int_rows(Rationals, rows.len(), cols.len(), entries))
    }
}

/// `H_i` of a graph complex with rational coefficients.
#[derive(Clone, Copy, Debug)]
pub struct HomologyModule {
    pub kind: ComplexKind,
    pub degree: i64,
    pub reduced: bool,
}

impl ModuleEvaluator for HomologyModule {
    fn name(&self) -> String {
        let h = if self.reduced { "reduced-h" } else { "h" };
        format!("{}-{}{}", self.kind.name(), h, self.degree)
    }

    fn dimension(&self, g: &Arc<Graph>) -> Result<usize> {
        Ok(FieldHomologyBasis::new(&Rationals, &self.kind.build(g), self.degree, self.reduced)?.dim())
    }

    fn induced(&self, phi: &MinorMorphism) -> Result<Matrix<Rationals>> {
        induced_map_over_field(&Rationals, &induced_simplicial_map(phi, self.kind)?, self.degree, self.reduced)
    }
}

/// Evaluator lookup by name, as used on the command line.
pub fn module_by_name(name: &str) -> Option<Box<dyn ModuleEvaluator>> {
    let h = |kind, degree, reduced| -> Box<dyn ModuleEvaluator> { Box::new(HomologyModule { kind, degree, reduced }) };
    Some(match name {
        "constant" => Box::new(Constant),
        "edge" => Box::new(EdgeModule),
        "point-projective" => Box::new(PrincipalProjective {
            target: Arc::new(Graph::point()),
        }),
        "matching-h0" => h(ComplexKind::Matching, 0, false),
        "matching-h1" => h(ComplexKind::Matching, 1, false),
        "matching-h2" => h(ComplexKind::Matching, 2, false),
        _ => return None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationRecord {
    pub name: String,
    pub edges: usize,
    pub dimension: usize,
    pub span_rank: usize,
    pub morphisms_used: usize,
}

impl GenerationRecord {
    pub fn deficit(&self) -> usize {
        self.dimension - self.span_rank
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationReport {
    pub module: String,
    pub generator_edges: usize,
    pub max_edges: usize,
    pub records: Vec<GenerationRecord>,
}

impl GenerationReport {
    pub fn deficits(&self) -> Vec<&GenerationRecord> {
        self.records.iter().filter(|r| r.deficit() > 0).collect()
    }
}

/// Rank of the span of the images of `M(G') → M(G)` over all morphisms to
/// the given small minors.
pub fn generation_record(m: &dyn ModuleEvaluator, g: &NamedGraph, minors: &[Arc<Graph>]) -> Result<GenerationRecord> {
    let dimension = m.dimension(&g.graph)?;
    let mut span = IndependentSet::new(Rationals);
    let mut used = 0;
    for h in minors.iter().filter(|h| h.edge_count() < g.graph.edge_count()) {
        for phi in enumerate(&g.graph, h)? {
            used += 1;
            let mat = m.induced(&phi)?;
            for c in 0..mat.cols() {
                span.insert(&mat.column(c));
            }
            if span.len() == dimension {
                break;
            }
        }
    }
    Ok(GenerationRecord {
        name: g.name.clone(),
        edges: g.graph.edge_count(),
        dimension,
        span_rank: span.len(),
        morphisms_used: used,
    })
}

/// The point plus every corpus graph with at most `n` edges.
pub fn small_minors(n: usize) -> Result<Vec<Arc<Graph>>> {
    let mut out = vec![Arc::new(Graph::point())];
    if n > 0 {
        out.extend(enumerate_graphs(n.min(ENUMERATE_EDGE_LIMIT), false)?.into_iter().map(Arc::new));
    }
    Ok(out)
}

/// Graphs with `n < e(G) <= max_edges` whose `M(G)` is not spanned by the
/// images from minors with at most `n` edges.
pub fn generation_scan(m: &dyn ModuleEvaluator, n: usize, max_edges: usize) -> Result<GenerationReport> {
    let minors = small_minors(n)?;
    let records = corpus(max_edges, false)?
        .iter()
        .filter(|g| g.graph.edge_count() > n)
        .map(|g| generation_record(m, g, &minors))
        .collect::<Result<Vec<_>>>()?;
    Ok(GenerationReport {
        module: m.name(),
        generator_edges: n,
        max_edges,
        records,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundRecord {
    pub name: String,
    pub morphisms: usize,
    pub bound: u128,
}

impl BoundRecord {
    pub fn holds(&self) -> bool {
        self.morphisms as u128 <= self.bound
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub target_edges: usize,
    pub target_automorphisms: u128,
    pub records: Vec<BoundRecord>,
}

impl BoundReport {
    pub fn violations(&self) -> Vec<&BoundRecord> {
        self.records.iter().filter(|r| !r.holds()).collect()
    }
}

/// `|Aut(G')| · C(e, e') · C(e - e', g - g')`.
pub fn hom_bound(g: &Graph, target: &Graph) -> Result<u128> {
    let e = g.edge_count() as i64;
    let e2 = target.edge_count() as i64;
    Ok(target.automorphism_count()? * binomial(e, e2) * binomial(e - e2, g.genus() - target.genus()))
}

pub fn bound_record(g: &NamedGraph, target: &Arc<Graph>) -> Result<BoundRecord> {
    Ok(BoundRecord {
        name: g.name.clone(),
        morphisms: enumerate(&g.graph, target)?.len(),
        bound: hom_bound(&g.graph, target)?,
    })
}

/// Counts `Hom(G, G')` for every corpus graph `G` with at most `max_edges`
/// edges and compares with [`hom_bound`].
pub fn dimension_bound_check(target: &Arc<Graph>, max_edges: usize) -> Result<BoundReport> {
    let records = corpus(max_edges, false)?
        .iter()
        .map(|g| bound_record(g, target))
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundReport {
        target_edges: target.edge_count(),
        target_automorphisms: target.automorphism_count()?,
        records,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionRecord {
    pub name: String,
    pub edges: usize,
    pub group: HomologyGroup,
    /// Primes for which the universal coefficient check failed.
    pub uct_failures: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionReport {
    pub complex: String,
    pub degree: i64,
    pub records: Vec<TorsionRecord>,
}

impl TorsionReport {
    /// Least common multiple of all torsion exponents seen; 1 when none.
    pub fn observed_exponent(&self) -> BigUint {
        self.records.iter().fold(BigUint::one(), |acc, r| acc.lcm(&r.group.exponent()))
    }

    pub fn uct_failures(&self) -> usize {
        self.records.iter().filter(|r| !r.uct_failures.is_empty()).count()
    }
}

pub const UCT_PRIMES: [u64; 2] = [2, 3];

/// Reduced integral homology in degree `i`, with the universal coefficient
/// check for `primes` when `i >= 0`.
pub fn torsion_record(kind: ComplexKind, i: i64, g: &NamedGraph, primes: &[u64]) -> Result<TorsionRecord> {
    let c = kind.build(&g.graph);
    let group = homology(&c, i, Coefficients::Integers, true)?;
    let mut uct_failures = Vec::new();
    if i >= 0 {
        for &p in primes {
            if !uct_consistency(&c, i, p)? {
                uct_failures.push(p);
            }
        }
    }
    Ok(TorsionRecord {
        name: g.name.clone(),
        edges: g.graph.edge_count(),
        group,
        uct_failures,
    })
}

pub fn torsion_scan(kind: ComplexKind, i: i64, family: &[NamedGraph]) -> Result<TorsionReport> {
    let records = family
        .iter()
        .map(|g| torsion_record(kind, i, g, &UCT_PRIMES))
        .collect::<Result<Vec<_>>>()?;
    Ok(TorsionReport {
        complex: kind.name(),
        degree: i,
        records,
    })
}

/// Attaches `n` leaves at each listed vertex.
pub fn sprout(g: &Graph, assignments: &[(&str, usize)]) -> Result<Graph> {
    let mut vs: Vec<String> = g.vertices().to_vec();
    let mut es: Vec<(String, String, String)> = g
        .edges()
        .iter()
        .map(|e| (e.id.clone(), vs[e.ends[0]].clone(), vs[e.ends[1]].clone()))
        .collect();
    for &(v, n) in assignments {
        let at = vs[g.vertex_index(v)?].clone();
        for k in 0..n {
            let leaf = format!("{at}.leaf{k}");
            es.push((format!("{at}.stem{k}"), at.clone(), leaf.clone()));
            vs.push(leaf);
        }
    }
    Graph::new(&vs, &es)
}

/// Subdivides each listed edge `m` times (it becomes a path of `m + 1`
/// edges; a loop becomes a cycle).
pub fn subdivide(g: &Graph, assignments: &[(&str, usize)]) -> Result<Graph> {
    let mut times = vec![0usize; g.edge_count()];
    for &(e, m) in assignments {
        times[g.edge_index(e)?] += m;
    }
    let mut vs: Vec<String> = g.vertices().to_vec();
    let mut es = Vec::new();
    for (i, e) in g.edges().iter().enumerate() {
        let (a, b) = (g.vertices()[e.ends[0]].clone(), g.vertices()[e.ends[1]].clone());
        if times[i] == 0 {
            es.push((e.id.clone(), a, b));
            continue;
        }
        let mut prev = a;
        for k in 0..times[i] {
            let mid = format!("{}.mid{k}", e.id);
            es.push((format!("{}.{k}", e.id), prev, mid.clone()));
            vs.push(mid.clone());
            prev = mid;
        }
        es.push((format!("{}.{}", e.id, times[i]), prev, b));
    }
    Graph::new(&vs, &es)
}

/// How a family grows from its base graph with parameter `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Growth {
    /// `n` leaves at each listed vertex.
    Sprout(Vec<String>),
    /// Each listed edge subdivided `n` times.
    Subdivide(Vec<String>),
}

impl Growth {
    pub fn member(&self, base: &Graph, n: usize) -> Result<Graph> {
        match self {
            Growth::Sprout(vs) => sprout(base, &vs.iter().map(|v| (v.as_str(), n)).collect::<Vec<_>>()),
            Growth::Subdivide(es) => subdivide(base, &es.iter().map(|e| (e.as_str(), n)).collect::<Vec<_>>()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthFit {
    /// Coefficients of the fitted polynomial, constant term first.
    pub coefficients: Vec<BigRational>,
    pub window: (usize, usize),
    pub observed: Vec<(usize, usize)>,
    /// `(n, predicted, actual)` beyond the window.
    pub predictions: Vec<(usize, BigRational, usize)>,
}

impl GrowthFit {
    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn evaluate(&self, n: usize) -> BigRational {
        poly_eval(&self.coefficients, n)
    }
}

fn poly_eval(coeffs: &[BigRational], n: usize) -> BigRational {
    let x = BigRational::from_integer(BigInt::from(n));
    coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * &x + c)
}

/// Interpolating polynomial through `points` (distinct `x`), constant term first.
fn interpolate(points: &[(usize, usize)]) -> Vec<BigRational> {
    let k = points.len();
    let rat = |x: usize| BigRational::from_integer(BigInt::from(x));
    let mut a = Matrix::zeros(Rationals, k, k);
    let mut b = Vec::with_capacity(k);
    for (r, &(x, y)) in points.iter().enumerate() {
        let mut pow = BigRational::one();
        for c in 0..k {
            a.set(r, c, pow.clone());
            pow *= rat(x);
        }
        b.push(rat(y));
    }
    let mut coeffs = a.solve(&b).expect("Vandermonde matrix on distinct points");
    while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    coeffs
}

/// Finds the lowest-degree polynomial that interpolates `dim M` on the
/// window with at least one point to spare, then checks it against the
/// next `extra` parameter values. Anything short of that is [`Error::NoFit`].
pub fn growth_fit(
    m: &dyn ModuleEvaluator,
    base: &Graph,
    growth: &Growth,
    window: (usize, usize),
    extra: usize,
) -> Result<GrowthFit> {
    let (lo, hi) = window;
    if hi < lo + 1 {
        return Err(Error::NoFit(format!("window {lo}..{hi} has fewer than two points")));
    }
    let value = |n: usize| -> Result<usize> { m.dimension(&Arc::new(growth.member(base, n)?)) };
    let observed = (lo..=hi).map(|n| Ok((n, value(n)?))).collect::<Result<Vec<_>>>()?;
    let rat = |x: usize| BigRational::from_integer(BigInt::from(x));
    let coefficients = (1..observed.len())
        .map(|k| interpolate(&observed[..k]))
        .find(|c| observed.iter().all(|&(x, y)| poly_eval(c, x) == rat(y)))
        .ok_or_else(|| Error::NoFit(format!("no polynomial of degree below {} fits the window", observed.len() - 1)))?;
    let mut predictions = Vec::with_capacity(extra);
    for n in hi + 1..=hi + extra {
        let predicted = poly_eval(&coefficients, n);
        let actual = value(n)?;
        if predicted != rat(actual) {
            return Err(Error::NoFit(format!("predicted {predicted} at n = {n}, observed {actual}")));
        }
        predictions.push((n, predicted, actual));
    }
    Ok(GrowthFit {
        coefficients,
        window,
        observed,
        predictions,
    })
}

/// Tree of a balanced word: `(` grows a new edge up from the current vertex,
/// `)` walks back down. Vertex `v0` is the root.
pub fn dyck_tree(w: &str) -> Result<Graph> {
    let r = w.chars().filter(|&c| c == '(').count();
    let mut parent_stack = vec![0usize];
    let mut pairs = Vec::with_capacity(r);
    let mut next = 1;
    for ch in w.chars() {
        match ch {
            '(' => {
                pairs.push((*parent_stack.last().unwrap(), next));
                parent_stack.push(next);
                next += 1;
            }
            ')' => {
                if parent_stack.len() == 1 {
                    return Err(Error::Unbalanced);
                }
                parent_stack.pop();
            }
            _ => return Err(Error::Unbalanced),
        }
    }
    if parent_stack.len() != 1 {
        return Err(Error::Unbalanced);
    }
    let vs: Vec<String> = (0..=r).map(|i| label("v", i, r + 1)).collect();
    let es: Vec<(String, String, String)> = pairs
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| (label("e", i + 1, r + 1), vs[a].clone(), vs[b].clone()))
        .collect();
    Graph::new(&vs, &es)
}

/// Balanced words of semilength `n`, in lexicographic order (`(` < `)`).
pub fn dyck_words(n: usize) -> Vec<String> {
    fn go(open: usize, close: usize, n: usize, cur: &mut String, out: &mut Vec<String>) {
        if cur.len() == 2 * n {
            out.push(cur.clone());
            return;
        }
        if open < n {
            cur.push('(');
            go(open + 1, close, n, cur, out);
            cur.pop();
        }
        if close < open {
            cur.push(')');
            go(open, close + 1, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, 0, n, &mut String::new(), &mut out);
    out
}

/// Coefficients `0..=n` of `Σ_w dim M(T(w)) t^{r(w)}`.
pub fn hd_series(m: &dyn ModuleEvaluator, n: usize) -> Result<Vec<usize>> {
    if n > DYCK_LIMIT {
        return Err(Error::TooLarge {
            what: "semilength",
            limit: DYCK_LIMIT,
            got: n,
        });
    }
    (0..=n)
        .map(|k| {
            dyck_words(k)
                .iter()
                .map(|w| m.dimension(&Arc::new(dyck_tree(w)?)))
                .sum::<Result<usize>>()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::brute_force_form;

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_graphs(1, false).unwrap().len(), 2);
        assert_eq!(enumerate_graphs(2, true).unwrap().len(), 2);
        // trees on 4 vertices (2) and the triangle
        assert_eq!(enumerate_graphs(3, true).unwrap().iter().filter(|g| g.edge_count() == 3).count(), 3);
        assert!(enumerate_graphs(9, false).is_err());
    }

    #[test]
    fn two_canonical_methods_agree() {
        for simple in [true, false] {
            let a = enumerate_graphs(4, simple).unwrap();
            let b = enumerate_graphs_exhaustive(4, simple).unwrap();
            assert_eq!(a.len(), b.len());
            let forms: BTreeSet<BruteForm> = a.iter().map(brute_force_form).collect();
            assert_eq!(forms, b.into_iter().collect());
        }
    }

    #[test]
    fn catalan() {
        assert_eq!(hd_series(&Constant, 5).unwrap(), vec![1, 1, 2, 5, 14, 42]);
    }

    #[test]
    fn dyck_examples() {
        let y = dyck_tree("(()())").unwrap();
        assert_eq!(y.edge_count(), 3);
        let claw = standard_graph(StandardGraph::Star(3)).unwrap();
        assert!(crate::canon::isomorphic(&y, &claw));
        assert!(crate::canon::isomorphic(&dyck_tree("()()()").unwrap(), &claw));
        assert_eq!(dyck_tree("())(").unwrap_err(), Error::Unbalanced);
        assert_eq!(dyck_tree("((").unwrap_err(), Error::Unbalanced);
    }

    #[test]
    fn edge_module_generated_by_one_edge() {
        let r = generation_scan(&EdgeModule, 1, 3).unwrap();
        assert!(r.deficits().is_empty());
        let r0 = generation_scan(&EdgeModule, 0, 2).unwrap();
        assert_eq!(r0.deficits().len(), r0.records.len());
    }

    #[test]
    fn bound_examples() {
        let point = Arc::new(Graph::point());
        let k4 = NamedGraph {
            name: "K4".into(),
            graph: Arc::new(standard_graph(StandardGraph::Complete(4)).unwrap()),
        };
        let rec = bound_record(&k4, &point).unwrap();
        assert_eq!((rec.morphisms, rec.bound), (16, 20));
        for g in corpus(3, false).unwrap() {
            let r = bound_record(&g, &g.graph).unwrap();
            assert_eq!(r.morphisms as u128, g.graph.automorphism_count().unwrap());
            assert_eq!(r.bound, r.morphisms as u128);
        }
    }

    #[test]
    fn growth_examples() {
        let base = Graph::new(&["u", "w"], &[("c", "u", "w")]).unwrap();
        let h1 = HomologyModule {
            kind: ComplexKind::Matching,
            degree: 1,
            reduced: false,
        };
        let grow = Growth::Sprout(vec!["u".into(), "w".into()]);
        let fit = growth_fit(&h1, &base, &grow, (2, 5), 2).unwrap();
        let q = |x: i64| BigRational::from_integer(BigInt::from(x));
        assert_eq!(fit.coefficients, vec![q(1), q(-2), q(1)]);
        let k3 = standard_graph(StandardGraph::Complete(3)).unwrap();
        let e = k3.edges()[0].id.clone();
        let trees = PrincipalProjective {
            target: Arc::new(Graph::point()),
        };
        let fit = growth_fit(&trees, &k3, &Growth::Subdivide(vec![e]), (0, 3), 2).unwrap();
        assert_eq!(fit.coefficients, vec![q(3), q(1)]);
        let c = growth_fit(&Constant, &k3, &Growth::Sprout(vec![k3.vertices()[0].clone()]), (0, 2), 2).unwrap();
        assert_eq!(c.coefficients, vec![q(1)]);
        assert!(matches!(
            growth_fit(&Constant, &k3, &Growth::Sprout(vec![k3.vertices()[0].clone()]), (1, 1), 2),
            Err(Error::NoFit(_))
        ));
    }

    #[test]
    fn torsion_scan_small_simple_graphs() {
        let fam = corpus(5, true).unwrap();
        let report = torsion_scan(ComplexKind::Matching, 1, &fam).unwrap();
        assert_eq!(report.observed_exponent(), BigUint::one());
        assert_eq!(report.uct_failures(), 0);
    }
}
