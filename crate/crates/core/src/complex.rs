//! Simplicial complexes on the edge set of a graph.
//!
//! A complex is stored by its facets as sorted index sets into a sorted ground
//! list. The void complex (no faces at all) has no facets; the complex `{∅}`
//! has the single empty facet. Faces are oriented by increasing index.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::SparseIntMatrix;
use crate::minors::MinorMorphism;
use crate::util::{self, sort_sign};

/// Cap on ground size for properties checked by exhaustive subset search.
pub const MONOTONE_EDGE_LIMIT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    ground: Vec<String>,
    facets: Vec<Vec<usize>>,
}

fn maximal_sets(mut sets: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for s in sets.iter_mut() {
        s.sort_unstable();
        s.dedup();
    }
    // larger sets first so each candidate only needs checking against kept ones
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<Vec<usize>> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| is_subset(&s, k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// Both slices sorted.
fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let mut j = 0;
    for x in a {
        while j < b.len() && b[j] < *x {
            j += 1;
        }
        if j == b.len() || b[j] != *x {
            return false;
        }
        j += 1;
    }
    true
}

impl SimplicialComplex {
    /// The void complex on a ground set.
    pub fn void(ground: Vec<String>) -> Self {
        SimplicialComplex {
            ground: sorted_ground(ground),
            facets: Vec::new(),
        }
    }

    /// Facets as index sets into `ground` (which must be sorted and unique).
    pub fn from_index_facets(ground: Vec<String>, facets: Vec<Vec<usize>>) -> Self {
        debug_assert!(ground.windows(2).all(|w| w[0] < w[1]));
        SimplicialComplex {
            ground,
            facets: maximal_sets(facets),
        }
    }

    /// Facets given by labels; the ground is sorted.
    pub fn from_labels<S: AsRef<str>>(ground: &[S], facets: &[Vec<S>]) -> Result<Self> {
        let ground = sorted_ground(ground.iter().map(|s| String::from(s.as_ref())).collect());
        let mut idx = Vec::new();
        for f in facets {
            let mut face = Vec::new();
            for x in f {
                let i = ground
                    .binary_search_by(|g| g.as_str().cmp(x.as_ref()))
                    .map_err(|_| Error::NotSubset(String::from(x.as_ref())))?;
                face.push(i);
            }
            idx.push(face);
        }
        Ok(Self::from_index_facets(ground, idx))
    }

    /// Largest complex on `ground` whose faces satisfy `can_extend`, which is
    /// asked whether a face may grow by one more index.
    pub fn from_extension_rule(ground: Vec<String>, can_extend: impl Fn(&[usize], usize) -> bool) -> Self {
        let n = ground.len();
        let mut facets = Vec::new();
        let mut face = Vec::new();
        fn go(
            n: usize,
            start: usize,
            face: &mut Vec<usize>,
            can_extend: &dyn Fn(&[usize], usize) -> bool,
            facets: &mut Vec<Vec<usize>>,
        ) {
            let mut maximal = true;
            for j in 0..n {
                if face.contains(&j) || !can_extend(face, j) {
                    continue;
                }
                maximal = false;
                if j >= start {
                    face.push(j);
                    go(n, j + 1, face, can_extend, facets);
                    face.pop();
                }
            }
            if maximal {
                facets.push(face.clone());
            }
        }
        go(n, 0, &mut face, &can_extend, &mut facets);
        SimplicialComplex {
            ground,
            facets: maximal_sets(facets),
        }
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn facet_labels(&self) -> Vec<Vec<String>> {
        self.facets
            .iter()
            .map(|f| f.iter().map(|&i| self.ground[i].clone()).collect())
            .collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `None` for the void complex, `Some(-1)` for `{∅}`.
    pub fn dimension(&self) -> Option<i64> {
        self.facets.iter().map(|f| f.len() as i64 - 1).max()
    }

    pub fn contains(&self, face: &[usize]) -> bool {
        let mut f = face.to_vec();
        f.sort_unstable();
        self.facets.iter().any(|x| is_subset(&f, x))
    }

    /// Faces of dimension `k` (`k = -1` gives `[∅]` unless void), sorted.
    pub fn faces(&self, k: i64) -> Vec<Vec<usize>> {
        if k < -1 || self.is_void() {
            return Vec::new();
        }
        let size = (k + 1) as usize;
        let mut out = BTreeSet::new();
        for f in self.facets.iter().filter(|f| f.len() >= size) {
            for pick in util::combinations(f.len(), size) {
                out.insert(pick.iter().map(|&i| f[i]).collect::<Vec<usize>>());
            }
        }
        out.into_iter().collect()
    }

    /// Face counts `f_{-1}, f_0, ..., f_dim`; empty for the void complex.
    pub fn f_vector(&self) -> Vec<usize> {
        match self.dimension() {
            None => Vec::new(),
            Some(d) => (-1..=d).map(|k| self.faces(k).len()).collect(),
        }
    }

    /// Reduced Euler characteristic `-f_{-1} + f_0 - f_1 + ...`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 0 { -(f as i64) } else { f as i64 })
            .sum()
    }

    /// Vertices that occur in some face.
    pub fn vertex_set(&self) -> Vec<usize> {
        self.faces(0).into_iter().map(|f| f[0]).collect()
    }

    /// `∂_k: C_k → C_{k-1}` with rows indexed by `faces(k-1)` and columns by
    /// `faces(k)`. In the reduced complex `∂_0` maps every vertex to `∅`.
    pub fn boundary(&self, k: i64, reduced: bool) -> SparseIntMatrix {
        let cols = self.faces(k);
        let rows = if k == 0 && !reduced { Vec::new() } else { self.faces(k - 1) };
        boundary_between(&rows, &cols)
    }

    /// The induced subcomplex on `sigma` (indices into the ground); the new
    /// ground is `sigma` in ground order.
    pub fn restrict(&self, sigma: &[usize]) -> Result<SimplicialComplex> {
        let mut s = sigma.to_vec();
        s.sort_unstable();
        s.dedup();
        if let Some(&bad) = s.iter().find(|&&i| i >= self.ground.len()) {
            return Err(Error::NotSubset(format!("index {bad}")));
        }
        let ground: Vec<String> = s.iter().map(|&i| self.ground[i].clone()).collect();
        let position = |x: usize| s.binary_search(&x).ok();
        let facets = self
            .facets
            .iter()
            .map(|f| f.iter().filter_map(|&x| position(x)).collect())
            .collect();
        Ok(SimplicialComplex::from_index_facets(ground, facets))
    }

    pub fn restrict_labels<S: AsRef<str>>(&self, sigma: &[S]) -> Result<SimplicialComplex> {
        let mut idx = Vec::new();
        for x in sigma {
            let i = self
                .ground
                .binary_search_by(|g| g.as_str().cmp(x.as_ref()))
                .map_err(|_| Error::NotSubset(String::from(x.as_ref())))?;
            idx.push(i);
        }
        self.restrict(&idx)
    }
}

fn sorted_ground(mut ground: Vec<String>) -> Vec<String> {
    ground.sort();
    ground.dedup();
    ground
}

/// Boundary matrix between explicit sorted face lists.
pub fn boundary_between(rows: &[Vec<usize>], cols: &[Vec<usize>]) -> SparseIntMatrix {
    let mut m = SparseIntMatrix::zeros(rows.len(), cols.len());
    let mut buf = Vec::new();
    for (c, face) in cols.iter().enumerate() {
        for p in 0..face.len() {
            buf.clear();
            buf.extend(face.iter().enumerate().filter(|&(q, _)| q != p).map(|(_, &x)| x));
            if let Ok(r) = rows.binary_search(&buf) {
                m.set(r, c, if p % 2 == 0 { 1 } else { -1 });
            }
        }
    }
    m
}

/// Degree of vertex `v` in the subgraph on `edges`, loops counted twice.
fn subgraph_degree(g: &Graph, edges: &[usize], v: usize) -> usize {
    edges
        .iter()
        .map(|&e| {
            let [a, b] = g.edge(e).ends;
            (a == v) as usize + (b == v) as usize
        })
        .sum()
}

/// A predicate on edge subsets (given as sorted edge indices).
pub trait EdgeSetProperty {
    fn name(&self) -> String;
    fn holds(&self, g: &Graph, edges: &[usize]) -> bool;
}

/// Every vertex of the spanned subgraph has degree at most `d` (loops count 2).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DMatching(pub usize);

impl EdgeSetProperty for DMatching {
    fn name(&self) -> String {
        if self.0 == 1 {
            String::from("matching")
        } else {
            format!("{}-matching", self.0)
        }
    }
    fn holds(&self, g: &Graph, edges: &[usize]) -> bool {
        (0..g.vertex_count()).all(|v| subgraph_degree(g, edges, v) <= self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AtMostEdges(pub usize);

impl EdgeSetProperty for AtMostEdges {
    fn name(&self) -> String {
        format!("at most {} edges", self.0)
    }
    fn holds(&self, _: &Graph, edges: &[usize]) -> bool {
        edges.len() <= self.0
    }
}

/// Contains no cycle (loops and parallel pairs are cycles).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Forest;

impl EdgeSetProperty for Forest {
    fn name(&self) -> String {
        String::from("forest")
    }
    fn holds(&self, g: &Graph, edges: &[usize]) -> bool {
        let mut ds = util::DisjointSets::new(g.vertex_count());
        edges.iter().all(|&e| {
            let [a, b] = g.edge(e).ends;
            ds.union(a, b)
        })
    }
}

/// Every vertex of the graph is an endpoint of some chosen edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpansAllVertices;

impl EdgeSetProperty for SpansAllVertices {
    fn name(&self) -> String {
        String::from("spans all vertices")
    }
    fn holds(&self, g: &Graph, edges: &[usize]) -> bool {
        (0..g.vertex_count()).all(|v| edges.iter().any(|&e| g.edge(e).touches(v)))
    }
}

/// Every two chosen edges share a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairwiseIntersecting;

impl EdgeSetProperty for PairwiseIntersecting {
    fn name(&self) -> String {
        String::from("pairwise intersecting")
    }
    fn holds(&self, g: &Graph, edges: &[usize]) -> bool {
        edges
            .iter()
            .enumerate()
            .all(|(i, &e)| edges[i + 1..].iter().all(|&f| g.shares_vertex(e, f)))
    }
}

pub fn matching_complex(g: &Graph) -> SimplicialComplex {
    d_matching_complex(g, 1)
}

pub fn d_matching_complex(g: &Graph, d: usize) -> SimplicialComplex {
    assert!(d >= 1, "d-matchings need d >= 1");
    SimplicialComplex::from_extension_rule(g.edge_ids(), |face, j| {
        let [a, b] = g.edge(j).ends;
        let extra = |v: usize| (a == v) as usize + (b == v) as usize;
        subgraph_degree(g, face, a) + extra(a) <= d && subgraph_degree(g, face, b) + extra(b) <= d
    })
}

/// Clique complex of `L(G)`: edge sets whose members pairwise share a vertex.
pub fn flag_complex_of_line_graph(g: &Graph) -> SimplicialComplex {
    SimplicialComplex::from_extension_rule(g.edge_ids(), |face, j| face.iter().all(|&e| g.shares_vertex(e, j)))
}

fn check_monotone_size(g: &Graph) -> Result<()> {
    if g.edge_count() > MONOTONE_EDGE_LIMIT {
        return Err(Error::TooLarge {
            what: "edge count",
            limit: MONOTONE_EDGE_LIMIT,
            got: g.edge_count(),
        });
    }
    Ok(())
}

fn subset_of_mask(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Complex of all edge subsets satisfying a property, checking downward
/// closure for every satisfying subset.
pub fn monotone_property_complex(g: &Graph, property: &dyn EdgeSetProperty) -> Result<SimplicialComplex> {
    check_monotone_size(g)?;
    let n = g.edge_count();
    let total = 1u32 << n;
    let mut ok = vec![false; total as usize];
    for mask in 0..total {
        ok[mask as usize] = property.holds(g, &subset_of_mask(mask, n));
    }
    let ids = g.edge_ids();
    let mut facets = Vec::new();
    for mask in 0..total {
        if !ok[mask as usize] {
            continue;
        }
        for i in 0..n {
            let bit = 1u32 << i;
            if mask & bit != 0 && !ok[(mask ^ bit) as usize] {
                let face = subset_of_mask(mask, n).iter().map(|&e| ids[e].clone()).collect();
                return Err(Error::NotMonotone {
                    face,
                    missing: vec![ids[i].clone()],
                });
            }
        }
        if (0..n).all(|i| mask >> i & 1 == 1 || !ok[(mask | 1 << i) as usize]) {
            facets.push(subset_of_mask(mask, n));
        }
    }
    Ok(SimplicialComplex::from_index_facets(ids, facets))
}

/// A property face on a target graph whose pullback fails on the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GopCounterexample {
    pub morphism: usize,
    pub target_face: Vec<String>,
    pub pulled_back: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GopReport {
    pub morphisms_checked: usize,
    pub faces_checked: usize,
    pub counterexamples: Vec<GopCounterexample>,
}

/// For each morphism `φ: G → G'` and each subset `H'` of `E(G')` with the
/// property, checks that `φ*(H')` has the property in `G`.
pub fn check_gop_monotone(property: &dyn EdgeSetProperty, sample: &[MinorMorphism]) -> Result<GopReport> {
    let mut report = GopReport::default();
    for (idx, phi) in sample.iter().enumerate() {
        let (g, h) = (phi.source(), phi.target());
        check_monotone_size(h)?;
        let inj = phi.edge_injection();
        report.morphisms_checked += 1;
        let n = h.edge_count();
        for mask in 0..1u32 << n {
            let face = subset_of_mask(mask, n);
            if !property.holds(h, &face) {
                continue;
            }
            report.faces_checked += 1;
            let mut image: Vec<usize> = face.iter().map(|&e| inj.apply(e)).collect();
            image.sort_unstable();
            if !property.holds(g, &image) {
                report.counterexamples.push(GopCounterexample {
                    morphism: idx,
                    target_face: face.iter().map(|&e| h.edge(e).id.clone()).collect(),
                    pulled_back: image.iter().map(|&e| g.edge(e).id.clone()).collect(),
                });
            }
        }
    }
    Ok(report)
}

/// The functorial builders.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComplexKind {
    Matching,
    DMatching(usize),
    FlagOfLineGraph,
}

impl ComplexKind {
    pub fn build(&self, g: &Graph) -> SimplicialComplex {
        match *self {
            ComplexKind::Matching => matching_complex(g),
            ComplexKind::DMatching(d) => d_matching_complex(g, d),
            ComplexKind::FlagOfLineGraph => flag_complex_of_line_graph(g),
        }
    }

    pub fn name(&self) -> String {
        match *self {
            ComplexKind::Matching => String::from("matching"),
            ComplexKind::DMatching(d) => format!("dmatching({d})"),
            ComplexKind::FlagOfLineGraph => String::from("flag"),
        }
    }
}

/// A simplicial map given by a vertex map on ground indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    pub domain: SimplicialComplex,
    pub codomain: SimplicialComplex,
    pub vertex_map: Vec<usize>,
}

impl SimplicialMap {
    /// Checks that every facet of the domain lands on a face of the codomain.
    pub fn new(domain: SimplicialComplex, codomain: SimplicialComplex, vertex_map: Vec<usize>) -> Result<Self> {
        if vertex_map.len() != domain.ground().len() || vertex_map.iter().any(|&x| x >= codomain.ground().len()) {
            return Err(Error::NotFunctorial(String::from("vertex map does not match the ground sets")));
        }
        if domain.is_void() != codomain.is_void() && !domain.is_void() {
            return Err(Error::NotFunctorial(String::from("nonempty complex mapped to the void complex")));
        }
        for f in domain.facets() {
            let image: Vec<usize> = f.iter().map(|&x| vertex_map[x]).collect();
            if !codomain.contains(&image) {
                let labels: Vec<&str> = f.iter().map(|&x| domain.ground()[x].as_str()).collect();
                return Err(Error::NotFunctorial(format!("face {labels:?} has no image face")));
            }
        }
        Ok(SimplicialMap {
            domain,
            codomain,
            vertex_map,
        })
    }

    pub fn identity(c: SimplicialComplex) -> Self {
        let vertex_map = (0..c.ground().len()).collect();
        SimplicialMap {
            domain: c.clone(),
            codomain: c,
            vertex_map,
        }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SimplicialMap) -> Result<SimplicialMap> {
        if self.codomain != other.domain {
            return Err(Error::Mismatch);
        }
        let vertex_map = self.vertex_map.iter().map(|&x| other.vertex_map[x]).collect();
        SimplicialMap::new(self.domain.clone(), other.codomain.clone(), vertex_map)
    }

    pub fn is_injective(&self) -> bool {
        let set: BTreeSet<usize> = self.vertex_map.iter().copied().collect();
        set.len() == self.vertex_map.len()
    }

    /// Chain map in degree `k`: rows `codomain.faces(k)`, columns
    /// `domain.faces(k)`. Degenerate images go to zero; otherwise the sign is
    /// that of the permutation sorting the image.
    pub fn chain_matrix(&self, k: i64) -> SparseIntMatrix {
        let rows = self.codomain.faces(k);
        let cols = self.domain.faces(k);
        let mut m = SparseIntMatrix::zeros(rows.len(), cols.len());
        for (c, face) in cols.iter().enumerate() {
            let image: Vec<usize> = face.iter().map(|&x| self.vertex_map[x]).collect();
            let sign = sort_sign(&image);
            if sign == 0 {
                continue;
            }
            let mut sorted = image;
            sorted.sort_unstable();
            if let Ok(r) = rows.binary_search(&sorted) {
                m.set(r, c, sign);
            }
        }
        m
    }
}

/// For `φ: G → G'`, the map `kind(G') → kind(G)` given by `φ*` on edges.
pub fn induced_simplicial_map(phi: &MinorMorphism, kind: ComplexKind) -> Result<SimplicialMap> {
    let dom = kind.build(phi.target());
    let cod = kind.build(phi.source());
    SimplicialMap::new(dom, cod, phi.edge_injection().map)
}

/// Same as [`induced_simplicial_map`] for a property complex; fails unless
/// the property is monotone on both graphs and pulls back along `φ*`.
pub fn induced_property_map(phi: &MinorMorphism, property: &dyn EdgeSetProperty) -> Result<SimplicialMap> {
    let dom = monotone_property_complex(phi.target(), property)?;
    let cod = monotone_property_complex(phi.source(), property)?;
    SimplicialMap::new(dom, cod, phi.edge_injection().map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{standard_graph, StandardGraph};
    use crate::minors::{contract_edge, enumerate, MinorMorphism};
    use alloc::sync::Arc;

    fn std_graph(kind: StandardGraph) -> Graph {
        standard_graph(kind).unwrap()
    }

    /// All edge subsets satisfying a predicate, by brute force.
    fn brute_faces(g: &Graph, pred: impl Fn(&[usize]) -> bool) -> BTreeSet<Vec<usize>> {
        let n = g.edge_count();
        (0..1u32 << n).map(|m| subset_of_mask(m, n)).filter(|s| pred(s)).collect()
    }

    fn all_faces(c: &SimplicialComplex) -> BTreeSet<Vec<usize>> {
        match c.dimension() {
            None => BTreeSet::new(),
            Some(d) => (-1..=d).flat_map(|k| c.faces(k)).collect(),
        }
    }

    fn pairwise_disjoint(g: &Graph, s: &[usize]) -> bool {
        s.iter().enumerate().all(|(i, &e)| {
            !g.edge(e).is_loop() && s[i + 1..].iter().all(|&f| !g.shares_vertex(e, f))
        })
    }

    #[test]
    fn matching_k4_and_k5() {
        let k4 = std_graph(StandardGraph::Complete(4));
        let m = matching_complex(&k4);
        assert_eq!(m.facets().len(), 3);
        assert!(m.facets().iter().all(|f| f.len() == 2));
        assert_eq!(all_faces(&m), brute_faces(&k4, |s| pairwise_disjoint(&k4, s)));

        let k5 = std_graph(StandardGraph::Complete(5));
        let m = matching_complex(&k5);
        assert_eq!(m.dimension(), Some(1));
        assert_eq!(m.f_vector(), vec![1, 10, 15]);
        assert!(m.faces(0).iter().all(|v| m.faces(1).iter().filter(|e| e.contains(&v[0])).count() == 3));
    }

    #[test]
    fn d_matchings() {
        let k3 = std_graph(StandardGraph::Complete(3));
        assert_eq!(d_matching_complex(&k3, 2).facets(), &[vec![0, 1, 2]]);
        let rose = std_graph(StandardGraph::Rose(2));
        // one loop already has degree 2
        assert!(matching_complex(&rose).facets() == [Vec::<usize>::new()]);
        assert_eq!(d_matching_complex(&rose, 2).facets(), &[vec![0], vec![1]]);
        assert_eq!(d_matching_complex(&rose, 4).facets(), &[vec![0, 1]]);
        for kind in [StandardGraph::LoopBouquet(2), StandardGraph::Complete(4), StandardGraph::Rose(3)] {
            let g = std_graph(kind);
            for d in 1..4 {
                let c = d_matching_complex(&g, d);
                let expected = brute_faces(&g, |s| DMatching(d).holds(&g, s));
                assert_eq!(all_faces(&c), expected);
                assert_eq!(c, monotone_property_complex(&g, &DMatching(d)).unwrap());
            }
        }
    }

    #[test]
    fn monotone_examples() {
        let k4 = std_graph(StandardGraph::Complete(4));
        assert_eq!(monotone_property_complex(&k4, &DMatching(1)).unwrap(), matching_complex(&k4));
        let two = monotone_property_complex(&k4, &AtMostEdges(2)).unwrap();
        assert_eq!(two.facets().len(), 15);
        let k3 = std_graph(StandardGraph::Complete(3));
        let forests = monotone_property_complex(&k3, &Forest).unwrap();
        assert_eq!(forests.facets(), &[vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert!(matches!(
            monotone_property_complex(&k3, &SpansAllVertices),
            Err(Error::NotMonotone { .. })
        ));
    }

    #[test]
    fn flag_complex_examples() {
        let p3 = std_graph(StandardGraph::Path(3));
        let f = flag_complex_of_line_graph(&p3);
        assert_eq!(f.facets(), &[vec![0, 1], vec![1, 2]]);
        let s = std_graph(StandardGraph::Star(4));
        assert_eq!(flag_complex_of_line_graph(&s).facets(), &[vec![0, 1, 2, 3]]);
        let k4 = std_graph(StandardGraph::Complete(4));
        let f = flag_complex_of_line_graph(&k4);
        assert_eq!(all_faces(&f), brute_faces(&k4, |s| PairwiseIntersecting.holds(&k4, s)));
        // 4 triangles and 4 stars
        assert_eq!(f.facets().len(), 8);
    }

    #[test]
    fn restriction() {
        let p3 = std_graph(StandardGraph::Path(3));
        let f = flag_complex_of_line_graph(&p3);
        let r = f.restrict(&[]).unwrap();
        assert_eq!(r.facets(), &[Vec::<usize>::new()]);
        let r = f.restrict(&[0, 2]).unwrap();
        assert_eq!(r.facets(), &[vec![0], vec![1]]);
        assert_eq!(r.ground(), &["e1", "e3"]);
        assert!(matches!(f.restrict(&[7]), Err(Error::NotSubset(_))));
        let full = flag_complex_of_line_graph(&std_graph(StandardGraph::Star(3)));
        assert_eq!(full.restrict(&[0, 2]).unwrap().facets(), &[vec![0, 1]]);
        assert!(SimplicialComplex::void(vec![]).restrict(&[]).unwrap().is_void());
    }

    #[test]
    fn boundary_squares_to_zero() {
        let k5 = std_graph(StandardGraph::Complete(5));
        for c in [
            matching_complex(&std_graph(StandardGraph::Complete(6))),
            flag_complex_of_line_graph(&k5),
            d_matching_complex(&k5, 2),
        ] {
            let d = c.dimension().unwrap();
            for k in 0..=d {
                for reduced in [false, true] {
                    let prod = c.boundary(k, reduced).mul(&c.boundary(k + 1, reduced));
                    assert!(prod.is_zero());
                }
            }
        }
    }

    #[test]
    fn gop_monotone_checks() {
        let graphs: Vec<Arc<Graph>> = [
            StandardGraph::Point,
            StandardGraph::Path(1),
            StandardGraph::Cycle(1),
            StandardGraph::Path(2),
            StandardGraph::Cycle(2),
            StandardGraph::Complete(3),
            StandardGraph::Star(3),
        ]
        .iter()
        .map(|&k| Arc::new(std_graph(k)))
        .collect();
        let mut sample = Vec::new();
        for g in &graphs {
            for h in &graphs {
                sample.extend(enumerate(g, h).unwrap());
            }
        }
        assert!(check_gop_monotone(&DMatching(1), &sample).unwrap().counterexamples.is_empty());
        assert!(check_gop_monotone(&DMatching(2), &sample).unwrap().counterexamples.is_empty());
        assert!(!check_gop_monotone(&SpansAllVertices, &sample).unwrap().counterexamples.is_empty());
    }

    #[test]
    fn induced_maps() {
        let k3 = Arc::new(std_graph(StandardGraph::Complete(3)));
        let id = induced_simplicial_map(&MinorMorphism::identity(k3.clone()), ComplexKind::Matching).unwrap();
        assert_eq!(id, SimplicialMap::identity(matching_complex(&k3)));

        let p2 = Arc::new(std_graph(StandardGraph::Path(2)));
        let (_, phi) = contract_edge(&p2, "e2").unwrap();
        let f = induced_simplicial_map(&phi, ComplexKind::Matching).unwrap();
        assert_eq!(f.vertex_map, vec![0]);
        assert_eq!(f.codomain.facets(), &[vec![0], vec![1]]);
        assert!(f.is_injective());

        let bad = SimplicialMap::new(
            SimplicialComplex::from_index_facets(vec![String::from("a"), String::from("b")], vec![vec![0, 1]]),
            SimplicialComplex::from_index_facets(vec![String::from("x"), String::from("y")], vec![vec![0], vec![1]]),
            vec![0, 1],
        );
        assert!(matches!(bad, Err(Error::NotFunctorial(_))));
    }

    #[test]
    fn chain_matrix_signs() {
        let ground = vec![String::from("a"), String::from("b")];
        let c = SimplicialComplex::from_index_facets(ground, vec![vec![0, 1]]);
        let swap = SimplicialMap::new(c.clone(), c, vec![1, 0]).unwrap();
        let m = swap.chain_matrix(1);
        assert_eq!(m.get(0, 0), (-1).into());
        let m0 = swap.chain_matrix(0);
        assert_eq!((m0.get(0, 1), m0.get(1, 0)), (1.into(), 1.into()));
    }
}
