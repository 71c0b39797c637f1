//! Connected finite multigraphs in arrow form, plus simple graphs.
//!
//! A [`Graph`] stores each edge once; its two arrows are derived. Arrow `2i`
//! runs from `ends[0]` to `ends[1]` of edge `i` and arrow `2i + 1` runs back,
//! so the involution is `a ^ 1` and `head = tail ∘ σ` holds by construction.
//! Vertices and edges are kept sorted by id, and every index used elsewhere in
//! the crate refers to that order.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::util::{self, DisjointSets};

/// Default cap on vertices for automorphism enumeration.
pub const AUTOMORPHISM_VERTEX_LIMIT: usize = 12;
/// Default cap on edges for explicit spanning tree listing.
pub const SPANNING_TREE_EDGE_LIMIT: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrow(pub usize);

impl Arrow {
    pub fn edge(self) -> usize {
        self.0 / 2
    }

    /// The orientation-reversing involution.
    pub fn sigma(self) -> Arrow {
        Arrow(self.0 ^ 1)
    }

    pub fn forward(edge: usize) -> Arrow {
        Arrow(2 * edge)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: String,
    /// Endpoint vertex indices, sorted.
    pub ends: [usize; 2],
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.ends[0] == self.ends[1]
    }

    pub fn touches(&self, v: usize) -> bool {
        self.ends[0] == v || self.ends[1] == v
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

impl Graph {
    /// Builds a connected graph from vertex ids and `(edge id, end, end)` triples.
    ///
    /// Loops (equal ends) and parallel edges are allowed.
    pub fn new<V, E>(vertex_ids: &[V], edge_specs: &[(E, V, V)]) -> Result<Graph>
    where
        V: AsRef<str>,
        E: AsRef<str>,
    {
        let mut vertices: Vec<String> = vertex_ids.iter().map(|v| v.as_ref().to_string()).collect();
        vertices.sort();
        for w in vertices.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateVertexId(w[0].clone()));
            }
        }
        let index = |id: &str| -> Result<usize> {
            vertices
                .binary_search_by(|v| v.as_str().cmp(id))
                .map_err(|_| Error::UnknownVertex(id.to_string()))
        };
        let mut edges = Vec::with_capacity(edge_specs.len());
        for (id, u, v) in edge_specs {
            let (a, b) = (index(u.as_ref())?, index(v.as_ref())?);
            edges.push(Edge {
                id: id.as_ref().to_string(),
                ends: [a.min(b), a.max(b)],
            });
        }
        Graph::from_parts(vertices, edges)
    }

    /// `vertices` must already be sorted and unique; edge ends index into it.
    pub(crate) fn from_parts(vertices: Vec<String>, mut edges: Vec<Edge>) -> Result<Graph> {
        if vertices.is_empty() {
            return Err(Error::EmptyGraph);
        }
        for e in edges.iter_mut() {
            e.ends.sort();
        }
        edges.sort_by(|a, b| a.id.cmp(&b.id));
        for w in edges.windows(2) {
            if w[0].id == w[1].id {
                return Err(Error::DuplicateEdgeId(w[0].id.clone()));
            }
        }
        let g = Graph { vertices, edges };
        if !g.is_connected_without(&[]) {
            return Err(Error::Disconnected);
        }
        debug_assert!(g.check_arrow_axioms());
        Ok(g)
    }

    /// The one-vertex graph with no edges.
    pub fn point() -> Graph {
        Graph {
            vertices: vec!["v".to_string()],
            edges: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn arrow_count(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn vertex_index(&self, id: &str) -> Result<usize> {
        self.vertices
            .binary_search_by(|v| v.as_str().cmp(id))
            .map_err(|_| Error::UnknownVertex(id.to_string()))
    }

    pub fn edge_index(&self, id: &str) -> Result<usize> {
        self.edges
            .binary_search_by(|e| e.id.as_str().cmp(id))
            .map_err(|_| Error::UnknownEdge(id.to_string()))
    }

    pub fn tail(&self, a: Arrow) -> usize {
        self.edges[a.edge()].ends[a.0 & 1]
    }

    pub fn head(&self, a: Arrow) -> usize {
        self.tail(a.sigma())
    }

    /// Cyclomatic number `e - v + 1`.
    pub fn genus(&self) -> i64 {
        self.edge_count() as i64 - self.vertex_count() as i64 + 1
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|e| (e.ends[0] == v) as usize + (e.ends[1] == v) as usize)
            .sum()
    }

    pub fn shares_vertex(&self, e: usize, f: usize) -> bool {
        let (a, b) = (&self.edges[e], &self.edges[f]);
        a.ends.iter().any(|&v| b.touches(v))
    }

    /// Symmetric multiplicity matrix; the diagonal counts loops.
    pub fn multiplicities(&self) -> Vec<Vec<u32>> {
        let n = self.vertex_count();
        let mut m = vec![vec![0u32; n]; n];
        for e in &self.edges {
            let [a, b] = e.ends;
            m[a][b] += 1;
            if a != b {
                m[b][a] += 1;
            }
        }
        m
    }

    fn check_arrow_axioms(&self) -> bool {
        (0..self.arrow_count()).map(Arrow).all(|a| {
            a.sigma() != a && a.sigma().sigma() == a && self.head(a) == self.tail(a.sigma())
        })
    }

    /// Connectivity after removing the listed edges.
    pub fn is_connected_without(&self, removed: &[usize]) -> bool {
        let mut ds = DisjointSets::new(self.vertex_count());
        for (i, e) in self.edges.iter().enumerate() {
            if !removed.contains(&i) {
                ds.union(e.ends[0], e.ends[1]);
            }
        }
        ds.labels().1 == 1
    }

    /// Number of spanning trees, by the matrix-tree theorem.
    pub fn spanning_tree_count(&self) -> BigUint {
        let n = self.vertex_count();
        if n == 1 {
            return BigUint::one();
        }
        let mut lap = vec![vec![BigInt::zero(); n - 1]; n - 1];
        for e in self.edges.iter().filter(|e| !e.is_loop()) {
            let [a, b] = e.ends;
            for (x, y) in [(a, b), (b, a)] {
                if x > 0 {
                    lap[x - 1][x - 1] += 1;
                    if y > 0 {
                        lap[x - 1][y - 1] -= 1;
                    }
                }
            }
        }
        crate::linalg::dense::determinant(lap).abs().to_biguint().unwrap()
    }

    /// All spanning trees as sorted edge-index sets.
    pub fn spanning_trees(&self) -> Result<Vec<Vec<usize>>> {
        if self.edge_count() > SPANNING_TREE_EDGE_LIMIT {
            return Err(Error::TooLarge {
                what: "edge count",
                limit: SPANNING_TREE_EDGE_LIMIT,
                got: self.edge_count(),
            });
        }
        let candidates: Vec<usize> = (0..self.edge_count()).filter(|&e| !self.edges[e].is_loop()).collect();
        let k = self.vertex_count() - 1;
        let mut trees = Vec::new();
        for pick in util::combinations(candidates.len(), k) {
            let mut ds = DisjointSets::new(self.vertex_count());
            if pick.iter().all(|&i| {
                let e = &self.edges[candidates[i]];
                ds.union(e.ends[0], e.ends[1])
            }) {
                trees.push(pick.iter().map(|&i| candidates[i]).collect());
            }
        }
        Ok(trees)
    }

    /// Vertex permutations preserving all edge multiplicities (loops included).
    fn vertex_automorphisms(&self) -> Vec<Vec<usize>> {
        let m = self.multiplicities();
        let n = self.vertex_count();
        let mut out = Vec::new();
        let mut perm = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn go(
            v: usize,
            m: &[Vec<u32>],
            perm: &mut Vec<usize>,
            used: &mut Vec<bool>,
            out: &mut Vec<Vec<usize>>,
        ) {
            let n = m.len();
            if v == n {
                out.push(perm.clone());
                return;
            }
            for w in 0..n {
                if used[w] || m[v][v] != m[w][w] {
                    continue;
                }
                if (0..v).all(|u| m[u][v] == m[perm[u]][w]) {
                    perm[v] = w;
                    used[w] = true;
                    go(v + 1, m, perm, used, out);
                    used[w] = false;
                }
            }
        }
        go(0, &m, &mut perm, &mut used, &mut out);
        out
    }

    /// Order of the automorphism group acting on vertices and arrows.
    ///
    /// Each vertex automorphism extends by permuting parallel classes, and
    /// loops can additionally be reversed.
    pub fn automorphism_count(&self) -> Result<u128> {
        self.check_aut_limit()?;
        let m = self.multiplicities();
        let n = self.vertex_count();
        let mut factor: u128 = 1;
        for a in 0..n {
            for b in a..n {
                let k = m[a][b];
                factor *= util::factorial(k);
                if a == b {
                    factor <<= k;
                }
            }
        }
        Ok(self.vertex_automorphisms().len() as u128 * factor)
    }

    fn check_aut_limit(&self) -> Result<()> {
        if self.vertex_count() > AUTOMORPHISM_VERTEX_LIMIT {
            return Err(Error::TooLarge {
                what: "vertex count",
                limit: AUTOMORPHISM_VERTEX_LIMIT,
                got: self.vertex_count(),
            });
        }
        Ok(())
    }

    /// Explicit automorphisms as (vertex permutation, arrow permutation) pairs.
    pub fn automorphisms(&self) -> Result<Vec<Automorphism>> {
        self.check_aut_limit()?;
        let mut classes: BTreeMap<[usize; 2], Vec<usize>> = BTreeMap::new();
        for (i, e) in self.edges.iter().enumerate() {
            classes.entry(e.ends).or_default().push(i);
        }
        let mut out = Vec::new();
        for vperm in self.vertex_automorphisms() {
            // arrow choices per parallel class: every bijection onto the image
            // class, with a free orientation bit for loops
            let mut partial: Vec<Vec<usize>> = vec![vec![usize::MAX; self.arrow_count()]];
            for (ends, members) in &classes {
                let mut image = [vperm[ends[0]], vperm[ends[1]]];
                image.sort();
                let targets = &classes[&image];
                let is_loop = ends[0] == ends[1];
                let mut next = Vec::new();
                for bij in util::permutations(members.len()) {
                    let flips: u32 = if is_loop { 1 << members.len() } else { 1 };
                    for mask in 0..flips {
                        for base in &partial {
                            let mut arr = base.clone();
                            for (k, &src) in members.iter().enumerate() {
                                let dst = targets[bij[k]];
                                let fwd = Arrow::forward(src);
                                let img = if is_loop {
                                    Arrow(2 * dst + ((mask >> k) & 1) as usize)
                                } else if self.tail(Arrow::forward(dst)) == vperm[self.tail(fwd)] {
                                    Arrow::forward(dst)
                                } else {
                                    Arrow::forward(dst).sigma()
                                };
                                arr[fwd.0] = img.0;
                                arr[fwd.sigma().0] = img.sigma().0;
                            }
                            next.push(arr);
                        }
                    }
                }
                partial = next;
            }
            for arrows in partial {
                out.push(Automorphism {
                    vertices: vperm.clone(),
                    arrows,
                });
            }
        }
        Ok(out)
    }

    /// L(G): edges of G adjacent when they share a vertex.
    pub fn line_graph(&self) -> SimpleGraph {
        self.edge_graph(true)
    }

    /// L^c(G): edges of G adjacent when they share no vertex.
    pub fn complement_line_graph(&self) -> SimpleGraph {
        self.edge_graph(false)
    }

    fn edge_graph(&self, sharing: bool) -> SimpleGraph {
        let n = self.edge_count();
        let mut adj = BTreeSet::new();
        for e in 0..n {
            for f in e + 1..n {
                if self.shares_vertex(e, f) == sharing {
                    adj.insert((e, f));
                }
            }
        }
        SimpleGraph {
            vertices: self.edges.iter().map(|e| e.id.clone()).collect(),
            edges: adj,
        }
    }

    /// Rebuild with new vertex and edge labels; indices keep their meaning
    /// only if the new labels sort the same way.
    pub fn relabeled(&self, vertex_ids: &[String], edge_ids: &[String]) -> Result<Graph> {
        let specs: Vec<(String, String, String)> = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| {
                (
                    edge_ids[i].clone(),
                    vertex_ids[e.ends[0]].clone(),
                    vertex_ids[e.ends[1]].clone(),
                )
            })
            .collect();
        Graph::new(vertex_ids, &specs)
    }

    pub fn edge_ids(&self) -> Vec<String> {
        self.edges.iter().map(|e| e.id.clone()).collect()
    }
}

/// An automorphism: vertex permutation plus arrow permutation commuting with
/// head, tail and the involution.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Automorphism {
    pub vertices: Vec<usize>,
    pub arrows: Vec<usize>,
}

/// Named graph families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardGraph {
    Point,
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// Path with `n` edges.
    Path(usize),
    /// Cycle with `n` edges; `n = 1` is a loop and `n = 2` a digon.
    Cycle(usize),
    /// Star with `n` edges.
    Star(usize),
    /// `L_n`: a wedge of `n` digons, vertices `v_1..v_n` each doubly joined to `v_{n+1}`.
    LoopBouquet(usize),
    /// `n` loops at a single vertex.
    Rose(usize),
    /// Two adjacent centers carrying `a` and `b` leaves respectively.
    TwoStarTree(usize, usize),
}

pub fn standard_graph(kind: StandardGraph) -> Result<Graph> {
    use StandardGraph::*;
    let bad = |what: &str| Err(Error::InvalidSize(format!("{what} must be at least 1")));
    let mut vs: Vec<String> = Vec::new();
    let mut es: Vec<(String, String, String)> = Vec::new();
    match kind {
        Point => return Ok(Graph::point()),
        Complete(n) => {
            if n < 1 {
                return bad("complete graph order");
            }
            vs = (1..=n).map(|i| util::label("v", i, n + 1)).collect();
            let count = n * n.saturating_sub(1) / 2;
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    k += 1;
                    es.push((util::label("e", k, count + 1), vs[i].clone(), vs[j].clone()));
                }
            }
        }
        CompleteBipartite(a, b) => {
            if a < 1 || b < 1 {
                return bad("part size");
            }
            let left: Vec<String> = (1..=a).map(|i| util::label("a", i, a + 1)).collect();
            let right: Vec<String> = (1..=b).map(|i| util::label("b", i, b + 1)).collect();
            let mut k = 0;
            for l in &left {
                for r in &right {
                    k += 1;
                    es.push((util::label("e", k, a * b + 1), l.clone(), r.clone()));
                }
            }
            vs.extend(left);
            vs.extend(right);
        }
        Path(n) => {
            if n < 1 {
                return bad("path length");
            }
            vs = (0..=n).map(|i| util::label("v", i, n + 1)).collect();
            for i in 1..=n {
                es.push((util::label("e", i, n + 1), vs[i - 1].clone(), vs[i].clone()));
            }
        }
        Cycle(n) => {
            if n < 1 {
                return bad("cycle length");
            }
            vs = (0..n).map(|i| util::label("v", i, n)).collect();
            for i in 1..=n {
                es.push((util::label("e", i, n + 1), vs[i - 1].clone(), vs[i % n].clone()));
            }
        }
        Star(n) => {
            if n < 1 {
                return bad("star size");
            }
            vs = (0..=n).map(|i| util::label("v", i, n + 1)).collect();
            for i in 1..=n {
                es.push((util::label("e", i, n + 1), vs[0].clone(), vs[i].clone()));
            }
        }
        LoopBouquet(n) => {
            if n < 1 {
                return bad("bouquet size");
            }
            vs = (1..=n + 1).map(|i| util::label("v", i, n + 2)).collect();
            for i in 1..=n {
                es.push((util::label("e", i, n + 1), vs[i - 1].clone(), vs[n].clone()));
                es.push((util::label("f", i, n + 1), vs[i - 1].clone(), vs[n].clone()));
            }
        }
        Rose(n) => {
            if n < 1 {
                return bad("rose size");
            }
            vs = vec!["v".to_string()];
            for i in 1..=n {
                es.push((util::label("l", i, n + 1), vs[0].clone(), vs[0].clone()));
            }
        }
        TwoStarTree(a, b) => {
            if a < 1 || b < 1 {
                return bad("leaf count");
            }
            vs.push("u".to_string());
            vs.push("w".to_string());
            es.push(("c".to_string(), "u".to_string(), "w".to_string()));
            for i in 1..=a {
                let leaf = util::label("u", i, a + 1);
                es.push((util::label("x", i, a + 1), "u".to_string(), leaf.clone()));
                vs.push(leaf);
            }
            for i in 1..=b {
                let leaf = util::label("w", i, b + 1);
                es.push((util::label("y", i, b + 1), "w".to_string(), leaf.clone()));
                vs.push(leaf);
            }
        }
    }
    Graph::new(&vs, &es)
}

/// A simple graph: no loops, no parallel edges, possibly disconnected.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    vertices: Vec<String>,
    /// Index pairs `(u, v)` with `u < v`.
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    /// `n` anonymous vertices labeled by index.
    pub fn from_indices(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> SimpleGraph {
        let vertices = (0..n).map(|i| util::label("", i, n)).collect();
        let edges = edges
            .into_iter()
            .filter(|(a, b)| a != b)
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        SimpleGraph { vertices, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&w| w != v && self.has_edge(v, w)).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|(a, b)| *a == v || *b == v).count()
    }

    pub fn complement(&self) -> SimpleGraph {
        let n = self.vertex_count();
        let mut edges = BTreeSet::new();
        for a in 0..n {
            for b in a + 1..n {
                if !self.has_edge(a, b) {
                    edges.insert((a, b));
                }
            }
        }
        SimpleGraph {
            vertices: self.vertices.clone(),
            edges,
        }
    }

    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut ds = DisjointSets::new(self.vertex_count());
        for &(a, b) in &self.edges {
            ds.union(a, b);
        }
        let (labels, count) = ds.labels();
        let mut comps = vec![Vec::new(); count];
        for (v, &c) in labels.iter().enumerate() {
            comps[c].push(v);
        }
        comps
    }

    /// Disjoint union of complete bipartite `K_{a,b}` and one isolated vertex.
    pub fn complete_bipartite_plus_point(a: usize, b: usize) -> SimpleGraph {
        let edges = (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j)));
        SimpleGraph::from_indices(a + b + 1, edges)
    }

    /// Backtracking isomorphism test with degree pruning.
    pub fn is_isomorphic(&self, other: &SimpleGraph) -> bool {
        let n = self.vertex_count();
        if n != other.vertex_count() || self.edge_count() != other.edge_count() {
            return false;
        }
        let da: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let db: Vec<usize> = (0..n).map(|v| other.degree(v)).collect();
        let (mut sa, mut sb) = (da.clone(), db.clone());
        sa.sort();
        sb.sort();
        if sa != sb {
            return false;
        }
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn go(
            v: usize,
            g: &SimpleGraph,
            h: &SimpleGraph,
            da: &[usize],
            db: &[usize],
            map: &mut Vec<usize>,
            used: &mut Vec<bool>,
        ) -> bool {
            if v == map.len() {
                return true;
            }
            for w in 0..map.len() {
                if used[w] || da[v] != db[w] {
                    continue;
                }
                if (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], w)) {
                    map[v] = w;
                    used[w] = true;
                    if go(v + 1, g, h, da, db, map, used) {
                        return true;
                    }
                    used[w] = false;
                }
            }
            false
        }
        go(0, self, other, &da, &db, &mut map, &mut used)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use StandardGraph::*;

    fn l3_by_hand() -> Graph {
        let vs = ["v1", "v2", "v3", "v4"];
        let es = [
            ("e1", "v1", "v4"),
            ("f1", "v1", "v4"),
            ("e2", "v2", "v4"),
            ("f2", "v2", "v4"),
            ("e3", "v3", "v4"),
            ("f3", "v3", "v4"),
        ];
        Graph::new(&vs, &es).unwrap()
    }

    #[test]
    fn make_graph_examples() {
        let lp = Graph::new(&["v"], &[("e", "v", "v")]).unwrap();
        assert_eq!(lp.edge_count(), 1);
        assert_eq!(lp.arrow_count(), 2);
        let edge = Graph::new(&["u", "v"], &[("e", "u", "v")]).unwrap();
        assert_eq!(edge.arrow_count(), 2);
        let l3 = l3_by_hand();
        assert_eq!((l3.vertex_count(), l3.edge_count()), (4, 6));
        assert_eq!(l3.multiplicities(), standard_graph(LoopBouquet(3)).unwrap().multiplicities());
    }

    #[test]
    fn make_graph_errors() {
        assert_eq!(
            Graph::new(&["u"], &[("e", "u", "x")]),
            Err(Error::UnknownVertex("x".into()))
        );
        assert_eq!(
            Graph::new(&["u", "v"], &[("e", "u", "v"), ("e", "v", "u")]),
            Err(Error::DuplicateEdgeId("e".into()))
        );
        assert_eq!(Graph::new::<&str, &str>(&["u", "v"], &[]), Err(Error::Disconnected));
        assert_eq!(Graph::new::<&str, &str>(&[], &[]), Err(Error::EmptyGraph));
    }

    #[test]
    fn standard_sizes() {
        let k4 = standard_graph(Complete(4)).unwrap();
        assert_eq!((k4.vertex_count(), k4.edge_count()), (4, 6));
        let t = standard_graph(TwoStarTree(2, 2)).unwrap();
        assert_eq!((t.vertex_count(), t.edge_count()), (6, 5));
        assert!(standard_graph(Path(0)).is_err());
        assert!(standard_graph(Cycle(0)).is_err());
        let c1 = standard_graph(Cycle(1)).unwrap();
        assert!(c1.edge(0).is_loop());
    }

    #[test]
    fn arrow_axioms_hold() {
        for kind in [Complete(5), Rose(3), LoopBouquet(2), Cycle(2), TwoStarTree(1, 3)] {
            let g = standard_graph(kind).unwrap();
            assert!(g.check_arrow_axioms());
            for a in (0..g.arrow_count()).map(Arrow) {
                assert_ne!(a.sigma(), a);
                assert_eq!(g.head(a), g.tail(a.sigma()));
            }
        }
    }

    #[test]
    fn complement_line_graphs() {
        let k3 = standard_graph(Complete(3)).unwrap();
        assert_eq!(k3.complement_line_graph().edge_count(), 0);
        let k5 = standard_graph(Complete(5)).unwrap();
        let lc = k5.complement_line_graph();
        assert_eq!((lc.vertex_count(), lc.edge_count()), (10, 15));
        // Petersen: 3-regular
        assert!((0..10).all(|v| lc.degree(v) == 3));
        for (a, b) in [(1, 1), (2, 3), (4, 2), (3, 4)] {
            let t = standard_graph(TwoStarTree(a, b)).unwrap();
            assert!(t
                .complement_line_graph()
                .is_isomorphic(&SimpleGraph::complete_bipartite_plus_point(a, b)));
        }
    }

    #[test]
    fn loops_in_line_graphs() {
        // loop at u, edge u-w, edge w-x
        let g = Graph::new(&["u", "w", "x"], &[("a", "u", "u"), ("b", "u", "w"), ("c", "w", "x")]).unwrap();
        let l = g.line_graph();
        assert!(l.has_edge(0, 1));
        assert!(!l.has_edge(0, 2));
        assert!(g.complement_line_graph().has_edge(0, 2));
    }

    #[test]
    fn line_graph_complementarity() {
        for kind in [Complete(4), Rose(2), LoopBouquet(3), TwoStarTree(2, 1), Cycle(5)] {
            let g = standard_graph(kind).unwrap();
            let e = g.edge_count();
            assert_eq!(
                g.line_graph().edge_count() + g.complement_line_graph().edge_count(),
                e * (e - 1) / 2
            );
            assert_eq!(g.line_graph().vertices(), g.edge_ids().as_slice());
        }
    }

    #[test]
    fn spanning_tree_counts() {
        let k4 = standard_graph(Complete(4)).unwrap();
        assert_eq!(k4.spanning_tree_count(), BigUint::from(16u32));
        assert_eq!(k4.spanning_trees().unwrap().len(), 16);
        assert_eq!(standard_graph(Cycle(5)).unwrap().spanning_tree_count(), BigUint::from(5u32));
        assert_eq!(standard_graph(Rose(1)).unwrap().spanning_tree_count(), BigUint::one());
        assert_eq!(standard_graph(Rose(1)).unwrap().spanning_trees().unwrap(), vec![Vec::<usize>::new()]);
        for n in 2..=6u32 {
            let g = standard_graph(Complete(n as usize)).unwrap();
            assert_eq!(g.spanning_tree_count(), BigUint::from(n.pow(n - 2)));
        }
        // digon wedge L_3: each digon contributes 2 choices
        assert_eq!(standard_graph(LoopBouquet(3)).unwrap().spanning_tree_count(), BigUint::from(8u32));
    }

    /// Exhaustive oracle: every (vertex perm, arrow perm) pair commuting with
    /// head, tail and the involution.
    fn brute_force_automorphisms(g: &Graph) -> usize {
        let mut count = 0;
        let arrows = util::permutations(g.arrow_count());
        for vp in util::permutations(g.vertex_count()) {
            for ap in &arrows {
                let ok = (0..g.arrow_count()).all(|a| {
                    let img = Arrow(ap[a]);
                    g.tail(img) == vp[g.tail(Arrow(a))]
                        && g.head(img) == vp[g.head(Arrow(a))]
                        && Arrow(ap[Arrow(a).sigma().0]) == img.sigma()
                });
                count += ok as usize;
            }
        }
        count
    }

    #[test]
    fn automorphism_examples() {
        let edge = standard_graph(Path(1)).unwrap();
        let lp = standard_graph(Rose(1)).unwrap();
        let k3 = standard_graph(Complete(3)).unwrap();
        assert_eq!(edge.automorphism_count().unwrap(), 2);
        assert_eq!(lp.automorphism_count().unwrap(), 2);
        assert_eq!(k3.automorphism_count().unwrap(), 6);
        for g in [edge, lp, k3] {
            assert_eq!(brute_force_automorphisms(&g) as u128, g.automorphism_count().unwrap());
        }
    }

    #[test]
    fn automorphism_lists_match_counts_and_oracle() {
        let digon = standard_graph(Cycle(2)).unwrap();
        let rose2 = standard_graph(Rose(2)).unwrap();
        let lollipop = Graph::new(&["u", "w"], &[("a", "u", "u"), ("b", "u", "w")]).unwrap();
        let p2 = standard_graph(Path(2)).unwrap();
        for g in [digon, rose2, lollipop, p2] {
            let list = g.automorphisms().unwrap();
            assert_eq!(list.len() as u128, g.automorphism_count().unwrap());
            assert_eq!(list.len(), brute_force_automorphisms(&g));
            let set: BTreeSet<_> = list.iter().cloned().collect();
            assert_eq!(set.len(), list.len());
        }
    }
}
