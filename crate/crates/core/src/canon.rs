//! Canonical forms for small multigraphs with loops.
//!
//! Two independent methods are provided so enumeration can be cross-checked:
//!
//! * [`canonical_form`]: color refinement, then a backtracking search over
//!   vertex orders compatible with the refined colors. The code is the upper
//!   triangle of the multiplicity matrix (diagonal = loops) read column by
//!   column; the smallest code wins, and a partial order is abandoned as soon
//!   as its completed columns exceed the best code so far.
//! * [`brute_force_form`]: every vertex permutation, keeping the largest
//!   sorted edge list.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, SimpleGraph};
use crate::util::{self, permutations};

/// Vertex count plus column-major upper-triangle multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub vertices: usize,
    pub code: Vec<u32>,
}

impl CanonicalForm {
    pub fn edge_count(&self) -> usize {
        self.code.iter().map(|&m| m as usize).sum()
    }

    /// Multiplicity between canonical vertices `i <= j`.
    pub fn multiplicity(&self, i: usize, j: usize) -> u32 {
        let (i, j) = (i.min(j), i.max(j));
        self.code[j * (j + 1) / 2 + i]
    }

    /// The representative graph: vertices `v0..`, edges `e0..` in code order,
    /// so that vertex and edge indices follow the canonical numbering.
    pub fn to_graph(&self) -> Graph {
        let n = self.vertices;
        let m = self.edge_count();
        let vs: Vec<String> = (0..n).map(|i| util::label("v", i, n)).collect();
        let mut es = Vec::with_capacity(m);
        for j in 0..n {
            for i in 0..=j {
                for _ in 0..self.multiplicity(i, j) {
                    es.push((util::label("e", es.len(), m), vs[i].clone(), vs[j].clone()));
                }
            }
        }
        Graph::new(&vs, &es).expect("canonical code of a connected graph")
    }
}

fn multiplicity_matrix(g: &Graph) -> Vec<Vec<u32>> {
    g.multiplicities()
}

fn refine_colors(m: &[Vec<u32>]) -> Vec<usize> {
    let n = m.len();
    let mut colors = vec![0usize; n];
    let mut classes = 1;
    loop {
        let sigs: Vec<(usize, u32, Vec<(usize, u32)>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<(usize, u32)> = (0..n)
                    .filter(|&w| w != v && m[v][w] > 0)
                    .map(|w| (colors[w], m[v][w]))
                    .collect();
                nb.sort();
                (colors[v], m[v][v], nb)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        colors = sigs.iter().map(|s| sorted.binary_search(s).unwrap()).collect();
        if sorted.len() == classes {
            return colors;
        }
        classes = sorted.len();
    }
}

struct Search<'a> {
    m: &'a [Vec<u32>],
    slot_color: Vec<usize>,
    colors: Vec<usize>,
    order: Vec<usize>,
    used: Vec<bool>,
    code: Vec<u32>,
    best: Option<Vec<u32>>,
}

impl Search<'_> {
    fn run(&mut self) {
        let j = self.order.len();
        if j == self.m.len() {
            if self.best.as_ref().map_or(true, |b| self.code < *b) {
                self.best = Some(self.code.clone());
            }
            return;
        }
        for v in 0..self.m.len() {
            if self.used[v] || self.colors[v] != self.slot_color[j] {
                continue;
            }
            let start = self.code.len();
            self.code.extend(self.order.iter().map(|&u| self.m[u][v]));
            self.code.push(self.m[v][v]);
            let prune = self
                .best
                .as_ref()
                .is_some_and(|b| self.code.as_slice() > &b[..self.code.len()]);
            if !prune {
                self.used[v] = true;
                self.order.push(v);
                self.run();
                self.order.pop();
                self.used[v] = false;
            }
            self.code.truncate(start);
        }
    }
}

fn canonical_code(m: &[Vec<u32>]) -> CanonicalForm {
    let n = m.len();
    let colors = refine_colors(m);
    let mut slot_color = colors.clone();
    slot_color.sort();
    let mut s = Search {
        m,
        slot_color,
        colors,
        order: Vec::new(),
        used: vec![false; n],
        code: Vec::new(),
        best: None,
    };
    s.run();
    CanonicalForm {
        vertices: n,
        code: s.best.unwrap_or_default(),
    }
}

/// Canonical form by color refinement and pruned search.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_code(&multiplicity_matrix(g))
}

/// Canonical form of a simple graph (possibly disconnected).
pub fn simple_canonical_form(g: &SimpleGraph) -> CanonicalForm {
    let n = g.vertex_count();
    let mut m = vec![vec![0u32; n]; n];
    for (a, b) in g.edges() {
        m[a][b] = 1;
        m[b][a] = 1;
    }
    canonical_code(&m)
}

/// The other canonical form: maximum over all `n!` relabelings of the sorted
/// list of `(min, max)` endpoint pairs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BruteForm {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

pub fn brute_force_form_of_pairs(n: usize, pairs: &[(usize, usize)]) -> BruteForm {
    let mut best: Option<Vec<(usize, usize)>> = None;
    for p in permutations(n) {
        let mut e: Vec<(usize, usize)> = pairs
            .iter()
            .map(|&(a, b)| (p[a].min(p[b]), p[a].max(p[b])))
            .collect();
        e.sort();
        if best.as_ref().map_or(true, |b| e > *b) {
            best = Some(e);
        }
    }
    BruteForm {
        vertices: n,
        edges: best.unwrap_or_default(),
    }
}

pub fn brute_force_form(g: &Graph) -> BruteForm {
    let pairs: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.ends[0], e.ends[1])).collect();
    brute_force_form_of_pairs(g.vertex_count(), &pairs)
}

/// Isomorphism test via canonical forms.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && canonical_form(a) == canonical_form(b)
}

/// Rebuilds `g` on its canonical representative.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_form(g).to_graph()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{standard_graph, StandardGraph};

    fn relabel_reversed(g: &Graph) -> Graph {
        let n = g.vertex_count();
        let vs: Vec<String> = (0..n).map(|i| util::label("w", n - 1 - i, n)).collect();
        let es: Vec<(String, String, String)> = g
            .edges()
            .iter()
            .enumerate()
            .map(|(i, e)| (util::label("f", i, g.edge_count()), vs[e.ends[0]].clone(), vs[e.ends[1]].clone()))
            .collect();
        Graph::new(&vs, &es).unwrap()
    }

    #[test]
    fn invariant_under_relabeling() {
        for kind in [
            StandardGraph::Complete(4),
            StandardGraph::LoopBouquet(3),
            StandardGraph::TwoStarTree(2, 3),
            StandardGraph::Rose(2),
            StandardGraph::Path(4),
        ] {
            let g = standard_graph(kind).unwrap();
            let h = relabel_reversed(&g);
            assert_eq!(canonical_form(&g), canonical_form(&h));
            assert_eq!(brute_force_form(&g), brute_force_form(&h));
            assert!(isomorphic(&canonical_graph(&g), &g));
        }
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        let p3 = standard_graph(StandardGraph::Path(3)).unwrap();
        let s3 = standard_graph(StandardGraph::Star(3)).unwrap();
        assert_ne!(canonical_form(&p3), canonical_form(&s3));
        assert_ne!(brute_force_form(&p3), brute_force_form(&s3));
        // loop at an end vs loop at the middle of a 2-path
        let a = Graph::new(&["a", "b", "c"], &[("x", "a", "b"), ("y", "b", "c"), ("z", "a", "a")]).unwrap();
        let b = Graph::new(&["a", "b", "c"], &[("x", "a", "b"), ("y", "b", "c"), ("z", "b", "b")]).unwrap();
        assert!(!isomorphic(&a, &b));
    }

    #[test]
    fn canonical_graph_is_fixed_point() {
        let g = standard_graph(StandardGraph::LoopBouquet(2)).unwrap();
        let c = canonical_graph(&g);
        assert_eq!(canonical_graph(&c), c);
        assert_eq!(canonical_form(&c).to_graph(), c);
    }
}
