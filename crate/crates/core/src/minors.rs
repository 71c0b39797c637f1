//! Minor morphisms between connected graphs.
//!
//! A minor morphism `φ: G → G'` is a map on `V ⊔ A ⊔ {*}`. Every edge of `G`
//! meets one of three fates: kept (its arrows go to arrows of `G'`),
//! contracted (its arrows go to a vertex) or deleted (its arrows go to `*`).
//! The kept edges give the injection `φ*: E(G') → E(G)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Arrow, Edge, Graph};
use crate::util::{self, DisjointSets};

/// Default cap on source edges for [`enumerate`].
pub const ENUMERATION_EDGE_LIMIT: usize = 9;

/// Where an element of the source goes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Image {
    Star,
    Vertex(usize),
    Arrow(usize),
}

/// An unchecked map, as read from input or built by hand.
#[derive(Clone, Debug)]
pub struct Candidate {
    pub source: Arc<Graph>,
    pub target: Arc<Graph>,
    pub star: Image,
    pub vertices: Vec<Image>,
    pub arrows: Vec<Image>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Axiom {
    /// Map lengths match the source and images index into the target.
    WellFormed,
    StarFixed,
    VerticesToVertices,
    UniqueArrowPreimage,
    /// Kept arrows commute with head and tail.
    ArrowIncidence,
    /// An arrow sent to a vertex has both endpoints sent there too.
    ContractedEndpoints,
    TreeFibers,
    /// `φ ∘ σ = σ' ∘ φ`.
    Equivariance,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: String,
}

fn arrow_name(g: &Graph, a: usize) -> String {
    let e = &g.edge(a / 2).id;
    if a % 2 == 0 {
        format!("{e}+")
    } else {
        format!("{e}-")
    }
}

/// Checks every axiom; an empty list means the candidate is a minor morphism.
pub fn validate(c: &Candidate) -> Vec<Violation> {
    let (g, h) = (&*c.source, &*c.target);
    let mut out = Vec::new();
    let mut push = |axiom, witness: String| out.push(Violation { axiom, witness });

    let in_range = |img: &Image| match *img {
        Image::Star => true,
        Image::Vertex(v) => v < h.vertex_count(),
        Image::Arrow(a) => a < h.arrow_count(),
    };
    if c.vertices.len() != g.vertex_count() || c.arrows.len() != g.arrow_count() {
        push(Axiom::WellFormed, String::from("map length differs from source size"));
        return out;
    }
    if let Some(bad) = c.vertices.iter().chain(&c.arrows).chain([&c.star]).find(|i| !in_range(i)) {
        push(Axiom::WellFormed, format!("{bad:?} is not in the target"));
        return out;
    }

    if c.star != Image::Star {
        push(Axiom::StarFixed, format!("* -> {:?}", c.star));
    }
    let vmap: Vec<Option<usize>> = c
        .vertices
        .iter()
        .map(|i| match *i {
            Image::Vertex(v) => Some(v),
            _ => None,
        })
        .collect();
    for (v, img) in vmap.iter().enumerate() {
        if img.is_none() {
            push(Axiom::VerticesToVertices, g.vertices()[v].clone());
        }
    }

    let mut preimages = vec![0usize; h.arrow_count()];
    for img in &c.arrows {
        if let Image::Arrow(b) = *img {
            preimages[b] += 1;
        }
    }
    for (b, &n) in preimages.iter().enumerate() {
        if n != 1 {
            push(Axiom::UniqueArrowPreimage, format!("{} has {n} preimages", arrow_name(h, b)));
        }
    }

    for (a, img) in c.arrows.iter().enumerate() {
        let arrow = Arrow(a);
        let (t, hd) = (vmap[g.tail(arrow)], vmap[g.head(arrow)]);
        match *img {
            Image::Arrow(b) => {
                let b = Arrow(b);
                if t.is_some_and(|t| t != h.tail(b)) || hd.is_some_and(|x| x != h.head(b)) {
                    push(Axiom::ArrowIncidence, arrow_name(g, a));
                }
            }
            Image::Vertex(v) => {
                if t.is_some_and(|t| t != v) || hd.is_some_and(|x| x != v) {
                    push(Axiom::ContractedEndpoints, arrow_name(g, a));
                }
            }
            Image::Star => {}
        }
        let twin = c.arrows[arrow.sigma().0];
        let expected = match *img {
            Image::Arrow(b) => Image::Arrow(b ^ 1),
            other => other,
        };
        if twin != expected {
            push(Axiom::Equivariance, arrow_name(g, a));
        }
    }

    // each fiber must be the vertices and edges of a tree
    for v in 0..h.vertex_count() {
        let fiber: Vec<usize> = (0..g.vertex_count()).filter(|&u| vmap[u] == Some(v)).collect();
        let edges: Vec<usize> = (0..g.edge_count())
            .filter(|&e| c.arrows[2 * e] == Image::Vertex(v) || c.arrows[2 * e + 1] == Image::Vertex(v))
            .collect();
        let name = &h.vertices()[v];
        if fiber.is_empty() {
            push(Axiom::TreeFibers, format!("fiber of {name} is empty"));
            continue;
        }
        let mut ds = DisjointSets::new(g.vertex_count());
        let mut acyclic = true;
        for &e in &edges {
            let [a, b] = g.edge(e).ends;
            if !fiber.contains(&a) || !fiber.contains(&b) {
                continue; // reported as ContractedEndpoints
            }
            acyclic &= ds.union(a, b);
        }
        let root = ds.find(fiber[0]);
        let connected = fiber.iter().all(|&u| ds.find(u) == root);
        if !acyclic {
            push(Axiom::TreeFibers, format!("fiber of {name} contains a cycle"));
        }
        if !connected {
            push(Axiom::TreeFibers, format!("fiber of {name} is disconnected"));
        }
    }
    out
}

/// What happens to one source edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum EdgeFate {
    Kept(usize),
    Contracted(usize),
    Deleted,
}

/// `φ*`: target edge index to source edge index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeInjection {
    pub map: Vec<usize>,
}

impl EdgeInjection {
    pub fn identity(n: usize) -> Self {
        EdgeInjection { map: (0..n).collect() }
    }

    pub fn apply(&self, e: usize) -> usize {
        self.map[e]
    }

    /// `(self ∘ other)(e) = self(other(e))`.
    pub fn after(&self, other: &EdgeInjection) -> EdgeInjection {
        EdgeInjection {
            map: other.map.iter().map(|&e| self.map[e]).collect(),
        }
    }
}

/// A validated minor morphism.
#[derive(Clone, Debug)]
pub struct MinorMorphism {
    source: Arc<Graph>,
    target: Arc<Graph>,
    vertex_map: Vec<usize>,
    arrow_map: Vec<Image>,
}

impl PartialEq for MinorMorphism {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_map == other.vertex_map
            && self.arrow_map == other.arrow_map
            && (Arc::ptr_eq(&self.source, &other.source) || self.source == other.source)
            && (Arc::ptr_eq(&self.target, &other.target) || self.target == other.target)
    }
}

impl Eq for MinorMorphism {}

impl MinorMorphism {
    /// Validates a candidate, failing with the list of broken axioms.
    pub fn from_candidate(c: Candidate) -> Result<Self> {
        let violations = validate(&c);
        if !violations.is_empty() {
            let msg: Vec<String> = violations
                .iter()
                .map(|v| format!("{:?}: {}", v.axiom, v.witness))
                .collect();
            return Err(Error::InvalidMorphism(msg.join("; ")));
        }
        let vertex_map = c
            .vertices
            .iter()
            .map(|i| match *i {
                Image::Vertex(v) => v,
                _ => unreachable!(),
            })
            .collect();
        Ok(MinorMorphism {
            source: c.source,
            target: c.target,
            vertex_map,
            arrow_map: c.arrows,
        })
    }

    fn new_unchecked(source: Arc<Graph>, target: Arc<Graph>, vertex_map: Vec<usize>, arrow_map: Vec<Image>) -> Self {
        let m = MinorMorphism {
            source,
            target,
            vertex_map,
            arrow_map,
        };
        debug_assert!(validate(&m.to_candidate()).is_empty(), "{:?}", validate(&m.to_candidate()));
        m
    }

    pub fn identity(g: Arc<Graph>) -> Self {
        let vertex_map = (0..g.vertex_count()).collect();
        let arrow_map = (0..g.arrow_count()).map(Image::Arrow).collect();
        MinorMorphism::new_unchecked(g.clone(), g, vertex_map, arrow_map)
    }

    pub fn to_candidate(&self) -> Candidate {
        Candidate {
            source: self.source.clone(),
            target: self.target.clone(),
            star: Image::Star,
            vertices: self.vertex_map.iter().map(|&v| Image::Vertex(v)).collect(),
            arrows: self.arrow_map.clone(),
        }
    }

    pub fn source(&self) -> &Arc<Graph> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Graph> {
        &self.target
    }

    pub fn vertex_image(&self, v: usize) -> usize {
        self.vertex_map[v]
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    pub fn arrow_image(&self, a: usize) -> Image {
        self.arrow_map[a]
    }

    pub fn arrow_map(&self) -> &[Image] {
        &self.arrow_map
    }

    pub fn edge_fate(&self, e: usize) -> EdgeFate {
        match self.arrow_map[2 * e] {
            Image::Star => EdgeFate::Deleted,
            Image::Vertex(v) => EdgeFate::Contracted(v),
            Image::Arrow(b) => EdgeFate::Kept(b / 2),
        }
    }

    pub fn edge_fates(&self) -> Vec<EdgeFate> {
        (0..self.source.edge_count()).map(|e| self.edge_fate(e)).collect()
    }

    /// `φ*`: each target edge's unique preimage edge.
    pub fn edge_injection(&self) -> EdgeInjection {
        let mut map = vec![usize::MAX; self.target.edge_count()];
        for (a, img) in self.arrow_map.iter().enumerate() {
            if let Image::Arrow(b) = *img {
                map[b / 2] = a / 2;
            }
        }
        EdgeInjection { map }
    }

    /// `psi ∘ self`, defined when `self.target == psi.source`.
    pub fn then(&self, psi: &MinorMorphism) -> Result<MinorMorphism> {
        if !(Arc::ptr_eq(&self.target, &psi.source) || self.target == psi.source) {
            return Err(Error::Mismatch);
        }
        let vertex_map = self.vertex_map.iter().map(|&v| psi.vertex_map[v]).collect();
        let arrow_map = self
            .arrow_map
            .iter()
            .map(|img| match *img {
                Image::Star => Image::Star,
                Image::Vertex(v) => Image::Vertex(psi.vertex_map[v]),
                Image::Arrow(b) => psi.arrow_map[b],
            })
            .collect();
        Ok(MinorMorphism::new_unchecked(
            self.source.clone(),
            psi.target.clone(),
            vertex_map,
            arrow_map,
        ))
    }

    fn sort_key(&self) -> (&[usize], &[Image]) {
        (&self.vertex_map, &self.arrow_map)
    }
}

/// Composition `ψ ∘ φ` of `φ: G → G'` and `ψ: G' → G''`.
pub fn compose(phi: &MinorMorphism, psi: &MinorMorphism) -> Result<MinorMorphism> {
    phi.then(psi)
}

/// Deletes edge `e`; the minor keeps every other id.
pub fn delete_edge(g: &Arc<Graph>, e: &str) -> Result<(Arc<Graph>, MinorMorphism)> {
    let ei = g.edge_index(e)?;
    if !g.is_connected_without(&[ei]) {
        return Err(Error::WouldDisconnect(String::from(e)));
    }
    let edges: Vec<Edge> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != ei)
        .map(|(_, x)| x.clone())
        .collect();
    let minor = Arc::new(Graph::from_parts(g.vertices().to_vec(), edges)?);
    let vertex_map = (0..g.vertex_count()).collect();
    let arrow_map = (0..g.arrow_count())
        .map(|a| {
            let f = a / 2;
            match f.cmp(&ei) {
                core::cmp::Ordering::Equal => Image::Star,
                core::cmp::Ordering::Less => Image::Arrow(a),
                core::cmp::Ordering::Greater => Image::Arrow(a - 2),
            }
        })
        .collect();
    let phi = MinorMorphism::new_unchecked(g.clone(), minor.clone(), vertex_map, arrow_map);
    Ok((minor, phi))
}

/// Contracts the non-loop edge `e`; the merged vertex keeps the smaller id.
pub fn contract_edge(g: &Arc<Graph>, e: &str) -> Result<(Arc<Graph>, MinorMorphism)> {
    let ei = g.edge_index(e)?;
    let [keep, gone] = g.edge(ei).ends;
    if keep == gone {
        return Err(Error::ContractLoop(String::from(e)));
    }
    let vertex_map: Vec<usize> = (0..g.vertex_count())
        .map(|v| match v.cmp(&gone) {
            core::cmp::Ordering::Equal => keep,
            core::cmp::Ordering::Less => v,
            core::cmp::Ordering::Greater => v - 1,
        })
        .collect();
    let vertices: Vec<String> = g
        .vertices()
        .iter()
        .enumerate()
        .filter(|&(v, _)| v != gone)
        .map(|(_, id)| id.clone())
        .collect();
    let mut edges = Vec::new();
    let mut arrow_map = vec![Image::Star; g.arrow_count()];
    for (f, edge) in g.edges().iter().enumerate() {
        if f == ei {
            arrow_map[2 * f] = Image::Vertex(vertex_map[keep]);
            arrow_map[2 * f + 1] = Image::Vertex(vertex_map[keep]);
            continue;
        }
        let [a, b] = edge.ends.map(|v| vertex_map[v]);
        let new_index = edges.len();
        edges.push(Edge {
            id: edge.id.clone(),
            ends: [a.min(b), a.max(b)],
        });
        let forward = a <= b;
        arrow_map[2 * f] = Image::Arrow(2 * new_index + !forward as usize);
        arrow_map[2 * f + 1] = Image::Arrow(2 * new_index + forward as usize);
    }
    let minor = Arc::new(Graph::from_parts(vertices, edges)?);
    let phi = MinorMorphism::new_unchecked(g.clone(), minor.clone(), vertex_map, arrow_map);
    Ok((minor, phi))
}

/// Every minor morphism `g → h`, sorted by their maps.
///
/// For each choice of kept edges (as many as `h` has) and contracted forest
/// (with `v(g) - v(h)` edges), the quotient by the forest restricted to the
/// kept edges must be isomorphic to `h`; each isomorphism on vertices and
/// arrows yields one morphism. The remaining edges are deleted.
pub fn enumerate(g: &Arc<Graph>, h: &Arc<Graph>) -> Result<Vec<MinorMorphism>> {
    enumerate_with_limit(g, h, ENUMERATION_EDGE_LIMIT)
}

pub fn enumerate_with_limit(g: &Arc<Graph>, h: &Arc<Graph>, limit: usize) -> Result<Vec<MinorMorphism>> {
    if g.edge_count() > limit {
        return Err(Error::TooLarge {
            what: "source edge count",
            limit,
            got: g.edge_count(),
        });
    }
    let mut out = Vec::new();
    let (n, m) = (g.edge_count(), h.edge_count());
    if m > n || h.vertex_count() > g.vertex_count() {
        return Ok(out);
    }
    let forest_size = g.vertex_count() - h.vertex_count();
    let h_mult = h.multiplicities();
    let mut h_classes: BTreeMap<[usize; 2], Vec<usize>> = BTreeMap::new();
    for (i, e) in h.edges().iter().enumerate() {
        h_classes.entry(e.ends).or_default().push(i);
    }

    for kept in util::combinations(n, m) {
        let rest: Vec<usize> = (0..n).filter(|e| !kept.contains(e)).collect();
        for pick in util::combinations(rest.len(), forest_size) {
            let forest: Vec<usize> = pick.iter().map(|&i| rest[i]).collect();
            let mut ds = DisjointSets::new(g.vertex_count());
            if !forest.iter().all(|&e| {
                let [a, b] = g.edge(e).ends;
                ds.union(a, b)
            }) {
                continue;
            }
            let (comp, count) = ds.labels();
            debug_assert_eq!(count, h.vertex_count());
            // quotient multigraph on components, kept edges only
            let q_ends: Vec<[usize; 2]> = kept
                .iter()
                .map(|&e| {
                    let [a, b] = g.edge(e).ends.map(|v| comp[v]);
                    [a.min(b), a.max(b)]
                })
                .collect();
            let mut q_mult = vec![vec![0u32; count]; count];
            for &[a, b] in &q_ends {
                q_mult[a][b] += 1;
                if a != b {
                    q_mult[b][a] += 1;
                }
            }
            for perm in vertex_bijections(&q_mult, &h_mult) {
                extend_to_arrows(g, h, &kept, &forest, &comp, &q_ends, &perm, &h_classes, &mut out);
            }
        }
    }
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    out.dedup();
    Ok(out)
}

/// Vertex bijections `q → h` preserving multiplicities.
fn vertex_bijections(q: &[Vec<u32>], h: &[Vec<u32>]) -> Vec<Vec<usize>> {
    fn go(v: usize, q: &[Vec<u32>], h: &[Vec<u32>], perm: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if v == q.len() {
            out.push(perm.clone());
            return;
        }
        for w in 0..h.len() {
            if used[w] || q[v][v] != h[w][w] {
                continue;
            }
            if (0..v).all(|u| q[u][v] == h[perm[u]][w]) {
                perm.push(w);
                used[w] = true;
                go(v + 1, q, h, perm, used, out);
                used[w] = false;
                perm.pop();
            }
        }
    }
    let mut out = Vec::new();
    if q.len() == h.len() {
        go(0, q, h, &mut Vec::new(), &mut vec![false; h.len()], &mut out);
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn extend_to_arrows(
    g: &Arc<Graph>,
    h: &Arc<Graph>,
    kept: &[usize],
    forest: &[usize],
    comp: &[usize],
    q_ends: &[[usize; 2]],
    perm: &[usize],
    h_classes: &BTreeMap<[usize; 2], Vec<usize>>,
    out: &mut Vec<MinorMorphism>,
) {
    let vertex_map: Vec<usize> = comp.iter().map(|&c| perm[c]).collect();
    let mut base = vec![Image::Star; g.arrow_count()];
    for &e in forest {
        let v = vertex_map[g.edge(e).ends[0]];
        base[2 * e] = Image::Vertex(v);
        base[2 * e + 1] = Image::Vertex(v);
    }
    // group kept edges by their target class
    let mut groups: BTreeMap<[usize; 2], Vec<usize>> = BTreeMap::new();
    for (k, &e) in kept.iter().enumerate() {
        let [a, b] = q_ends[k].map(|c| perm[c]);
        groups.entry([a.min(b), a.max(b)]).or_default().push(e);
    }
    let mut partial = vec![base];
    for (ends, members) in &groups {
        let targets = &h_classes[ends];
        let is_loop = ends[0] == ends[1];
        let flips: u32 = if is_loop { 1 << members.len() } else { 1 };
        let mut next = Vec::new();
        for bij in util::permutations(members.len()) {
            for mask in 0..flips {
                for arr in &partial {
                    let mut arr = arr.clone();
                    for (k, &src) in members.iter().enumerate() {
                        let dst = targets[bij[k]];
                        let img = if is_loop {
                            2 * dst + ((mask >> k) & 1) as usize
                        } else if h.tail(Arrow::forward(dst)) == vertex_map[g.tail(Arrow::forward(src))] {
                            2 * dst
                        } else {
                            2 * dst + 1
                        };
                        arr[2 * src] = Image::Arrow(img);
                        arr[2 * src + 1] = Image::Arrow(img ^ 1);
                    }
                    next.push(arr);
                }
            }
        }
        partial = next;
    }
    for arrow_map in partial {
        out.push(MinorMorphism::new_unchecked(g.clone(), h.clone(), vertex_map.clone(), arrow_map));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{standard_graph, StandardGraph};

    fn std_graph(kind: StandardGraph) -> Arc<Graph> {
        Arc::new(standard_graph(kind).unwrap())
    }

    fn single_edge() -> Arc<Graph> {
        Arc::new(Graph::new(&["u", "v"], &[("e", "u", "v")]).unwrap())
    }

    fn single_loop() -> Arc<Graph> {
        Arc::new(Graph::new(&["v"], &[("e", "v", "v")]).unwrap())
    }

    /// Every total map `V ⊔ A → V' ⊔ A' ⊔ {*}` with vertices to vertices,
    /// filtered by [`validate`].
    fn brute_force_count(g: &Arc<Graph>, h: &Arc<Graph>) -> usize {
        let vs = g.vertex_count();
        let arrow_choices: Vec<Image> = [Image::Star]
            .into_iter()
            .chain((0..h.vertex_count()).map(Image::Vertex))
            .chain((0..h.arrow_count()).map(Image::Arrow))
            .collect();
        let vertex_total = h.vertex_count().pow(vs as u32);
        let arrow_total = arrow_choices.len().pow(g.arrow_count() as u32);
        let mut count = 0;
        for vi in 0..vertex_total {
            let mut x = vi;
            let vertices: Vec<Image> = (0..vs)
                .map(|_| {
                    let v = x % h.vertex_count();
                    x /= h.vertex_count();
                    Image::Vertex(v)
                })
                .collect();
            for ai in 0..arrow_total {
                let mut y = ai;
                let arrows: Vec<Image> = (0..g.arrow_count())
                    .map(|_| {
                        let a = arrow_choices[y % arrow_choices.len()];
                        y /= arrow_choices.len();
                        a
                    })
                    .collect();
                let c = Candidate {
                    source: g.clone(),
                    target: h.clone(),
                    star: Image::Star,
                    vertices: vertices.clone(),
                    arrows,
                };
                count += validate(&c).is_empty() as usize;
            }
        }
        count
    }

    #[test]
    fn identity_validates() {
        let k3 = std_graph(StandardGraph::Complete(3));
        let id = MinorMorphism::identity(k3.clone());
        assert!(validate(&id.to_candidate()).is_empty());
        assert_eq!(id.edge_injection(), EdgeInjection::identity(3));
    }

    #[test]
    fn parallel_pair_contracted_breaks_tree_fibers() {
        let g = Arc::new(Graph::new(&["u", "v"], &[("a", "u", "v"), ("b", "u", "v")]).unwrap());
        let pt = Arc::new(Graph::point());
        let c = Candidate {
            source: g,
            target: pt,
            star: Image::Star,
            vertices: vec![Image::Vertex(0); 2],
            arrows: vec![Image::Vertex(0); 4],
        };
        let v = validate(&c);
        assert!(v.iter().any(|x| x.axiom == Axiom::TreeFibers), "{v:?}");
    }

    #[test]
    fn contracting_with_split_endpoints_is_rejected() {
        let g = single_edge();
        let h = Arc::new(Graph::new(&["x", "y"], &[("f", "x", "y")]).unwrap());
        let c = Candidate {
            source: g,
            target: h,
            star: Image::Star,
            vertices: vec![Image::Vertex(0), Image::Vertex(1)],
            arrows: vec![Image::Vertex(0); 2],
        };
        let v = validate(&c);
        assert!(v.iter().any(|x| x.axiom == Axiom::ContractedEndpoints), "{v:?}");
    }

    #[test]
    fn star_and_equivariance_violations() {
        let g = single_edge();
        let c = Candidate {
            source: g.clone(),
            target: g.clone(),
            star: Image::Vertex(0),
            vertices: vec![Image::Vertex(0), Image::Vertex(1)],
            arrows: vec![Image::Arrow(0), Image::Arrow(0)],
        };
        let axioms: Vec<Axiom> = validate(&c).iter().map(|v| v.axiom).collect();
        assert!(axioms.contains(&Axiom::StarFixed));
        assert!(axioms.contains(&Axiom::Equivariance));
        assert!(axioms.contains(&Axiom::UniqueArrowPreimage));
    }

    #[test]
    fn elementary_factories() {
        let k3 = std_graph(StandardGraph::Complete(3));
        let e = k3.edges()[0].id.clone();
        let (m, phi) = contract_edge(&k3, &e).unwrap();
        assert_eq!((m.vertex_count(), m.edge_count()), (2, 2));
        assert_eq!(m.edges()[0].ends, m.edges()[1].ends);
        let inj = phi.edge_injection();
        for (t, &s) in inj.map.iter().enumerate() {
            assert_eq!(m.edges()[t].id, k3.edges()[s].id);
        }

        let c3 = std_graph(StandardGraph::Cycle(3));
        let (p, _) = delete_edge(&c3, &c3.edges()[1].id.clone()).unwrap();
        assert_eq!((p.vertex_count(), p.edge_count()), (3, 2));

        let t = std_graph(StandardGraph::TwoStarTree(1, 1));
        assert!(matches!(delete_edge(&t, "c"), Err(Error::WouldDisconnect(_))));
        let l = single_loop();
        assert!(matches!(contract_edge(&l, "e"), Err(Error::ContractLoop(_))));
    }

    #[test]
    fn compose_checks_endpoints_and_injection() {
        let p3 = std_graph(StandardGraph::Path(3));
        let (m1, phi) = contract_edge(&p3, "e1").unwrap();
        let (_, psi) = contract_edge(&m1, "e2").unwrap();
        let comp = compose(&phi, &psi).unwrap();
        assert!(validate(&comp.to_candidate()).is_empty());
        assert_eq!(comp.edge_injection(), phi.edge_injection().after(&psi.edge_injection()));
        assert_eq!(compose(&phi, &MinorMorphism::identity(m1.clone())).unwrap(), phi);
        assert_eq!(compose(&psi, &phi), Err(Error::Mismatch));
    }

    #[test]
    fn known_counts() {
        let pt = Arc::new(Graph::point());
        let k3 = std_graph(StandardGraph::Complete(3));
        assert_eq!(enumerate(&k3, &pt).unwrap().len(), 3);
        assert_eq!(enumerate(&single_edge(), &single_edge()).unwrap().len(), 2);
        for n in 2..=5 {
            // K_5 has 10 edges, one over the default cap
            let k = std_graph(StandardGraph::Complete(n));
            assert_eq!(enumerate_with_limit(&k, &pt, 10).unwrap().len(), n.pow(n as u32 - 2));
        }
        let to_edge = enumerate(&k3, &single_edge()).unwrap();
        for phi in &to_edge {
            assert_eq!(phi.edge_injection().map.len(), 1);
        }
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let pt = Arc::new(Graph::point());
        let digon = std_graph(StandardGraph::Cycle(2));
        let p2 = std_graph(StandardGraph::Path(2));
        let lollipop = Arc::new(Graph::new(&["a", "b"], &[("x", "a", "b"), ("y", "b", "b")]).unwrap());
        let graphs = [pt, single_edge(), single_loop(), digon, p2, lollipop];
        for g in &graphs {
            for h in &graphs {
                let listed = enumerate(g, h).unwrap();
                assert_eq!(listed.len(), brute_force_count(g, h), "{g:?} -> {h:?}");
            }
        }
    }

    #[test]
    fn too_large() {
        let k5 = std_graph(StandardGraph::Complete(5));
        assert!(matches!(
            enumerate_with_limit(&k5, &Arc::new(Graph::point()), 9),
            Err(Error::TooLarge { .. })
        ));
    }
}
