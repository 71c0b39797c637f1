//! File formats: graphs, complexes and morphisms as JSON.

use std::collections::BTreeMap;
use std::sync::Arc;

use gminor_core::complex::SimplicialComplex;
use gminor_core::graph::Arrow;
use gminor_core::minors::{Candidate, Image, MinorMorphism};
use gminor_core::Graph;
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub id: String,
    pub ends: [String; 2],
}

/// `{"vertices": [...], "edges": [{"id", "ends"}]}`, both sorted by id.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeJson>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        let mut vertices = g.vertices().to_vec();
        vertices.sort();
        let mut edges: Vec<EdgeJson> = g
            .edges()
            .iter()
            .map(|e| EdgeJson {
                id: e.id.clone(),
                ends: [g.vertices()[e.ends[0]].clone(), g.vertices()[e.ends[1]].clone()],
            })
            .collect();
        edges.sort_by(|a, b| a.id.cmp(&b.id));
        GraphJson { vertices, edges }
    }

    pub fn to_graph(&self) -> Result<Graph, CliError> {
        let specs: Vec<(String, String, String)> = self
            .edges
            .iter()
            .map(|e| (e.id.clone(), e.ends[0].clone(), e.ends[1].clone()))
            .collect();
        Ok(Graph::new(&self.vertices, &specs)?)
    }
}

/// `{"ground": [...], "facets": [[...]]}` with labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub ground: Vec<String>,
    pub facets: Vec<Vec<String>>,
}

impl ComplexJson {
    pub fn from_complex(c: &SimplicialComplex) -> Self {
        ComplexJson {
            ground: c.ground().to_vec(),
            facets: c.facet_labels(),
        }
    }

    pub fn to_complex(&self) -> Result<SimplicialComplex, CliError> {
        Ok(SimplicialComplex::from_labels(&self.ground, &self.facets)?)
    }
}

/// Edge images are a target edge id, `"*"` (deleted) or a target vertex id
/// (contracted there). Arrow directions follow the vertex map; `reversed`
/// lists kept edges whose forward arrow goes to the backward target arrow,
/// which only matters when the vertex map cannot tell (loops).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismJson {
    pub vertex_map: BTreeMap<String, String>,
    pub edge_map: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub reversed: Vec<String>,
}

impl MorphismJson {
    pub fn from_morphism(phi: &MinorMorphism) -> Self {
        let (g, h) = (phi.source(), phi.target());
        let vertex_map = (0..g.vertex_count())
            .map(|v| (g.vertices()[v].clone(), h.vertices()[phi.vertex_image(v)].clone()))
            .collect();
        let mut edge_map = BTreeMap::new();
        let mut reversed = Vec::new();
        for (i, e) in g.edges().iter().enumerate() {
            let image = match phi.arrow_image(2 * i) {
                Image::Star => "*".to_string(),
                Image::Vertex(v) => h.vertices()[v].clone(),
                Image::Arrow(a) => {
                    if a != default_arrow(g, h, phi.vertex_map(), i, a / 2) {
                        reversed.push(e.id.clone());
                    }
                    h.edge(a / 2).id.clone()
                }
            };
            edge_map.insert(e.id.clone(), image);
        }
        reversed.sort();
        MorphismJson {
            vertex_map,
            edge_map,
            reversed,
        }
    }

    /// The unchecked map; validate it with [`gminor_core::minors::validate`].
    pub fn to_candidate(&self, g: &Arc<Graph>, h: &Arc<Graph>) -> Result<Candidate, CliError> {
        let mut vertices = vec![Image::Star; g.vertex_count()];
        for (v, w) in &self.vertex_map {
            vertices[g.vertex_index(v)?] = Image::Vertex(h.vertex_index(w)?);
        }
        if let Some(missing) = g.vertices().iter().find(|v| !self.vertex_map.contains_key(*v)) {
            return Err(CliError::Config(format!("vertex `{missing}` has no image")));
        }
        let vmap: Vec<usize> = vertices
            .iter()
            .map(|i| match i {
                Image::Vertex(v) => *v,
                _ => unreachable!(),
            })
            .collect();
        let mut arrows = vec![Image::Star; g.arrow_count()];
        for (i, e) in g.edges().iter().enumerate() {
            let Some(image) = self.edge_map.get(&e.id) else {
                return Err(CliError::Config(format!("edge `{}` has no image", e.id)));
            };
            let (fwd, bwd) = if image == "*" {
                (Image::Star, Image::Star)
            } else if let Ok(j) = h.edge_index(image) {
                let mut a = default_arrow(g, h, &vmap, i, j);
                if self.reversed.contains(&e.id) {
                    a ^= 1;
                }
                (Image::Arrow(a), Image::Arrow(a ^ 1))
            } else {
                let v = h.vertex_index(image)?;
                (Image::Vertex(v), Image::Vertex(v))
            };
            arrows[2 * i] = fwd;
            arrows[2 * i + 1] = bwd;
        }
        for e in self.edge_map.keys() {
            g.edge_index(e)?;
        }
        Ok(Candidate {
            source: g.clone(),
            target: h.clone(),
            star: Image::Star,
            vertices,
            arrows,
        })
    }
}

/// Target arrow of edge `j` that the forward arrow of source edge `i`
/// goes to when directions are read off the vertex map.
fn default_arrow(g: &Graph, h: &Graph, vmap: &[usize], i: usize, j: usize) -> usize {
    let fwd = Arrow::forward(i);
    let target = Arrow::forward(j);
    let agrees = vmap[g.tail(fwd)] == h.tail(target) && vmap[g.head(fwd)] == h.head(target);
    if agrees {
        target.0
    } else {
        target.sigma().0
    }
}

/// Integers that fit in `u64` as JSON numbers, larger ones as strings.
pub fn big(n: &BigUint) -> Value {
    match u64::try_from(n) {
        Ok(x) => Value::from(x),
        Err(_) => Value::from(n.to_string()),
    }
}

/// Accepts a bare document or a report whose `result` holds it.
pub fn unwrap_result(v: Value) -> Value {
    match v {
        Value::Object(mut m) if m.contains_key("result") && m.contains_key("tool") => m.remove("result").unwrap(),
        other => other,
    }
}
