//! Plain edge-list text, one item per line:
//!
//! ```text
//! # comment
//! a          isolated vertex
//! a b        edge with a generated id
//! e7 a b     edge with id e7
//! ```
//!
//! Equal endpoints give a loop; repeated pairs give parallel edges.

use gminor_core::util::label;
use gminor_core::Graph;

use crate::error::CliError;

pub fn parse_edge_list(text: &str) -> Result<Graph, CliError> {
    let mut vertices: Vec<String> = Vec::new();
    let mut edges: Vec<(Option<String>, String, String)> = Vec::new();
    let add_vertex = |v: &str, vertices: &mut Vec<String>| {
        if !vertices.iter().any(|x| x == v) {
            vertices.push(v.to_string());
        }
    };
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            [v] => add_vertex(v, &mut vertices),
            [u, v] => {
                add_vertex(u, &mut vertices);
                add_vertex(v, &mut vertices);
                edges.push((None, u.to_string(), v.to_string()));
            }
            [id, u, v] => {
                add_vertex(u, &mut vertices);
                add_vertex(v, &mut vertices);
                edges.push((Some(id.to_string()), u.to_string(), v.to_string()));
            }
            _ => return Err(CliError::Config(format!("line {}: expected 1 to 3 fields", n + 1))),
        }
    }
    let total = edges.len();
    let specs: Vec<(String, String, String)> = edges
        .into_iter()
        .enumerate()
        .map(|(i, (id, u, v))| (id.unwrap_or_else(|| label("e", i, total)), u, v))
        .collect();
    Ok(Graph::new(&vertices, &specs)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loops_parallels_and_ids() {
        let g = parse_edge_list("# theta with a loop\na b\na b\nx b b\nc a\n").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 4));
        assert!(g.edge(g.edge_index("x").unwrap()).is_loop());
        assert_eq!(g.genus(), 2);
    }

    #[test]
    fn rejects_long_lines() {
        assert!(parse_edge_list("a b c d").is_err());
        assert!(parse_edge_list("a b\nc d").is_err());
    }
}
