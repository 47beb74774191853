//! Plain-text edge lists: one `u v` pair per line, 0-based.
//!
//! Blank lines and lines starting with `#` are ignored. A line holding a
//! single vertex id declares that vertex without adding an edge, which is how
//! trailing isolated vertices survive a round trip.

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n = 0usize;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |reason: String| Error::EdgeList {
            line: idx + 1,
            reason,
        };
        let ids = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| err(format!("`{tok}` is not a vertex id")))
            })
            .collect::<Result<Vec<_>>>()?;
        match ids.as_slice() {
            [v] => n = n.max(v + 1),
            [u, v] if u == v => return Err(err(format!("loop at vertex {u}"))),
            [u, v] => {
                n = n.max(u + 1).max(v + 1);
                edges.push((*u, *v));
            }
            _ => return Err(err(format!("expected `u v`, found {} ids", ids.len()))),
        }
    }
    Graph::new(n, edges)
}

/// One line per edge in sorted order, then one line per isolated vertex.
pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    for v in g.isolated_vertices() {
        out.push_str(&format!("{v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn parses_with_blank_lines_and_comments() {
        let g = parse_edge_list("# triangle\n0 1\n\n1 2\n2 0\n").unwrap();
        assert_eq!(g, cycle(3));
    }

    #[test]
    fn isolated_vertices_round_trip() {
        let g = cycle_plus_isolated();
        let text = serialize_edge_list(&g);
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn reports_line_numbers() {
        match parse_edge_list("0 1\n2 x\n") {
            Err(Error::EdgeList { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!(parse_edge_list("3 3\n").is_err());
        assert!(parse_edge_list("1 2 3\n").is_err());
    }
}
