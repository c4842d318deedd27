//! The plain-text graph file format: comment lines starting with '#', an
//! "n m" header, then exactly m "u v" edge lines with 0-based ids. Parsing
//! tolerates blank lines and extra whitespace but keeps edge order.

use eds_core::{BipartiteGraph, GraphError};
use std::fmt;
use std::fmt::Write as _;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    /// No "n m" line before end of input.
    MissingHeader,
    /// A data line that does not consist of exactly two integers.
    BadLine { line: usize },
    /// Fewer edge lines than the header promised.
    MissingEdges { expected: usize, found: usize },
    /// A data line after the last promised edge.
    TrailingData { line: usize },
    /// The edge list was rejected while building the graph.
    Graph(GraphError),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::MissingHeader => write!(f, "missing \"n m\" header line"),
            ParseError::BadLine { line } => {
                write!(f, "line {line}: expected two integers")
            }
            ParseError::MissingEdges { expected, found } => {
                write!(f, "found {found} edge lines, header promised {expected}")
            }
            ParseError::TrailingData { line } => {
                write!(f, "line {line}: data after the last promised edge")
            }
            ParseError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ParseError {}

pub fn parse_graph(text: &str) -> Result<BipartiteGraph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let nums: Option<Vec<usize>> =
            t.split_whitespace().map(|w| w.parse().ok()).collect();
        let pair = match nums.as_deref() {
            Some(&[a, b]) => (a, b),
            _ => return Err(ParseError::BadLine { line }),
        };
        match header {
            None => header = Some(pair),
            Some((_, m)) => {
                if edges.len() == m {
                    return Err(ParseError::TrailingData { line });
                }
                edges.push(pair);
            }
        }
    }
    let (n, m) = header.ok_or(ParseError::MissingHeader)?;
    if edges.len() < m {
        return Err(ParseError::MissingEdges { expected: m, found: edges.len() });
    }
    BipartiteGraph::from_edge_list(n, &edges).map_err(ParseError::Graph)
}

pub fn write_graph(g: &BipartiteGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Space-separated vertex ids, as in `--set` arguments and solution sidecars.
pub fn parse_id_list(text: &str) -> Option<Vec<usize>> {
    text.split_whitespace().map(|w| w.parse().ok()).collect()
}

#[cfg(test)]
mod test {
    use super::*;
    use eds_core::generate::gen_random;

    #[test]
    fn round_trip_preserves_structure() {
        for seed in 0..20 {
            let g = gen_random(6, 7, 0.4, seed);
            let back = parse_graph(&write_graph(&g)).unwrap();
            assert_eq!(back.n(), g.n());
            assert_eq!(back.edges(), g.edges());
        }
    }

    #[test]
    fn comments_and_whitespace_are_tolerated() {
        let text = "# a path\n\n  4   3\n0 1\n  # middle note\n1\t2\n 2   3 \n\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn header_errors() {
        assert_eq!(parse_graph(""), Err(ParseError::MissingHeader));
        assert_eq!(parse_graph("# only comments\n"), Err(ParseError::MissingHeader));
        assert_eq!(parse_graph("4\n"), Err(ParseError::BadLine { line: 1 }));
        assert_eq!(parse_graph("4 3 9\n"), Err(ParseError::BadLine { line: 1 }));
        assert_eq!(parse_graph("four three\n"), Err(ParseError::BadLine { line: 1 }));
    }

    #[test]
    fn edge_count_errors() {
        assert_eq!(
            parse_graph("4 3\n0 1\n1 2\n"),
            Err(ParseError::MissingEdges { expected: 3, found: 2 })
        );
        assert_eq!(
            parse_graph("4 1\n0 1\n1 2\n"),
            Err(ParseError::TrailingData { line: 3 })
        );
    }

    #[test]
    fn graph_errors_pass_through() {
        match parse_graph("3 3\n0 1\n1 2\n0 2\n") {
            Err(ParseError::Graph(GraphError::NotBipartite { .. })) => {}
            other => panic!("expected odd cycle rejection, got {other:?}"),
        }
        match parse_graph("2 1\n0 5\n") {
            Err(ParseError::Graph(GraphError::VertexOutOfRange { vertex: 5, n: 2 })) => {}
            other => panic!("expected range rejection, got {other:?}"),
        }
    }

    #[test]
    fn id_lists() {
        assert_eq!(parse_id_list("3 1 2"), Some(vec![3, 1, 2]));
        assert_eq!(parse_id_list("  "), Some(vec![]));
        assert_eq!(parse_id_list("1 x"), None);
    }
}
