//! Plain-text edge-list format.
//!
//! Line 1 holds the vertex count `n`. Every following non-empty line that
//! does not start with `#` holds one edge `u v` with `0 <= u < v < n`.
//! Files are UTF-8 with `\n` line endings; a trailing `\r` is tolerated on
//! input. [`serialize_edge_list`] emits the canonical form: header first,
//! edges ascending, no comments.

use std::collections::HashSet;

use thiserror::Error;

use crate::graph::{FamilySpec, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: expected the vertex count, found `{token}`")]
    BadHeader { line: usize, token: String },
    #[error("missing header line with the vertex count")]
    MissingHeader,
    #[error("line {line}: expected `u v`, found `{content}`")]
    Malformed { line: usize, content: String },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: edge endpoints must satisfy u < v (got {u} {v})")]
    NotAscending { line: usize, u: usize, v: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    Duplicate { line: usize, u: usize, v: usize },
    #[error("line {line}: vertex {vertex} out of range for order {n}")]
    OutOfRange { line: usize, vertex: usize, n: usize },
}

/// Parses the edge-list format, naming the offending line on error.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen: HashSet<(usize, usize)> = HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim_end_matches('\r').trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let Some(order) = n else {
            n = Some(content.parse().map_err(|_| ParseError::BadHeader {
                line,
                token: content.to_string(),
            })?);
            continue;
        };
        let mut it = content.split_whitespace();
        let (a, b, rest) = (it.next(), it.next(), it.next());
        let (Some(a), Some(b), None) = (a, b, rest) else {
            return Err(ParseError::Malformed {
                line,
                content: content.to_string(),
            });
        };
        let parse = |t: &str| {
            t.parse::<usize>().map_err(|_| ParseError::Malformed {
                line,
                content: content.to_string(),
            })
        };
        let (u, v) = (parse(a)?, parse(b)?);
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        if u > v {
            return Err(ParseError::NotAscending { line, u, v });
        }
        if v >= order {
            return Err(ParseError::OutOfRange {
                line,
                vertex: v,
                n: order,
            });
        }
        if !seen.insert((u, v)) {
            return Err(ParseError::Duplicate { line, u, v });
        }
        edges.push((u, v));
    }

    let n = n.ok_or(ParseError::MissingHeader)?;
    // All constraints were checked line by line, so this cannot fail.
    Ok(Graph::from_edges(n, edges)
        .expect("validated edge list")
        .with_family(FamilySpec::Explicit))
}

/// Serializes a graph in canonical edge-list form.
pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&g.n().to_string());
    out.push('\n');
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_family;

    #[test]
    fn parses_a_path_with_comments_and_blanks() {
        let text = "3\n# a comment\n0 1\n\n1 2\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 2));
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
        assert_eq!(g.family(), Some(FamilySpec::Explicit));
    }

    #[test]
    fn errors_name_the_line() {
        assert_eq!(
            parse_edge_list("3\n0 0\n").unwrap_err(),
            ParseError::SelfLoop { line: 2, vertex: 0 }
        );
        assert_eq!(
            parse_edge_list("3\n0 1\n# c\n1 0\n").unwrap_err(),
            ParseError::NotAscending { line: 4, u: 1, v: 0 }
        );
        assert_eq!(
            parse_edge_list("2\n0 1\n0 1\n").unwrap_err(),
            ParseError::Duplicate { line: 3, u: 0, v: 1 }
        );
        assert_eq!(
            parse_edge_list("2\n0 5\n").unwrap_err(),
            ParseError::OutOfRange { line: 2, vertex: 5, n: 2 }
        );
        assert_eq!(
            parse_edge_list("two\n").unwrap_err(),
            ParseError::BadHeader { line: 1, token: "two".into() }
        );
        assert_eq!(parse_edge_list("# only comments\n").unwrap_err(), ParseError::MissingHeader);
    }

    #[test]
    fn round_trips_canonical_form() {
        let c4 = build_family(&crate::graph::FamilySpec::Cycle(4)).unwrap();
        let text = serialize_edge_list(&c4);
        assert_eq!(text, "4\n0 1\n0 3\n1 2\n2 3\n");
        let back = parse_edge_list(&text).unwrap();
        assert_eq!(back.n(), c4.n());
        assert_eq!(back.edges().collect::<Vec<_>>(), c4.edges().collect::<Vec<_>>());
    }
}
