//! The `.hg` text format and named graph specifications.
//!
//! ```text
//! # comment lines start with '#'
//! 6 3
//! 0 1 3
//! 0 2 4
//! 1 2 5
//! ```
//!
//! The first non-comment line holds `n r`; each later line holds one edge as
//! `r` zero-based vertex indices. Blank lines are ignored.

use std::fmt::Write as _;

use crate::constructions::book_graph;
use crate::error::{Error, Result};
use crate::hypergraph::{Graph, UniformHypergraph};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn numbers(line: usize, text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|tok| tok.parse::<usize>().map_err(|_| parse_err(line, format!("expected a vertex index, found {tok:?}"))))
        .collect()
}

pub fn parse_hg(text: &str) -> Result<UniformHypergraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, Vec<usize>)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let nums = numbers(line, body)?;
        match header {
            None => {
                let [n, r] = nums[..] else {
                    return Err(parse_err(line, "header must be `n r`"));
                };
                header = Some((n, r));
            }
            Some((_, r)) => {
                if nums.len() != r {
                    return Err(parse_err(line, format!("edge has {} vertices, expected {r}", nums.len())));
                }
                edges.push((line, nums));
            }
        }
    }
    let Some((n, r)) = header else {
        return Err(parse_err(0, "missing `n r` header"));
    };
    UniformHypergraph::empty(n, r).map_err(|e| parse_err(0, e.to_string()))?;
    for (line, edge) in &edges {
        UniformHypergraph::new(n, r, [edge]).map_err(|e| parse_err(*line, e.to_string()))?;
    }
    UniformHypergraph::new(n, r, edges.iter().map(|(_, e)| e))
}

/// Renders `h` in `.hg` form; edges appear in lexicographic order.
pub fn write_hg(h: &UniformHypergraph) -> String {
    let mut out = format!("{} {}\n", h.n(), h.r());
    for e in h.edges() {
        let line: Vec<String> = e.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

/// Reads a named graph: `K<n>`, `C<n>`, `P<n>` (path on `n` vertices),
/// `S<n>` (star with `n` leaves), `M<n>` (`n` disjoint edges), `B<k>` (two
/// `K_{k+1}` sharing a vertex) or `K<a>,<b>`.
pub fn parse_graph_spec(spec: &str) -> Result<Graph> {
    let bad = || Error::BadParameters(format!("unknown graph {spec:?}; try K4, C5, P3, S3, M2, B2 or K2,3"));
    let s = spec.trim();
    let mut chars = s.chars();
    let kind = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
    let rest = chars.as_str();
    if kind == 'K' {
        if let Some((a, b)) = rest.split_once(',') {
            let a = a.trim().parse().map_err(|_| bad())?;
            let b = b.trim().parse().map_err(|_| bad())?;
            return Graph::complete_bipartite(a, b);
        }
    }
    let num: usize = rest.parse().map_err(|_| bad())?;
    match kind {
        'K' => Graph::complete(num),
        'C' => Graph::cycle(num),
        'P' => Graph::path(num),
        'S' => Graph::star(num),
        'M' => Graph::matching(num),
        'B' => book_graph(num),
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let h = UniformHypergraph::new(6, 3, [[0, 1, 3], [0, 2, 4], [1, 2, 5]]).unwrap();
        let text = write_hg(&h);
        assert_eq!(text, "6 3\n0 1 3\n0 2 4\n1 2 5\n");
        assert_eq!(parse_hg(&text).unwrap(), h);
    }

    #[test]
    fn comments_and_blanks() {
        let h = parse_hg("# a triangle\n\n3 2\n0 1\n# middle\n1 2\n\n0 2\n").unwrap();
        assert_eq!(h.edge_count(), 3);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert!(matches!(parse_hg("3 2\n0 1\n0 x\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_hg("3 2\n0 1 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_hg("# only\n3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_hg("3 2\n0 5\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_hg("3 2\n1 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_hg(""), Err(Error::Parse { line: 0, .. })));
    }

    #[test]
    fn graph_specs() {
        assert_eq!(parse_graph_spec("K4").unwrap().edge_count(), 6);
        assert_eq!(parse_graph_spec("c5").unwrap().edge_count(), 5);
        assert_eq!(parse_graph_spec("P3").unwrap().edge_count(), 2);
        assert_eq!(parse_graph_spec("S3").unwrap().n(), 4);
        assert_eq!(parse_graph_spec("M2").unwrap().n(), 4);
        assert_eq!(parse_graph_spec("B2").unwrap().edge_count(), 6);
        assert_eq!(parse_graph_spec("K2,3").unwrap().edge_count(), 6);
        assert!(parse_graph_spec("Q3").is_err());
        assert!(parse_graph_spec("").is_err());
    }
}
