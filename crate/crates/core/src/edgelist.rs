//! Plain-text edge lists: a header line `n m`, then `m` lines `u v` with
//! 0-based ids. Everything after `#` on a line is ignored, as are blank lines.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut fields = line.split_whitespace().map(|tok| {
        tok.parse::<usize>()
            .map_err(|_| Error::MalformedEdgeList(format!("line {lineno}: bad integer {tok:?}")))
    });
    match (fields.next(), fields.next(), fields.next()) {
        (Some(a), Some(b), None) => Ok((a?, b?)),
        _ => Err(Error::MalformedEdgeList(format!(
            "line {lineno}: expected two integers"
        ))),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.split('#').next().unwrap_or("").trim()))
        .filter(|(_, line)| !line.is_empty());
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| Error::MalformedEdgeList("missing header".into()))?;
    let (n, m) = parse_pair(header, lineno)?;
    let edges = lines
        .map(|(lineno, line)| parse_pair(line, lineno))
        .collect::<Result<Vec<_>>>()?;
    if edges.len() != m {
        return Err(Error::MalformedEdgeList(format!(
            "header declares {m} edges, found {}",
            edges.len()
        )));
    }
    let g = Graph::from_edges(n, &edges)?;
    if g.edge_count() != m {
        return Err(Error::MalformedEdgeList("duplicate edges".into()));
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_edge_list("# triangle\n3 3\n0 1\n1 2 # last\n\n0 2\n").unwrap();
        assert_eq!(g, Graph::complete(3));
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 x\n").is_err());
        assert!(parse_edge_list("3 2\n0 1\n1 0\n").is_err());
        assert!(matches!(
            parse_edge_list("2 1\n0 5\n"),
            Err(Error::InvalidGraph(_))
        ));
    }
}
