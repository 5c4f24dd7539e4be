use std::fmt;
use std::fs;
use std::io::{self, Read};
use std::path::Path;

use mycdist_core::edgelist::parse_edge_list;
use mycdist_core::graph6::parse_graph6;
use mycdist_core::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum GraphFormat {
    #[default]
    Graph6,
    Edges,
}

#[derive(Debug)]
pub enum InputError {
    Io(io::Error),
    Parse(mycdist_core::Error),
    Count(usize),
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputError::Io(e) => write!(f, "cannot read input: {e}"),
            InputError::Parse(e) => write!(f, "{e}"),
            InputError::Count(0) => f.write_str("input contains no graph"),
            InputError::Count(n) => write!(f, "expected one graph, input contains {n}"),
        }
    }
}

impl std::error::Error for InputError {}

/// Reads a file, or standard input when `path` is `None` or `-`.
pub fn read_source(path: Option<&Path>) -> io::Result<String> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p),
        _ => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text)?;
            Ok(text)
        }
    }
}

/// Non-blank lines of a graph6 file, trimmed.
pub fn graph6_records(text: &str) -> impl Iterator<Item = &str> {
    text.lines().map(str::trim).filter(|line| !line.is_empty())
}

/// Parses exactly one graph from `text`.
pub fn parse_single(text: &str, format: GraphFormat) -> Result<Graph, InputError> {
    match format {
        GraphFormat::Edges => parse_edge_list(text).map_err(InputError::Parse),
        GraphFormat::Graph6 => {
            let records: Vec<&str> = graph6_records(text).collect();
            match records.as_slice() {
                [line] => parse_graph6(line.as_bytes()).map_err(InputError::Parse),
                other => Err(InputError::Count(other.len())),
            }
        }
    }
}

pub fn read_graph(path: Option<&Path>, format: GraphFormat) -> Result<Graph, InputError> {
    parse_single(&read_source(path).map_err(InputError::Io)?, format)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_graph() {
        assert_eq!(
            parse_single("A_\n", GraphFormat::Graph6).unwrap(),
            Graph::complete(2)
        );
        assert_eq!(
            parse_single("2 1\n0 1\n", GraphFormat::Edges).unwrap(),
            Graph::complete(2)
        );
        assert!(matches!(
            parse_single("\n", GraphFormat::Graph6),
            Err(InputError::Count(0))
        ));
        assert!(matches!(
            parse_single("A_\nBw\n", GraphFormat::Graph6),
            Err(InputError::Count(2))
        ));
        assert!(matches!(
            parse_single("A", GraphFormat::Graph6),
            Err(InputError::Parse(_))
        ));
    }
}
