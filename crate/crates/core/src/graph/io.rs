//! Whitespace-separated edge-list text format.
//!
//! One `u v` pair per line; blank lines and lines starting with `#` are
//! skipped. Output is canonical: `u < v`, lines sorted, `\n` terminated.

use std::fs::File;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::Path;

use super::{Graph, NodeId};
use crate::error::{Error, Result};

/// Reads the raw `(u, v)` pairs, checking only line syntax.
pub fn read_edge_pairs<R: Read>(reader: R) -> Result<Vec<(NodeId, NodeId)>> {
    let mut edges = Vec::new();
    for (idx, line) in BufReader::new(reader).lines().enumerate() {
        let line = line?;
        let number = idx + 1;
        let body = line.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let mut tokens = body.split_whitespace();
        let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(Error::Parse {
                line: number,
                message: format!("expected two node ids, found {body:?}"),
            });
        };
        let parse = |tok: &str| {
            tok.parse::<NodeId>().map_err(|_| Error::Parse {
                line: number,
                message: format!("{tok:?} is not a nonnegative integer node id"),
            })
        };
        edges.push((parse(a)?, parse(b)?));
    }
    Ok(edges)
}

/// Parses an edge list into a graph with `1 + max id` nodes.
pub fn parse_edge_list<R: Read>(reader: R) -> Result<Graph> {
    let edges = read_edge_pairs(reader)?;
    Graph::from_edge_list(&edges)
}

pub fn load_edge_list(path: impl AsRef<Path>) -> Result<Graph> {
    parse_edge_list(File::open(path)?)
}

/// Writes each `(u, v)` as one line after canonicalizing to `u < v` and sorting.
pub fn write_edge_list<W: Write>(
    mut out: W,
    edges: impl IntoIterator<Item = (NodeId, NodeId)>,
) -> Result<()> {
    let mut lines: Vec<_> = edges
        .into_iter()
        .map(|(u, v)| (u.min(v), u.max(v)))
        .collect();
    lines.sort_unstable();
    for (u, v) in lines {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

impl Graph {
    /// Canonical edge-list text.
    pub fn to_edge_list_string(&self) -> String {
        let mut buf = Vec::new();
        write_edge_list(&mut buf, self.edges()).expect("writing to memory");
        String::from_utf8(buf).expect("ascii output")
    }
}
