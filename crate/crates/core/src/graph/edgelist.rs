//! Plain-text edge lists:
//!
//! ```text
//! og <n> <m>
//! <u> <v>      (m lines, directed u -> v)
//! ```
//!
//! Blank lines and lines starting with `#` are skipped by the reader.

use std::fmt::Write as _;
use std::io::BufRead;

use sha2::{Digest, Sha256};

use super::{GraphError, OrientedGraph};

/// Canonical serialization: header then edges in lexicographic order.
pub fn to_string(g: &OrientedGraph) -> String {
    let mut s = String::with_capacity(16 + 12 * g.edge_count());
    writeln!(s, "og {} {}", g.n(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

pub fn parse(text: &str) -> Result<OrientedGraph, GraphError> {
    read(text.as_bytes())
}

pub fn read(reader: impl BufRead) -> Result<OrientedGraph, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let parse_err = |message: &str| GraphError::Parse { line: lineno, message: message.to_string() };
        match header {
            None => {
                if fields.len() != 3 || fields[0] != "og" {
                    return Err(parse_err("expected header `og <n> <m>`"));
                }
                let n = fields[1].parse().map_err(|_| parse_err("bad vertex count"))?;
                let m = fields[2].parse().map_err(|_| parse_err("bad edge count"))?;
                header = Some((n, m));
            }
            Some(_) => {
                if fields.len() != 2 {
                    return Err(parse_err("expected `<u> <v>`"));
                }
                let u = fields[0].parse().map_err(|_| parse_err("bad vertex label"))?;
                let v = fields[1].parse().map_err(|_| parse_err("bad vertex label"))?;
                edges.push((u, v));
            }
        }
    }
    let (n, m) = header.ok_or(GraphError::Parse { line: 0, message: "missing header".into() })?;
    if edges.len() != m {
        return Err(GraphError::Parse {
            line: 0,
            message: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    OrientedGraph::new(n, edges)
}

/// Hex SHA-256 of the canonical serialization.
pub fn sha256_hex(g: &OrientedGraph) -> String {
    hex::encode(Sha256::digest(to_string(g).as_bytes()))
}
