//! Path covers and families of edge-disjoint path covers.
//!
//! A family is built by splitting the vertex set into `b` parts, walking each
//! directed Hamilton path `Q` of the complete digraph on the parts, and chaining
//! matchings between consecutive parts of `Q` into paths.

mod family;
mod walecki;

pub use family::{build_path_cover_family, matchings_to_path_cover, PathCoverOutcome, PARTITION_RETRIES};
pub use walecki::{complete_digraph_path_decomposition, HamPathDecomposition};

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, OrientedGraph};
use crate::matching::MatchingError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PathCoverError {
    #[error("order {0} is odd; the path decomposition needs an even order")]
    OddOrder(usize),
    #[error("{b} parts do not fit {n} vertices (need 2 <= b <= n/2)")]
    PartsTooSmall { b: usize, n: usize },
    #[error("vertex {0} lies in more than one part")]
    PartsOverlap(usize),
    #[error("matching {index} has edge ({edge:?}) outside its parts")]
    MatchingOutOfParts { index: usize, edge: Edge },
    #[error("{matchings} matchings for {parts} parts")]
    TooManyMatchings { matchings: usize, parts: usize },
    #[error("matching {0} shares an endpoint between two edges")]
    NotAMatching(usize),
    #[error("size bound {a} is below the best achievable cover size {best} for path {q}")]
    BoundTooSmall { a: usize, best: usize, q: usize },
    #[error("no cover meets the quotas; pair {pair:?} supplied {achieved} of {required}")]
    QuotaUnreachable { achieved: usize, required: usize, pair: (usize, usize) },
    #[error(transparent)]
    Matching(#[from] MatchingError),
}

/// A directed path given by its vertex sequence. A single vertex is a path of length 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DirectedPath {
    pub vertices: Vec<usize>,
}

impl DirectedPath {
    pub fn new(vertices: Vec<usize>) -> Self {
        assert!(!vertices.is_empty(), "a path has at least one vertex");
        DirectedPath { vertices }
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    /// Distinct vertices joined by edges of `g`.
    pub fn is_valid_in(&self, g: &OrientedGraph) -> bool {
        let mut seen = HashSet::new();
        self.vertices.iter().all(|&v| v < g.n() && seen.insert(v)) && self.edges().all(|(u, v)| g.has_edge(u, v))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathCover {
    pub paths: Vec<DirectedPath>,
}

impl PathCover {
    pub fn size(&self) -> usize {
        self.paths.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.paths.iter().flat_map(|p| p.edges())
    }

    /// Vertex-disjoint paths of `g` covering every vertex of `g`, at most `a` of them.
    pub fn is_valid_in(&self, g: &OrientedGraph, a: usize) -> bool {
        let mut seen = vec![false; g.n()];
        let mut count = 0;
        for p in &self.paths {
            if !p.is_valid_in(g) {
                return false;
            }
            for &v in &p.vertices {
                if seen[v] {
                    return false;
                }
                seen[v] = true;
                count += 1;
            }
        }
        count == g.n() && self.size() <= a
    }
}

/// `t` pairwise edge-disjoint path covers, each with at most `a` paths.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathCoverFamily {
    pub covers: Vec<PathCover>,
    pub a: usize,
    pub t: usize,
}

impl PathCoverFamily {
    pub fn is_valid_in(&self, g: &OrientedGraph) -> bool {
        let mut used = HashSet::new();
        self.covers.len() == self.t
            && self.covers.iter().all(|c| c.is_valid_in(g, self.a) && c.edges().all(|e| used.insert(e)))
    }

    /// The union subgraph on the host's vertex set.
    pub fn union_graph(&self, n: usize) -> OrientedGraph {
        OrientedGraph::from_trusted(n, self.covers.iter().flat_map(|c| c.edges()))
    }
}
