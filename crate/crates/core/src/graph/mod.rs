//! Oriented graphs (no loops, no antiparallel pairs) and the bipartite graphs
//! carved out of them.
//!
//! Vertices are dense labels `0..n`. Derived graphs ([`Subgraph`],
//! [`BipartiteGraph`]) keep an explicit label map back to their parent so that
//! structures found in a subproblem lift to the host without renumbering.

mod bipartite;
pub mod edgelist;
pub mod generators;

pub use bipartite::{bipartite_between, bipartite_between_unbalanced, BipartiteGraph};
pub use generators::{
    directed_cycle, random_oriented, rotational_tournament, transitive_tournament, RandomKind,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Edge = (usize, usize);

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    EmptyVertexSet,
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("antiparallel pair {0}->{1} and {1}->{0}")]
    AntiparallelPair(usize, usize),
    #[error("duplicate edge {0}->{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("order {0} is even; a regular tournament needs odd order")]
    EvenOrder(usize),
    #[error("order {0} is too small")]
    OrderTooSmall(usize),
    #[error("degree {r} exceeds the oriented maximum {max}")]
    DegreeTooLarge { r: usize, max: usize },
    #[error("random generation failed after {attempts} attempts (seed {seed})")]
    GenerationFailed { seed: u64, attempts: usize },
    #[error("vertex {0} lies on both sides")]
    OverlappingSides(usize),
    #[error("sides have unequal sizes {left} and {right}")]
    UnequalSides { left: usize, right: usize },
    #[error("edge {0}->{1} is not in the graph")]
    UnknownEdge(usize, usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Semi-degree statistics of an oriented graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSummary {
    pub min_out: usize,
    pub min_in: usize,
    pub max_out: usize,
    pub max_in: usize,
    /// `δ⁰ = min(δ⁺, δ⁻)`
    pub min_semi: usize,
    /// `Δ⁰ = max(Δ⁺, Δ⁻)`
    pub max_semi: usize,
}

/// A simple digraph without loops or antiparallel edges.
///
/// Out- and in-neighbour lists are sorted; a bit matrix gives O(1) membership.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedGraph {
    n: usize,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    words: usize,
    bits: Vec<u64>,
    edge_count: usize,
}

impl OrientedGraph {
    /// Builds and validates an oriented graph from an edge list.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyVertexSet);
        }
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.try_insert(u, v)?;
        }
        g.finish();
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        OrientedGraph {
            n,
            out: vec![Vec::new(); n],
            inn: vec![Vec::new(); n],
            words,
            bits: vec![0; words * n],
            edge_count: 0,
        }
    }

    fn try_insert(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        if self.has_edge(v, u) {
            return Err(GraphError::AntiparallelPair(v, u));
        }
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.out[u].push(v);
        self.inn[v].push(u);
        self.edge_count += 1;
        Ok(())
    }

    fn finish(&mut self) {
        for list in self.out.iter_mut().chain(self.inn.iter_mut()) {
            list.sort_unstable();
        }
    }

    /// Builds from edges already known to satisfy the orientation invariants.
    pub(crate) fn from_trusted(n: usize, edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            debug_assert!(u != v && !g.has_edge(u, v) && !g.has_edge(v, u));
            g.bits[u * g.words + v / 64] |= 1 << (v % 64);
            g.out[u].push(v);
            g.inn[v].push(u);
            g.edge_count += 1;
        }
        g.finish();
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].len()
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, outs)| outs.iter().map(move |&v| (u, v)))
    }

    pub fn edge_vec(&self) -> Vec<Edge> {
        self.edges().collect()
    }

    pub fn degree_summary(&self) -> DegreeSummary {
        let outs = self.out.iter().map(Vec::len);
        let ins = self.inn.iter().map(Vec::len);
        let min_out = outs.clone().min().unwrap_or(0);
        let max_out = outs.max().unwrap_or(0);
        let min_in = ins.clone().min().unwrap_or(0);
        let max_in = ins.max().unwrap_or(0);
        DegreeSummary {
            min_out,
            min_in,
            max_out,
            max_in,
            min_semi: min_out.min(min_in),
            max_semi: max_out.max(max_in),
        }
    }

    /// `Some(r)` when every in- and out-degree equals `r`.
    pub fn regular_degree(&self) -> Option<usize> {
        let s = self.degree_summary();
        (s.min_semi == s.max_semi).then_some(s.min_semi)
    }

    /// Removes `edges`, all of which must be present.
    pub fn remove_edges(&self, edges: &[Edge]) -> Result<Self, GraphError> {
        let mut drop = Self::empty(self.n);
        for &(u, v) in edges {
            if !self.has_edge(u, v) {
                return Err(GraphError::UnknownEdge(u, v));
            }
            if !drop.has_edge(u, v) {
                drop.bits[u * drop.words + v / 64] |= 1 << (v % 64);
            }
        }
        Ok(self.retain_edges(|u, v| !drop.has_edge(u, v)))
    }

    /// Keeps the edges accepted by `keep`; the vertex set is unchanged.
    pub fn retain_edges(&self, mut keep: impl FnMut(usize, usize) -> bool) -> Self {
        let kept: Vec<Edge> = self.edges().filter(|&(u, v)| keep(u, v)).collect();
        Self::from_trusted(self.n, kept)
    }

    /// The subgraph induced on `vertices`, relabelled to `0..vertices.len()`.
    pub fn induced(&self, vertices: &[usize]) -> Subgraph {
        let mut position = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            position[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &self.out[u] {
                if position[v] != usize::MAX {
                    edges.push((i, position[v]));
                }
            }
        }
        Subgraph {
            graph: Self::from_trusted(vertices.len(), edges),
            labels: vertices.to_vec(),
        }
    }

    /// Number of out-neighbours of `v` inside `set` (given as a membership mask).
    pub fn out_degree_into(&self, v: usize, set: &[bool]) -> usize {
        self.out[v].iter().filter(|&&w| set[w]).count()
    }

    /// Number of in-neighbours of `v` inside `set`.
    pub fn in_degree_from(&self, v: usize, set: &[bool]) -> usize {
        self.inn[v].iter().filter(|&&w| set[w]).count()
    }

    /// 0/1 adjacency matrix, row `u` column `v` set iff `u -> v`.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| self.has_edge(u, v) as u8).collect())
            .collect()
    }

    /// Cross-checks the edge bitmap against both adjacency lists.
    pub fn is_consistent(&self) -> bool {
        let mut count = 0;
        for u in 0..self.n {
            if self.out[u].windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            if self.out[u].len() + self.inn[u].len() > self.n - 1 {
                return false;
            }
            for v in 0..self.n {
                let e = self.has_edge(u, v);
                if e != self.out[u].binary_search(&v).is_ok()
                    || e != self.inn[v].binary_search(&u).is_ok()
                    || (e && (u == v || self.has_edge(v, u)))
                {
                    return false;
                }
                count += e as usize;
            }
        }
        count == self.edge_count
    }
}

/// A graph on a subset of a parent's vertices, with the label map back.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: OrientedGraph,
    /// `labels[local] = parent vertex`
    pub labels: Vec<usize>,
}

impl Subgraph {
    pub fn lift(&self, local: usize) -> usize {
        self.labels[local]
    }

    pub fn lift_all(&self, locals: &[usize]) -> Vec<usize> {
        locals.iter().map(|&v| self.labels[v]).collect()
    }

    pub fn local_of(&self, parent: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == parent)
    }
}
