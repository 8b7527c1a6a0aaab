//! Bipartite matchings and factors.
//!
//! Feasibility questions ("does an r-factor exist?") are answered by max-flow;
//! [`gale_ryser_oracle`] keeps the literal subset inequality as an independent
//! cross-check for small graphs.

mod decompose;
mod factor;
mod oriented;

pub use decompose::{
    count_matchings_with_few_special, peel_max_matchings, pm_decompose_regular, sample_matching_family,
    sample_matching_family_partial, union_min_degree, FamilySample,
};
pub use factor::{
    almost_regular_factor, embed_in_regular, extract_bipartite_r_factor, gale_ryser_oracle,
    has_bipartite_r_factor, regular_supergraph, GALE_RYSER_MAX_M,
};
pub use oriented::{extract_oriented_r_factor, has_oriented_r_factor, oriented_reg};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{BipartiteGraph, Edge};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MatchingError {
    #[error("r = {r} outside [0, {m}]")]
    ROutOfRange { r: usize, m: usize },
    #[error("operation needs equal sides, got {left} and {right}")]
    Unbalanced { left: usize, right: usize },
    #[error("side size {m} exceeds the exhaustive limit {max}")]
    TooLarge { m: usize, max: usize },
    #[error("no {r}-factor exists")]
    NoFactor { r: usize },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("complement has no factor for target degree {d}")]
    NoComplementFactor { d: usize },
    #[error("graph is not regular with positive degree")]
    NotRegular,
    #[error("only {achieved} of {required} matchings meet the size quota")]
    QuotaUnreachable { achieved: usize, required: usize },
    #[error("special edge ({0}, {1}) is not an edge of the graph")]
    UnknownEdge(usize, usize),
}

/// A set of vertex-disjoint edges `(left, right)` in side-local coordinates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matching {
    pub edges: Vec<Edge>,
}

impl Matching {
    pub fn new(mut edges: Vec<Edge>) -> Self {
        edges.sort_unstable();
        Matching { edges }
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// No two edges share an endpoint.
    pub fn is_matching(&self) -> bool {
        let mut left: Vec<usize> = self.edges.iter().map(|e| e.0).collect();
        let mut right: Vec<usize> = self.edges.iter().map(|e| e.1).collect();
        left.sort_unstable();
        right.sort_unstable();
        left.windows(2).all(|w| w[0] != w[1]) && right.windows(2).all(|w| w[0] != w[1])
    }

    pub fn is_perfect_in(&self, b: &BipartiteGraph) -> bool {
        self.is_matching()
            && self.size() == b.left()
            && self.size() == b.right()
            && self.edges.iter().all(|&(x, y)| b.has_edge(x, y))
    }
}

/// `t` pairwise edge-disjoint matchings, each of size at least `a`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingFamily {
    pub matchings: Vec<Matching>,
    pub a: usize,
    pub t: usize,
}

impl MatchingFamily {
    /// Checks the family invariants against its host graph.
    pub fn is_valid_in(&self, b: &BipartiteGraph) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.matchings.len() == self.t
            && self.matchings.iter().all(|m| {
                m.is_matching()
                    && m.size() >= self.a
                    && m.edges.iter().all(|&(x, y)| b.has_edge(x, y) && seen.insert((x, y)))
            })
    }

    /// The union subgraph `G_M` as an edge list.
    pub fn union_edges(&self) -> Vec<Edge> {
        let mut all: Vec<Edge> = self.matchings.iter().flat_map(|m| m.edges.iter().copied()).collect();
        all.sort_unstable();
        all
    }
}

/// A regular spanning subgraph: bipartite (edges in side-local coordinates) or
/// oriented (directed edges in vertex labels).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorCertificate {
    pub r: usize,
    pub edges: Vec<Edge>,
    pub regular: bool,
}

/// Hopcroft–Karp over explicit adjacency lists; neighbours are tried in list order.
pub(crate) fn hopcroft_karp(adj: &[Vec<usize>], right: usize, order: &[usize]) -> Vec<Option<usize>> {
    const INF: usize = usize::MAX;
    let left = adj.len();
    let mut match_l: Vec<Option<usize>> = vec![None; left];
    let mut match_r: Vec<Option<usize>> = vec![None; right];
    let mut dist = vec![INF; left];
    loop {
        let mut queue = std::collections::VecDeque::new();
        for &a in order {
            if match_l[a].is_none() {
                dist[a] = 0;
                queue.push_back(a);
            } else {
                dist[a] = INF;
            }
        }
        let mut found = false;
        while let Some(a) = queue.pop_front() {
            for &b in &adj[a] {
                match match_r[b] {
                    None => found = true,
                    Some(a2) if dist[a2] == INF => {
                        dist[a2] = dist[a] + 1;
                        queue.push_back(a2);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            return match_l;
        }
        let mut next = vec![0usize; left];
        for &a in order {
            if match_l[a].is_none() {
                hk_dfs(a, adj, &mut match_l, &mut match_r, &mut dist, &mut next);
            }
        }
    }
}

fn hk_dfs(
    a: usize,
    adj: &[Vec<usize>],
    match_l: &mut [Option<usize>],
    match_r: &mut [Option<usize>],
    dist: &mut [usize],
    next: &mut [usize],
) -> bool {
    while next[a] < adj[a].len() {
        let b = adj[a][next[a]];
        next[a] += 1;
        let ok = match match_r[b] {
            None => true,
            Some(a2) => dist[a2] == dist[a].wrapping_add(1) && hk_dfs(a2, adj, match_l, match_r, dist, next),
        };
        if ok {
            match_l[a] = Some(b);
            match_r[b] = Some(a);
            return true;
        }
    }
    dist[a] = usize::MAX;
    false
}

/// A maximum matching; left vertices and neighbours are scanned in ascending order.
pub fn maximum_matching(b: &BipartiteGraph) -> Matching {
    let adj: Vec<Vec<usize>> = (0..b.left()).map(|a| b.neighbors_of_left(a).to_vec()).collect();
    let order: Vec<usize> = (0..b.left()).collect();
    let m = hopcroft_karp(&adj, b.right(), &order);
    Matching::new(m.iter().enumerate().filter_map(|(a, x)| x.map(|y| (a, y))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maximum_matching_on_path() {
        // a0-b0, a1-b0, a1-b1: greedy a0->b0 then a1->b1.
        let b = BipartiteGraph::balanced(2, [(0, 0), (1, 0), (1, 1)]).unwrap();
        let m = maximum_matching(&b);
        assert!(m.is_perfect_in(&b));
        assert_eq!(m.edges, vec![(0, 0), (1, 1)]);
    }

    #[test]
    fn maximum_matching_needs_augmenting_path() {
        // a0 prefers b0 which a1 needs.
        let b = BipartiteGraph::balanced(3, [(0, 0), (0, 1), (1, 0), (2, 1), (2, 2)]).unwrap();
        assert_eq!(maximum_matching(&b).size(), 3);
        let c = BipartiteGraph::balanced(3, [(0, 0), (1, 0), (2, 0)]).unwrap();
        assert_eq!(maximum_matching(&c).size(), 1);
    }

    #[test]
    fn matching_validity() {
        assert!(!Matching::new(vec![(0, 1), (0, 2)]).is_matching());
        assert!(!Matching::new(vec![(0, 1), (2, 1)]).is_matching());
        assert!(Matching::new(vec![(0, 1), (1, 0)]).is_matching());
    }
}
