//! Constructive machinery for packing edge-disjoint Hamilton cycles into dense
//! regular oriented graphs, plus the exact counting oracles used to sanity-check
//! decomposition counts on tiny instances.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`]: oriented and bipartite graph types, generators, edge-list IO.
//! - [`matching`]: bipartite matchings, r-factors via max-flow, matching families,
//!   and `reg(G)` for oriented graphs.
//! - [`counting`]: permanents, Brégman / Van der Waerden bounds, exact Hamilton
//!   cycle and decomposition counts.
//! - [`pathcover`]: Walecki path decompositions of the complete digraph and
//!   path-cover families built from matchings.
//! - [`assembly`]: exact Hamilton-path search and completion of path covers into
//!   Hamilton cycles through a reservoir.
//! - [`partition`]: the randomized split of `(G, D)` into edge-disjoint subproblems.
//! - [`pipeline`]: the end-to-end driver, certificates and their verifier.

pub mod assembly;
pub mod counting;
pub mod flow;
pub mod graph;
pub mod matching;
pub mod partition;
pub mod pathcover;
pub mod pipeline;
pub mod rng;

pub use graph::{BipartiteGraph, DegreeSummary, GraphError, OrientedGraph, Subgraph};
