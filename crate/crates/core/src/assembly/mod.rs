//! Turning path covers into Hamilton cycles through a reservoir `W`.
//!
//! Each path `P_i = x_i .. y_i` of a cover gets an entry connector `t_i` and an
//! exit connector `s_i` in `W`. The reservoir is split into blocks `W_i`
//! holding `s_i` and `t_{i+1}`, and a Hamilton path `s_i .. t_{i+1}` through
//! each block closes the cycle `P_1 I_1 P_2 I_2 ... P_a I_a`.

mod complete;
mod search;

pub use complete::{
    complete_cover_to_cycle, complete_family_to_cycles, family_hypotheses, CompletionOptions, HypothesisCheck,
};
pub use search::{hamilton_path_between, HamPathError, SEARCH_MAX_N};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, OrientedGraph};

/// A directed Hamilton cycle stored as a vertex order starting at its smallest label.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HamiltonCycle {
    order: Vec<usize>,
}

impl HamiltonCycle {
    /// Rotates `order` to its canonical form.
    pub fn new(mut order: Vec<usize>) -> Self {
        if let Some(pos) = order.iter().enumerate().min_by_key(|&(_, v)| *v).map(|(i, _)| i) {
            order.rotate_left(pos);
        }
        HamiltonCycle { order }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let k = self.order.len();
        (0..k).map(move |i| (self.order[i], self.order[(i + 1) % k]))
    }

    /// Visits every vertex of `g` once, and every step (including the wrap) is an edge.
    pub fn is_hamiltonian_in(&self, g: &OrientedGraph) -> bool {
        let mut seen = vec![false; g.n()];
        self.order.len() == g.n()
            && g.n() >= 2
            && self.order.iter().all(|&v| v < g.n() && !std::mem::replace(&mut seen[v], true))
            && self.edges().all(|(u, v)| g.has_edge(u, v))
    }

    /// Whether `path` appears as a contiguous arc of the cycle.
    pub fn contains_segment(&self, path: &[usize]) -> bool {
        let k = self.order.len();
        let Some(&first) = path.first() else {
            return true;
        };
        let Some(start) = self.order.iter().position(|&v| v == first) else {
            return false;
        };
        path.len() <= k && path.iter().enumerate().all(|(i, &v)| self.order[(start + i) % k] == v)
    }
}

/// Entry and exit connectors for each path of a cover: `t[i] -> x_i` and `y_i -> s[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectorChoice {
    pub t: Vec<usize>,
    pub s: Vec<usize>,
}

impl ConnectorChoice {
    pub fn all_distinct(&self) -> bool {
        let mut all: Vec<usize> = self.t.iter().chain(&self.s).copied().collect();
        all.sort_unstable();
        all.windows(2).all(|w| w[0] != w[1])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    /// In-neighbours of a path start.
    In,
    /// Out-neighbours of a path end.
    Out,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AssemblyError {
    #[error("the cover has no paths")]
    EmptyCover,
    #[error("vertex {0} is both on a path and in the reservoir")]
    ReservoirOverlap(usize),
    #[error("reservoir of {w} vertices cannot host {a} blocks with two pinned vertices each")]
    ReservoirTooSmall { w: usize, a: usize },
    #[error("blocks of up to {size} vertices exceed the cap {cap}")]
    BlocksTooLarge { size: usize, cap: usize },
    #[error("vertex {vertex} has {available} {direction:?}-connectors in the reservoir, needs {required}")]
    ConnectorDegreeTooLow { vertex: usize, direction: Direction, available: usize, required: usize },
    #[error("no choice of pairwise distinct connectors exists")]
    ConnectorsUnavailable,
    #[error("block {block} could not be traversed after {attempts} attempts: {cause}")]
    SpliceFailed { attempts: usize, block: usize, cause: HamPathError },
    #[error("path cover family is invalid: {0}")]
    InvalidFamily(String),
    #[error("completed {} cycles, cover {failed_index} failed: {cause}", completed.len())]
    PartialCompletion { completed: Vec<HamiltonCycle>, failed_index: usize, cause: Box<AssemblyError> },
}
