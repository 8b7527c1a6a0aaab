use rand::seq::SliceRandom;
use rand::Rng as _;
use thiserror::Error;

use crate::graph::OrientedGraph;
use crate::pathcover::DirectedPath;
use crate::rng;

pub const SEARCH_MAX_N: usize = 128;
/// Independent restarts a finite budget is split across.
const RESTARTS: u64 = 4;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HamPathError {
    #[error("start and end coincide at vertex {0}")]
    SameEndpoints(usize),
    #[error("vertex {vertex} outside [0, {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph with {0} vertices exceeds the search limit")]
    TooLarge(usize),
    #[error("no Hamilton path exists (search tree exhausted after {expansions} expansions)")]
    NotFound { expansions: u64 },
    #[error("budget exhausted after {expansions} expansions")]
    BudgetExhausted { expansions: u64 },
}

enum Step {
    Found,
    Dead,
    Capped,
}

struct Search {
    out: Vec<u128>,
    inn: Vec<u128>,
    full: u128,
    t: usize,
    expansions: u64,
    cap: u64,
    rng: rng::Rng,
}

fn bits(mut m: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

impl Search {
    /// Every unvisited vertex must be reachable from `head` without passing
    /// through `t`, and must reach `t`.
    fn viable(&self, head: usize, unvisited: u128) -> bool {
        let tbit = 1u128 << self.t;
        let mut reach = self.out[head] & unvisited;
        let mut frontier = reach & !tbit;
        while frontier != 0 {
            let next = bits(frontier).fold(0, |acc, v| acc | self.out[v]);
            let new = next & unvisited & !reach;
            reach |= new;
            frontier = new & !tbit;
        }
        if reach != unvisited {
            return false;
        }
        let mut back = tbit;
        let mut frontier = tbit;
        while frontier != 0 {
            let next = bits(frontier).fold(0, |acc, v| acc | self.inn[v]);
            let new = next & unvisited & !back;
            back |= new;
            frontier = new;
        }
        back == unvisited
    }

    fn dfs(&mut self, head: usize, visited: u128, path: &mut Vec<usize>) -> Step {
        self.expansions += 1;
        if self.expansions > self.cap {
            return Step::Capped;
        }
        if visited == self.full {
            return if head == self.t { Step::Found } else { Step::Dead };
        }
        let unvisited = self.full & !visited;
        if !self.viable(head, unvisited) {
            return Step::Dead;
        }
        let tbit = 1u128 << self.t;
        let mut options = self.out[head] & unvisited;
        if unvisited != tbit {
            options &= !tbit;
        }
        // Fail-first: fewest onward options first, random tie-break.
        let mut cands: Vec<(u32, u64, usize)> = bits(options)
            .map(|w| ((self.out[w] & unvisited).count_ones(), self.rng.gen(), w))
            .collect();
        cands.sort_unstable();
        for (_, _, w) in cands {
            path.push(w);
            match self.dfs(w, visited | 1 << w, path) {
                Step::Found => return Step::Found,
                Step::Capped => return Step::Capped,
                Step::Dead => {
                    path.pop();
                }
            }
        }
        Step::Dead
    }
}

/// Finds a Hamilton path of `f` from `s` to `t` by backtracking with fail-first
/// branching and reachability pruning.
///
/// With `budget = None` the search is exhaustive and `NotFound` is a proof of
/// non-existence. A finite budget is split over a few seeded restarts;
/// `BudgetExhausted` means no restart finished its tree.
pub fn hamilton_path_between(
    f: &OrientedGraph,
    s: usize,
    t: usize,
    budget: Option<u64>,
    seed: u64,
) -> Result<DirectedPath, HamPathError> {
    let n = f.n();
    for v in [s, t] {
        if v >= n {
            return Err(HamPathError::VertexOutOfRange { vertex: v, n });
        }
    }
    if s == t {
        return Err(HamPathError::SameEndpoints(s));
    }
    if n > SEARCH_MAX_N {
        return Err(HamPathError::TooLarge(n));
    }
    let mask = |list: &[usize]| list.iter().fold(0u128, |m, &v| m | 1 << v);
    let out: Vec<u128> = (0..n).map(|v| mask(f.out_neighbors(v))).collect();
    let inn: Vec<u128> = (0..n).map(|v| mask(f.in_neighbors(v))).collect();
    let full = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };

    let (runs, cap) = match budget {
        None => (1, u64::MAX),
        Some(b) => (RESTARTS, (b / RESTARTS).max(1)),
    };
    let mut seeds: Vec<u64> = (0..runs).map(|k| rng::derive(seed, k)).collect();
    seeds.shuffle(&mut rng::seeded(seed));
    let mut total = 0;
    for run_seed in seeds {
        let mut search = Search { out: out.clone(), inn: inn.clone(), full, t, expansions: 0, cap, rng: rng::seeded(run_seed) };
        let mut path = vec![s];
        let step = search.dfs(s, 1 << s, &mut path);
        total += search.expansions.min(cap);
        match step {
            Step::Found => return Ok(DirectedPath::new(path)),
            Step::Dead => return Err(HamPathError::NotFound { expansions: total }),
            Step::Capped => {}
        }
    }
    Err(HamPathError::BudgetExhausted { expansions: total })
}
