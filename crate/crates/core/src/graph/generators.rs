//! Test-instance generators.

use rand::seq::SliceRandom;
use rand::Rng as _;

use super::{Edge, GraphError, OrientedGraph};
use crate::rng;

/// The rotational regular tournament: `i -> i + j (mod n)` for `j in 1..=(n-1)/2`.
pub fn rotational_tournament(n: usize) -> Result<OrientedGraph, GraphError> {
    if n % 2 == 0 {
        return Err(GraphError::EvenOrder(n));
    }
    if n < 3 {
        return Err(GraphError::OrderTooSmall(n));
    }
    let half = (n - 1) / 2;
    let edges = (0..n).flat_map(|i| (1..=half).map(move |j| (i, (i + j) % n)));
    Ok(OrientedGraph::from_trusted(n, edges))
}

/// The transitive tournament `i -> j` for all `i < j`.
pub fn transitive_tournament(n: usize) -> Result<OrientedGraph, GraphError> {
    if n == 0 {
        return Err(GraphError::EmptyVertexSet);
    }
    let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    Ok(OrientedGraph::from_trusted(n, edges))
}

/// The directed cycle `0 -> 1 -> ... -> n-1 -> 0`.
pub fn directed_cycle(n: usize) -> Result<OrientedGraph, GraphError> {
    if n < 3 {
        return Err(GraphError::OrderTooSmall(n));
    }
    Ok(OrientedGraph::from_trusted(n, (0..n).map(|i| (i, (i + 1) % n))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RandomKind {
    /// Each unordered pair oriented by a fair coin.
    Tournament,
    /// Every in- and out-degree exactly `r`.
    Regular(usize),
}

const ROUND_RETRIES: usize = 100;
const RESTARTS: usize = 50;

/// Random oriented graph of the given kind, deterministic in `seed`.
///
/// `Regular(r)` stacks `r` random permutation digraphs. Each round draws a
/// permutation avoiding loops and pairs already used in either direction, and
/// rejects it if it contains a 2-cycle; a round gets [`ROUND_RETRIES`] draws
/// before the whole construction restarts.
pub fn random_oriented(kind: RandomKind, n: usize, seed: u64) -> Result<OrientedGraph, GraphError> {
    if n == 0 {
        return Err(GraphError::EmptyVertexSet);
    }
    let mut rng = rng::seeded(seed);
    match kind {
        RandomKind::Tournament => {
            let mut edges = Vec::with_capacity(n * (n - 1) / 2);
            for i in 0..n {
                for j in i + 1..n {
                    edges.push(if rng.gen::<bool>() { (i, j) } else { (j, i) });
                }
            }
            Ok(OrientedGraph::from_trusted(n, edges))
        }
        RandomKind::Regular(r) => {
            let max = (n - 1) / 2;
            if r > max {
                return Err(GraphError::DegreeTooLarge { r, max });
            }
            for _ in 0..RESTARTS {
                if let Some(edges) = try_regular(n, r, &mut rng) {
                    return Ok(OrientedGraph::from_trusted(n, edges));
                }
            }
            Err(GraphError::GenerationFailed { seed, attempts: RESTARTS })
        }
    }
}

fn try_regular(n: usize, r: usize, rng: &mut rng::Rng) -> Option<Vec<Edge>> {
    let mut used = vec![vec![false; n]; n];
    let mut edges = Vec::with_capacity(n * r);
    for _ in 0..r {
        let mut accepted = None;
        for _ in 0..ROUND_RETRIES {
            let perm = random_permutation_avoiding(n, &used, rng)?;
            if (0..n).all(|v| perm[perm[v]] != v) {
                accepted = Some(perm);
                break;
            }
        }
        let perm = accepted?;
        for (v, &w) in perm.iter().enumerate() {
            used[v][w] = true;
            used[w][v] = true;
            edges.push((v, w));
        }
    }
    Some(edges)
}

/// A permutation `p` with `p[v] != v` and `!used[v][p[v]]`, found by Kuhn's
/// augmenting paths over shuffled candidate lists. `None` if none exists.
fn random_permutation_avoiding(n: usize, used: &[Vec<bool>], rng: &mut rng::Rng) -> Option<Vec<usize>> {
    let cand: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut c: Vec<usize> = (0..n).filter(|&w| w != v && !used[v][w]).collect();
            c.shuffle(rng);
            c
        })
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut owner = vec![usize::MAX; n];
    for &v in &order {
        let mut seen = vec![false; n];
        if !augment(v, &cand, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut perm = vec![0; n];
    for (w, &v) in owner.iter().enumerate() {
        perm[v] = w;
    }
    Some(perm)
}

fn augment(v: usize, cand: &[Vec<usize>], owner: &mut [usize], seen: &mut [bool]) -> bool {
    for &w in &cand[v] {
        if !seen[w] {
            seen[w] = true;
            if owner[w] == usize::MAX || augment(owner[w], cand, owner, seen) {
                owner[w] = v;
                return true;
            }
        }
    }
    false
}
