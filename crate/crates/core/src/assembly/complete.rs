use std::collections::HashSet;

use rand::seq::SliceRandom;
use rayon::prelude::*;
use serde::Serialize;

use super::{hamilton_path_between, AssemblyError, ConnectorChoice, Direction, HamPathError, HamiltonCycle};
use crate::graph::{Edge, OrientedGraph};
use crate::pathcover::{PathCover, PathCoverFamily};
use crate::rng;

/// Search nodes allowed when choosing distinct connectors.
const CONNECTOR_NODE_CAP: u64 = 200_000;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CompletionOptions {
    /// Fresh connector/block samples tried before giving up on a cover.
    pub retries: usize,
    /// Largest reservoir block the exact path search is asked to handle.
    pub block_cap: usize,
    /// Expansion budget per block search; `None` searches exhaustively.
    pub search_budget: Option<u64>,
    /// Require every path endpoint to have `2a` connector candidates.
    pub strict_degree: bool,
}

impl Default for CompletionOptions {
    fn default() -> Self {
        CompletionOptions { retries: 20, block_cap: 24, search_budget: Some(200_000), strict_degree: false }
    }
}

/// Picks pairwise distinct representatives, always branching on the slot with
/// the fewest remaining candidates.
fn choose_distinct(slots: &[Vec<usize>], rng: &mut rng::Rng) -> Option<Vec<usize>> {
    let mut lists: Vec<Vec<usize>> = slots.to_vec();
    lists.iter_mut().for_each(|l| l.shuffle(rng));
    let mut chosen = vec![usize::MAX; slots.len()];
    let mut used = HashSet::new();
    let mut nodes = 0u64;

    fn go(
        lists: &[Vec<usize>],
        chosen: &mut [usize],
        used: &mut HashSet<usize>,
        nodes: &mut u64,
    ) -> bool {
        *nodes += 1;
        if *nodes > CONNECTOR_NODE_CAP {
            return false;
        }
        let next = (0..lists.len())
            .filter(|&i| chosen[i] == usize::MAX)
            .min_by_key(|&i| lists[i].iter().filter(|v| !used.contains(*v)).count());
        let Some(i) = next else {
            return true;
        };
        for &v in &lists[i] {
            if used.insert(v) {
                chosen[i] = v;
                if go(lists, chosen, used, nodes) {
                    return true;
                }
                chosen[i] = usize::MAX;
                used.remove(&v);
            }
        }
        false
    }

    go(&lists, &mut chosen, &mut used, &mut nodes).then_some(chosen)
}

/// Splices the paths of `cover` into one Hamilton cycle on `V(cover) ∪ W`,
/// routing through the reservoir `w` with edges of `host`.
pub fn complete_cover_to_cycle(
    cover: &PathCover,
    host: &OrientedGraph,
    w: &[usize],
    opts: &CompletionOptions,
    seed: u64,
) -> Result<HamiltonCycle, AssemblyError> {
    let a = cover.size();
    if a == 0 {
        return Err(AssemblyError::EmptyCover);
    }
    let mut in_w = vec![false; host.n()];
    w.iter().for_each(|&v| in_w[v] = true);
    if let Some(&v) = cover.paths.iter().flat_map(|p| &p.vertices).find(|&&v| in_w[v]) {
        return Err(AssemblyError::ReservoirOverlap(v));
    }
    if w.len() < 2 * a {
        return Err(AssemblyError::ReservoirTooSmall { w: w.len(), a });
    }
    let largest_block = w.len().div_ceil(a);
    if largest_block > opts.block_cap {
        return Err(AssemblyError::BlocksTooLarge { size: largest_block, cap: opts.block_cap });
    }

    let required = if opts.strict_degree { 2 * a } else { 1 };
    let candidates = |vertex: usize, direction: Direction| -> Result<Vec<usize>, AssemblyError> {
        let list: Vec<usize> = match direction {
            Direction::In => host.in_neighbors(vertex),
            Direction::Out => host.out_neighbors(vertex),
        }
        .iter()
        .copied()
        .filter(|&v| in_w[v])
        .collect();
        if list.len() < required {
            return Err(AssemblyError::ConnectorDegreeTooLow { vertex, direction, available: list.len(), required });
        }
        Ok(list)
    };
    let mut t_cands = Vec::with_capacity(a);
    let mut s_cands = Vec::with_capacity(a);
    for p in &cover.paths {
        t_cands.push(candidates(p.start(), Direction::In)?);
        s_cands.push(candidates(p.end(), Direction::Out)?);
    }

    let mut last_failure = None;
    for attempt in 0..opts.retries.max(1) {
        let mut rng = rng::seeded(rng::derive(seed, attempt as u64));
        let mut order: Vec<usize> = (0..a).collect();
        if attempt > 0 {
            order.shuffle(&mut rng);
        }
        let slots: Vec<Vec<usize>> =
            order.iter().map(|&i| t_cands[i].clone()).chain(order.iter().map(|&i| s_cands[i].clone())).collect();
        let Some(picked) = choose_distinct(&slots, &mut rng) else {
            return Err(AssemblyError::ConnectorsUnavailable);
        };
        let conn = ConnectorChoice { t: picked[..a].to_vec(), s: picked[a..].to_vec() };
        debug_assert!(conn.all_distinct());

        // Block i holds s_i and t_{i+1}; the other reservoir vertices are dealt at random.
        let pinned: HashSet<usize> = picked.iter().copied().collect();
        let mut rest: Vec<usize> = w.iter().copied().filter(|v| !pinned.contains(v)).collect();
        rest.shuffle(&mut rng);
        let (base, extra) = (rest.len() / a, rest.len() % a);
        let mut blocks = Vec::with_capacity(a);
        let mut tail = rest.as_slice();
        for i in 0..a {
            let (chunk, more) = tail.split_at(base + usize::from(i < extra));
            tail = more;
            let mut block = vec![conn.s[i], conn.t[(i + 1) % a]];
            block.extend_from_slice(chunk);
            blocks.push(block);
        }

        let block_seed = rng::derive(seed ^ 0xB10C, attempt as u64);
        let results: Vec<Result<Vec<usize>, HamPathError>> = blocks
            .par_iter()
            .enumerate()
            .map(|(i, block)| {
                let sub = host.induced(block);
                // Pinned vertices sit at local indices 0 and 1.
                let path = hamilton_path_between(&sub.graph, 0, 1, opts.search_budget, rng::derive(block_seed, i as u64))?;
                Ok(sub.lift_all(&path.vertices))
            })
            .collect();
        let segments: Vec<Vec<usize>> = match results.iter().position(|r| r.is_err()) {
            None => results.into_iter().map(|r| r.unwrap()).collect(),
            Some(block) => {
                let cause = results[block].clone().unwrap_err();
                match joint_segments(host, w, &conn, opts.search_budget, rng::derive(block_seed, u64::MAX)) {
                    Ok(segments) => segments,
                    Err(_) => {
                        last_failure = Some((block, cause));
                        continue;
                    }
                }
            }
        };
        // segments[k] runs from s_k to some t_j; the path at position j comes next.
        let mut cycle = Vec::with_capacity(host.n());
        let mut k = 0;
        for _ in 0..a {
            cycle.extend_from_slice(&cover.paths[order[k]].vertices);
            cycle.extend_from_slice(&segments[k]);
            let end = *segments[k].last().expect("segments hold two pinned vertices");
            k = conn.t.iter().position(|&v| v == end).expect("segments end at an entry connector");
        }
        let cycle = HamiltonCycle::new(cycle);
        assert!(spans_exactly(&cycle, cover, w, host), "spliced cycle failed verification");
        return Ok(cycle);
    }
    let (block, cause) = last_failure.expect("at least one attempt ran");
    Err(AssemblyError::SpliceFailed { attempts: opts.retries.max(1), block, cause })
}

/// Finds all reservoir segments at once: a Hamilton path of `host[W]` from
/// `s_0` to `t_0` in which each `t_i` (`i >= 1`) is followed by `s_i`, standing
/// for path `i`. Block sizes and the order of the paths are left to the search.
/// Entry `i` of the result starts at `s_i`.
fn joint_segments(
    host: &OrientedGraph,
    w: &[usize],
    conn: &ConnectorChoice,
    budget: Option<u64>,
    seed: u64,
) -> Result<Vec<Vec<usize>>, HamPathError> {
    let a = conn.t.len();
    let sub = host.induced(w);
    let local = |v: usize| sub.local_of(v).expect("connectors lie in W");
    let (t, s): (Vec<usize>, Vec<usize>) = (conn.t.iter().map(|&v| local(v)).collect(), conn.s.iter().map(|&v| local(v)).collect());
    let mut jump_from = vec![None; w.len()];
    let mut jump_to = vec![None; w.len()];
    for i in 1..a {
        jump_from[t[i]] = Some(s[i]);
        jump_to[s[i]] = Some(t[i]);
    }
    // Non-jump edges leave no t_i and enter no s_i; `s_i -> t_i` is useless and would clash with the jump.
    let kept = sub
        .graph
        .edges()
        .filter(|&(x, y)| jump_from[x].is_none() && jump_to[y].is_none() && jump_from[y] != Some(x));
    let aux = OrientedGraph::new(w.len(), kept.chain((1..a).map(|i| (t[i], s[i])))).expect("auxiliary graph is oriented");
    let path = hamilton_path_between(&aux, s[0], t[0], budget, seed)?;
    // Segments come out in visiting order; index them by their starting s_i.
    let mut segments = vec![Vec::new(); a];
    let mut current = Vec::new();
    let mut from = 0;
    for (k, &v) in path.vertices.iter().enumerate() {
        current.push(sub.lift(v));
        let next = path.vertices.get(k + 1).copied();
        if next.is_some() && jump_from[v] == next {
            segments[from] = std::mem::take(&mut current);
            from = s.iter().position(|&x| Some(x) == next).expect("jumps land on exit connectors");
        }
    }
    segments[from] = current;
    Ok(segments)
}

/// The cycle visits `V(cover) ∪ W` exactly once each along edges of `host`.
fn spans_exactly(cycle: &HamiltonCycle, cover: &PathCover, w: &[usize], host: &OrientedGraph) -> bool {
    let mut expected: Vec<usize> = cover.paths.iter().flat_map(|p| p.vertices.iter().copied()).chain(w.iter().copied()).collect();
    expected.sort_unstable();
    let mut got = cycle.order().to_vec();
    got.sort_unstable();
    got == expected && cycle.edges().all(|(u, v)| host.has_edge(u, v))
}

/// Concrete versions of the degree conditions for completing a family.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HypothesisCheck {
    /// Minimum over `u ∈ U` of `d⁺(u, W)` and `d⁻(u, W)`.
    pub min_connector_degree: usize,
    pub connector_required: usize,
    pub connector_ok: bool,
    /// `δ⁰(H[W])`.
    pub reservoir_min_semi: usize,
    pub reservoir_floor: usize,
    pub reservoir_ok: bool,
}

pub fn family_hypotheses(
    h: &OrientedGraph,
    u: &[usize],
    w: &[usize],
    a: usize,
    b: usize,
    reservoir_floor: usize,
) -> HypothesisCheck {
    let mut in_w = vec![false; h.n()];
    w.iter().for_each(|&v| in_w[v] = true);
    let min_connector_degree =
        u.iter().map(|&x| h.out_degree_into(x, &in_w).min(h.in_degree_from(x, &in_w))).min().unwrap_or(0);
    let reservoir_min_semi = h.induced(w).graph.degree_summary().min_semi;
    let connector_required = 2 * a + b + 1;
    HypothesisCheck {
        min_connector_degree,
        connector_required,
        connector_ok: min_connector_degree >= connector_required,
        reservoir_min_semi,
        reservoir_floor,
        reservoir_ok: reservoir_min_semi >= reservoir_floor,
    }
}

fn check_family(h: &OrientedGraph, u: &[usize], w: &[usize], family: &PathCoverFamily) -> Result<(), String> {
    if family.covers.len() != family.t {
        return Err(format!("{} covers but t = {}", family.covers.len(), family.t));
    }
    let mut expected = u.to_vec();
    expected.sort_unstable();
    let reservoir: HashSet<usize> = w.iter().copied().collect();
    if let Some(v) = expected.iter().find(|v| reservoir.contains(v)) {
        return Err(format!("vertex {v} is in both U and W"));
    }
    let mut used: HashSet<Edge> = HashSet::new();
    for (j, c) in family.covers.iter().enumerate() {
        let mut got: Vec<usize> = c.paths.iter().flat_map(|p| p.vertices.iter().copied()).collect();
        got.sort_unstable();
        if got != expected {
            return Err(format!("cover {j} does not partition U"));
        }
        if c.size() > family.a {
            return Err(format!("cover {j} has {} paths, bound {}", c.size(), family.a));
        }
        if let Some((x, y)) = c.edges().find(|&(x, y)| !h.has_edge(x, y)) {
            return Err(format!("cover {j} uses non-edge ({x}, {y})"));
        }
        if let Some(e) = c.edges().find(|e| !used.insert(*e)) {
            return Err(format!("cover {j} reuses edge {e:?}"));
        }
    }
    Ok(())
}

/// Completes every cover of `family` (living on `U`) in turn, each inside `h`
/// minus the edges of the cycles already built, so the cycles are edge-disjoint.
/// Stops at the first cover that cannot be completed and returns the cycles so
/// far inside `PartialCompletion`.
pub fn complete_family_to_cycles(
    h: &OrientedGraph,
    u: &[usize],
    w: &[usize],
    family: &PathCoverFamily,
    opts: &CompletionOptions,
    seed: u64,
) -> Result<Vec<HamiltonCycle>, AssemblyError> {
    check_family(h, u, w, family).map_err(AssemblyError::InvalidFamily)?;
    let mut used: HashSet<Edge> = HashSet::new();
    let mut cycles: Vec<HamiltonCycle> = Vec::with_capacity(family.t);
    let mut current = h.clone();
    for (j, cover) in family.covers.iter().enumerate() {
        match complete_cover_to_cycle(cover, &current, w, opts, rng::derive(seed, j as u64)) {
            Ok(c) => {
                used.extend(c.edges());
                current = h.retain_edges(|x, y| !used.contains(&(x, y)));
                cycles.push(c);
            }
            Err(cause) => {
                return Err(AssemblyError::PartialCompletion { completed: cycles, failed_index: j, cause: Box::new(cause) });
            }
        }
    }
    Ok(cycles)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pathcover::DirectedPath;

    fn example() -> (OrientedGraph, PathCover, Vec<usize>) {
        let g = OrientedGraph::new(5, [(0, 1), (2, 3), (3, 4), (4, 2), (1, 2), (4, 0)]).unwrap();
        let cover = PathCover { paths: vec![DirectedPath::new(vec![0, 1])] };
        (g, cover, vec![2, 3, 4])
    }

    #[test]
    fn single_path_example() {
        let (g, cover, w) = example();
        let c = complete_cover_to_cycle(&cover, &g, &w, &CompletionOptions::default(), 0).unwrap();
        assert_eq!(c.order(), &[0, 1, 2, 3, 4]);
        assert!(c.is_hamiltonian_in(&g));
    }

    #[test]
    fn empty_cover_rejected() {
        let (g, _, w) = example();
        let empty = PathCover::default();
        assert_eq!(
            complete_cover_to_cycle(&empty, &g, &w, &CompletionOptions::default(), 0),
            Err(AssemblyError::EmptyCover)
        );
    }

    #[test]
    fn missing_connector_reported() {
        let g = OrientedGraph::new(5, [(0, 1), (2, 3), (3, 4), (4, 2), (1, 2)]).unwrap();
        let cover = PathCover { paths: vec![DirectedPath::new(vec![0, 1])] };
        let err = complete_cover_to_cycle(&cover, &g, &[2, 3, 4], &CompletionOptions::default(), 0).unwrap_err();
        assert_eq!(
            err,
            AssemblyError::ConnectorDegreeTooLow { vertex: 0, direction: Direction::In, available: 0, required: 1 }
        );
    }

    #[test]
    fn strict_mode_enforces_double_cover_size() {
        let (g, cover, w) = example();
        let opts = CompletionOptions { strict_degree: true, ..Default::default() };
        assert!(matches!(
            complete_cover_to_cycle(&cover, &g, &w, &opts, 0),
            Err(AssemblyError::ConnectorDegreeTooLow { required: 2, .. })
        ));
    }

    #[test]
    fn joint_segments_follow_visiting_order() {
        // Reservoir 10..16 with segments 10-11, 12-13, 14-15 and no other edges.
        let g = OrientedGraph::new(16, [(10, 11), (12, 13), (14, 15)]).unwrap();
        let w: Vec<usize> = (10..16).collect();
        let conn = ConnectorChoice { t: vec![15, 13, 11], s: vec![10, 14, 12] };
        let segs = joint_segments(&g, &w, &conn, None, 0).unwrap();
        assert_eq!(segs, vec![vec![10, 11], vec![14, 15], vec![12, 13]]);
        let stuck = ConnectorChoice { t: vec![15, 11, 13], s: vec![10, 14, 12] };
        assert!(joint_segments(&g, &w, &stuck, None, 0).is_err());
    }

    #[test]
    fn uneven_reservoir_split() {
        // Paths 0 and 1; the only routing through W = 2..7 uses segments of sizes 2 and 4.
        let edges = [(0, 2), (2, 3), (3, 1), (1, 4), (4, 5), (5, 6), (6, 7), (7, 0)];
        let g = OrientedGraph::new(8, edges).unwrap();
        let cover = PathCover { paths: vec![DirectedPath::new(vec![0]), DirectedPath::new(vec![1])] };
        let opts = CompletionOptions { retries: 1, ..Default::default() };
        let c = complete_cover_to_cycle(&cover, &g, &[2, 3, 4, 5, 6, 7], &opts, 0).unwrap();
        assert_eq!(c.order(), &[0, 2, 3, 1, 4, 5, 6, 7]);
    }

    #[test]
    fn distinct_choice_backtracks() {
        let slots = vec![vec![1, 2], vec![1], vec![2, 3]];
        let picked = choose_distinct(&slots, &mut rng::seeded(0)).unwrap();
        assert_eq!(picked, vec![2, 1, 3]);
        assert!(choose_distinct(&[vec![1], vec![1]], &mut rng::seeded(0)).is_none());
    }
}
