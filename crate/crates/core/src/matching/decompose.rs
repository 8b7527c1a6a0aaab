use rand::seq::SliceRandom;

use super::{hopcroft_karp, maximum_matching, regular_supergraph, Matching, MatchingError, MatchingFamily};
use crate::graph::{BipartiteGraph, Edge};
use crate::rng;

pub const FEW_SPECIAL_MAX_M: usize = 10;

/// Splits a `d`-regular bipartite graph into `d` disjoint perfect matchings by
/// repeatedly taking a maximum matching (ascending scan order) and removing it.
pub fn pm_decompose_regular(b: &BipartiteGraph) -> Result<Vec<Matching>, MatchingError> {
    if !b.is_balanced() {
        return Err(MatchingError::Unbalanced { left: b.left(), right: b.right() });
    }
    let d = match b.regular_degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(MatchingError::NotRegular),
    };
    let mut rest = b.clone();
    let mut out = Vec::with_capacity(d);
    for _ in 0..d {
        let m = maximum_matching(&rest);
        // A regular bipartite graph always has a perfect matching.
        assert_eq!(m.size(), b.left(), "regular bipartite graph without a perfect matching");
        let taken: std::collections::HashSet<Edge> = m.edges.iter().copied().collect();
        rest = rest.with_edges(rest.edges().filter(|e| !taken.contains(e)).collect::<Vec<_>>());
        out.push(m);
    }
    Ok(out)
}

/// Exact counts `(total, with_few)` of perfect matchings of `b`, where
/// `with_few` counts those using at most `ell` edges of `special`.
pub fn count_matchings_with_few_special(
    b: &BipartiteGraph,
    special: &[Edge],
    ell: usize,
) -> Result<(u128, u128), MatchingError> {
    if !b.is_balanced() {
        return Err(MatchingError::Unbalanced { left: b.left(), right: b.right() });
    }
    let m = b.left();
    if m > FEW_SPECIAL_MAX_M {
        return Err(MatchingError::TooLarge { m, max: FEW_SPECIAL_MAX_M });
    }
    let mut is_special = vec![vec![false; m]; m];
    for &(x, y) in special {
        if !b.has_edge(x, y) {
            return Err(MatchingError::UnknownEdge(x, y));
        }
        is_special[x][y] = true;
    }
    // histogram[k] = number of perfect matchings with exactly k special edges
    let mut histogram = vec![0u128; m + 1];
    let mut used = vec![false; m];
    fn walk(
        a: usize,
        specials: usize,
        b: &BipartiteGraph,
        is_special: &[Vec<bool>],
        used: &mut [bool],
        histogram: &mut [u128],
    ) {
        if a == b.left() {
            histogram[specials] += 1;
            return;
        }
        for &y in b.neighbors_of_left(a) {
            if !used[y] {
                used[y] = true;
                walk(a + 1, specials + is_special[a][y] as usize, b, is_special, used, histogram);
                used[y] = false;
            }
        }
    }
    walk(0, 0, b, &is_special, &mut used, &mut histogram);
    let total = histogram.iter().sum();
    let few = histogram.iter().take(ell + 1).sum();
    Ok((total, few))
}

/// Minimum degree, over both sides, of the union of `matchings` inside `b`'s
/// vertex set.
pub fn union_min_degree(b: &BipartiteGraph, matchings: &[Matching]) -> usize {
    let mut dl = vec![0usize; b.left()];
    let mut dr = vec![0usize; b.right()];
    for &(x, y) in matchings.iter().flat_map(|m| m.edges.iter()) {
        dl[x] += 1;
        dr[y] += 1;
    }
    dl.into_iter().chain(dr).min().unwrap_or(0)
}

/// Outcome of the matching-family construction, including partial results.
#[derive(Clone, Debug)]
pub struct FamilySample {
    pub family: MatchingFamily,
    pub min_degree_of_union: usize,
    /// Degree of the regular supergraph that was decomposed.
    pub supergraph_degree: usize,
    /// Number of supergraph edges not in `b`.
    pub added_edges: usize,
}

/// Builds up to `t` disjoint matchings of size `>= a`: embed `b` in a regular
/// supergraph `H` (smallest feasible degree, starting at `Δ(b)`), decompose `H`
/// into perfect matchings, consume them in seed-shuffled order, and keep the
/// restrictions to `E(b)` that meet the quota. Returns whatever was achieved;
/// `family.t` is the achieved count.
pub fn sample_matching_family_partial(
    b: &BipartiteGraph,
    a: usize,
    t: usize,
    xi: usize,
    seed: u64,
) -> Result<FamilySample, MatchingError> {
    if !b.is_balanced() {
        return Err(MatchingError::Unbalanced { left: b.left(), right: b.right() });
    }
    let m = b.left();
    let (lo, hi) = b.degree_range();
    if hi - lo > xi {
        return Err(MatchingError::HypothesisViolated(format!(
            "degree spread {} exceeds slack {xi} (min {lo}, max {hi})",
            hi - lo
        )));
    }
    if m == 0 {
        let family = MatchingFamily { matchings: Vec::new(), a, t: 0 };
        return Ok(FamilySample { family, min_degree_of_union: 0, supergraph_degree: 0, added_edges: 0 });
    }
    let (d, h) = (hi.max(1)..=m)
        .find_map(|d| regular_supergraph(b, d).map(|h| (d, h)))
        .expect("the complete bipartite graph is always a regular supergraph");
    let mut pms = pm_decompose_regular(&h)?;
    pms.shuffle(&mut rng::seeded(seed));
    let matchings: Vec<Matching> = pms
        .into_iter()
        .map(|pm| Matching::new(pm.edges.into_iter().filter(|&(x, y)| b.has_edge(x, y)).collect()))
        .filter(|r| r.size() >= a)
        .take(t)
        .collect();
    let min_degree_of_union = union_min_degree(b, &matchings);
    let achieved = matchings.len();
    Ok(FamilySample {
        family: MatchingFamily { matchings, a, t: achieved },
        min_degree_of_union,
        supergraph_degree: d,
        added_edges: h.edge_count() - b.edge_count(),
    })
}

/// As [`sample_matching_family_partial`], but failing with `QuotaUnreachable`
/// unless exactly `t` matchings meet the quota.
pub fn sample_matching_family(
    b: &BipartiteGraph,
    a: usize,
    t: usize,
    xi: usize,
    seed: u64,
) -> Result<(MatchingFamily, usize), MatchingError> {
    let s = sample_matching_family_partial(b, a, t, xi, seed)?;
    if s.family.t < t {
        return Err(MatchingError::QuotaUnreachable { achieved: s.family.t, required: t });
    }
    Ok((s.family, s.min_degree_of_union))
}

/// Repeatedly removes a maximum matching (seed-shuffled scan order) while it
/// has at least `quota` edges, up to `t` matchings. Works on unbalanced graphs.
pub fn peel_max_matchings(b: &BipartiteGraph, quota: usize, t: usize, seed: u64) -> Vec<Matching> {
    let mut rng = rng::seeded(seed);
    let mut adj: Vec<Vec<usize>> = (0..b.left()).map(|a| b.neighbors_of_left(a).to_vec()).collect();
    let mut out = Vec::new();
    while out.len() < t {
        let mut order: Vec<usize> = (0..adj.len()).collect();
        order.shuffle(&mut rng);
        let mut shuffled = adj.clone();
        for list in shuffled.iter_mut() {
            list.shuffle(&mut rng);
        }
        let ml = hopcroft_karp(&shuffled, b.right(), &order);
        let edges: Vec<Edge> = ml.iter().enumerate().filter_map(|(x, y)| y.map(|y| (x, y))).collect();
        if edges.len() < quota {
            break;
        }
        for &(x, y) in &edges {
            adj[x].retain(|&z| z != y);
        }
        out.push(Matching::new(edges));
    }
    out
}
