use std::collections::HashMap;

use rand::seq::SliceRandom;
use rayon::prelude::*;

use super::{complete_digraph_path_decomposition, DirectedPath, PathCover, PathCoverError, PathCoverFamily};
use crate::graph::{bipartite_between_unbalanced, OrientedGraph};
use crate::matching::{peel_max_matchings, sample_matching_family_partial, Matching};
use crate::rng;

/// Random equipartitions tried before settling for the best one seen.
pub const PARTITION_RETRIES: usize = 10;

/// Chains matchings between consecutive parts into a path cover of the union of
/// the parts. `matchings[j]` is in part-local coordinates: `(x, y)` joins
/// `parts[j][x]` to `parts[j + 1][y]`.
pub fn matchings_to_path_cover(parts: &[Vec<usize>], matchings: &[Matching]) -> Result<PathCover, PathCoverError> {
    let mut part_of: HashMap<usize, usize> = HashMap::new();
    for (i, part) in parts.iter().enumerate() {
        for &v in part {
            if part_of.insert(v, i).is_some() {
                return Err(PathCoverError::PartsOverlap(v));
            }
        }
    }
    if !matchings.is_empty() && matchings.len() >= parts.len() {
        return Err(PathCoverError::TooManyMatchings { matchings: matchings.len(), parts: parts.len() });
    }
    let mut succ: HashMap<usize, usize> = HashMap::new();
    let mut has_pred: HashMap<usize, bool> = HashMap::new();
    for (j, m) in matchings.iter().enumerate() {
        if !m.is_matching() {
            return Err(PathCoverError::NotAMatching(j));
        }
        for &(x, y) in &m.edges {
            let ok = j + 1 < parts.len() && x < parts[j].len() && y < parts[j + 1].len();
            if !ok {
                return Err(PathCoverError::MatchingOutOfParts { index: j, edge: (x, y) });
            }
            let (u, v) = (parts[j][x], parts[j + 1][y]);
            succ.insert(u, v);
            has_pred.insert(v, true);
        }
    }
    let mut paths = Vec::new();
    for &v in parts.iter().flatten() {
        if has_pred.contains_key(&v) {
            continue;
        }
        let mut vertices = vec![v];
        let mut cur = v;
        while let Some(&next) = succ.get(&cur) {
            vertices.push(next);
            cur = next;
        }
        paths.push(DirectedPath::new(vertices));
    }
    Ok(PathCover { paths })
}

/// Result of [`build_path_cover_family`], with the diagnostics needed to judge
/// how far the family fell short of the request.
#[derive(Clone, Debug)]
pub struct PathCoverOutcome {
    pub family: PathCoverFamily,
    /// `δ⁰` of the union of all covers, recomputed from the family.
    pub min_degree_of_union: usize,
    pub requested_t: usize,
    pub parts: Vec<Vec<usize>>,
    /// Matchings supplied per `(path index, position)` pair.
    pub pair_counts: Vec<Vec<usize>>,
    /// The pair that supplied the fewest matchings.
    pub limiting_pair: Option<(usize, usize)>,
    pub partition_attempts: usize,
    pub degree_deviation: f64,
    pub deviation_threshold: f64,
}

fn equipartition(n: usize, b: usize, rng: &mut rng::Rng) -> Vec<Vec<usize>> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let (base, extra) = (n / b, n % b);
    let mut parts = Vec::with_capacity(b);
    let mut rest = order.as_slice();
    for i in 0..b {
        let (head, tail) = rest.split_at(base + usize::from(i < extra));
        let mut part = head.to_vec();
        part.sort_unstable();
        parts.push(part);
        rest = tail;
    }
    parts
}

/// Largest gap between a vertex's degree into a part and its proportional share.
fn degree_deviation(h: &OrientedGraph, parts: &[Vec<usize>]) -> f64 {
    let n = h.n();
    if n < 2 {
        return 0.0;
    }
    let mut worst = 0f64;
    for part in parts {
        let mut mask = vec![false; n];
        part.iter().for_each(|&v| mask[v] = true);
        for v in 0..n {
            let share = (part.len() - usize::from(mask[v])) as f64 / (n - 1) as f64;
            let out = (h.out_degree_into(v, &mask) as f64 - share * h.out_degree(v) as f64).abs();
            let inn = (h.in_degree_from(v, &mask) as f64 - share * h.in_degree(v) as f64).abs();
            worst = worst.max(out).max(inn);
        }
    }
    worst
}

/// Builds up to `t` edge-disjoint path covers of `h`, each with at most `a` paths.
///
/// `V(h)` is split into `b` near-equal random parts. For every directed
/// Hamilton path `Q` of the complete digraph on the parts, and every consecutive
/// pair of parts along `Q`, edge-disjoint matchings are drawn from the
/// bipartite graph of edges between them; the `i`-th matchings along `Q` chain
/// into the `i`-th cover for `Q`. Matching sizes are bounded below so that every
/// cover has at most `a` paths.
///
/// Returns fewer than `t` covers when the matchings run out; fails with
/// `QuotaUnreachable` only if no cover at all can be formed.
pub fn build_path_cover_family(
    h: &OrientedGraph,
    b: usize,
    a: usize,
    t: usize,
    xi: usize,
    seed: u64,
) -> Result<PathCoverOutcome, PathCoverError> {
    let decomposition = complete_digraph_path_decomposition(b)?;
    let n = h.n();
    if b < 2 || b > n / 2 {
        return Err(PathCoverError::PartsTooSmall { b, n });
    }
    let empty = |parts, attempts, dev, thr| PathCoverOutcome {
        family: PathCoverFamily { covers: Vec::new(), a, t: 0 },
        min_degree_of_union: 0,
        requested_t: t,
        parts,
        pair_counts: Vec::new(),
        limiting_pair: None,
        partition_attempts: attempts,
        degree_deviation: dev,
        deviation_threshold: thr,
    };

    let largest = n.div_ceil(b) as f64;
    let threshold = 2.0 * (largest * largest.max(2.0).ln()).sqrt();
    let mut best: Option<(f64, Vec<Vec<usize>>)> = None;
    let mut attempts = 0;
    for attempt in 0..PARTITION_RETRIES {
        attempts = attempt + 1;
        let parts = equipartition(n, b, &mut rng::seeded(rng::derive(seed, attempt as u64)));
        let dev = degree_deviation(h, &parts);
        if best.as_ref().map_or(true, |(d, _)| dev < *d) {
            best = Some((dev, parts));
        }
        if dev <= threshold {
            break;
        }
    }
    let (deviation, parts) = best.expect("at least one attempt");
    if t == 0 {
        return Ok(empty(parts, attempts, deviation, threshold));
    }

    // Size quota per position along each Q so that covers have at most `a` paths.
    let per_q_target = t.div_ceil(b);
    let mut jobs = Vec::new();
    for (q, path) in decomposition.paths.iter().enumerate() {
        let mins: Vec<usize> = path.windows(2).map(|w| parts[w[0]].len().min(parts[w[1]].len())).collect();
        let best_size = n - mins.iter().sum::<usize>();
        if a < best_size {
            return Err(PathCoverError::BoundTooSmall { a, best: best_size, q });
        }
        let ell = (a - best_size) / (b - 1);
        for (j, &m) in mins.iter().enumerate() {
            jobs.push((q, j, m.saturating_sub(ell)));
        }
    }
    let drawn: Vec<Vec<Matching>> = jobs
        .par_iter()
        .map(|&(q, j, quota)| {
            let path = &decomposition.paths[q];
            let (x, y) = (&parts[path[j]], &parts[path[j + 1]]);
            let bg = bipartite_between_unbalanced(h, x, y).expect("parts are disjoint and in range");
            let pair_seed = rng::derive(seed ^ 0x5EED_0F_CA11, (q * b + j) as u64);
            let (lo, hi) = bg.degree_range();
            if bg.is_balanced() && hi - lo <= xi {
                if let Ok(s) = sample_matching_family_partial(&bg, quota, per_q_target, xi, pair_seed) {
                    return s.family.matchings;
                }
            }
            peel_max_matchings(&bg, quota, per_q_target, pair_seed)
        })
        .collect();

    let mut pair_counts = vec![vec![0; b - 1]; b];
    for (&(q, j, _), ms) in jobs.iter().zip(&drawn) {
        pair_counts[q][j] = ms.len();
    }
    let limiting_pair = (0..b)
        .flat_map(|q| (0..b - 1).map(move |j| (q, j)))
        .min_by_key(|&(q, j)| pair_counts[q][j]);
    let per_q: Vec<usize> = pair_counts.iter().map(|c| c.iter().copied().min().unwrap_or(0)).collect();

    let mut covers = Vec::new();
    'outer: for i in 0..per_q_target {
        for q in 0..b {
            if i >= per_q[q] {
                continue;
            }
            if covers.len() == t {
                break 'outer;
            }
            let path = &decomposition.paths[q];
            let q_parts: Vec<Vec<usize>> = path.iter().map(|&p| parts[p].clone()).collect();
            let ms: Vec<Matching> = (0..b - 1).map(|j| drawn[q * (b - 1) + j][i].clone()).collect();
            let cover = matchings_to_path_cover(&q_parts, &ms)?;
            debug_assert!(cover.size() <= a);
            covers.push(cover);
        }
    }
    if covers.is_empty() {
        let (q, j) = limiting_pair.expect("b >= 2");
        return Err(PathCoverError::QuotaUnreachable {
            achieved: pair_counts[q][j],
            required: per_q_target,
            pair: (q, j),
        });
    }
    let family = PathCoverFamily { t: covers.len(), covers, a };
    let min_degree_of_union = family.union_graph(n).degree_summary().min_semi;
    Ok(PathCoverOutcome {
        family,
        min_degree_of_union,
        requested_t: t,
        parts,
        pair_counts,
        limiting_pair,
        partition_attempts: attempts,
        degree_deviation: deviation,
        deviation_threshold: threshold,
    })
}
