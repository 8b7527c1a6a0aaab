//! Random split of `(G, D)` into `K³` edge-disjoint subproblems `H_i = D_i ∪ E_i ∪ F_i`.
//!
//! `K` random partitions of `V(G)` into `K²` near-equal sets give `K³` reservoirs
//! `W_i` (every vertex lies in exactly `K` of them). `F_i` is `G[W_i]` minus edges
//! that sit inside more than one reservoir. The remaining edges of the factor `D`
//! are dealt out at random: to `D_i` (inside `U_i = V \ W_i`) or to a connector
//! graph `E_i` (between `U_i` and `W_i`). The degree properties that the later
//! stages need are checked directly and the sampling is retried when they fail.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng as _;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Edge, OrientedGraph, Subgraph};
use crate::matching::FactorCertificate;
use crate::rng;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PartitionError {
    #[error("D is not a spanning regular subgraph of G: {0}")]
    NotSpanningRegular(String),
    #[error("K = {k} is too large for n = {n} (need K³ <= n/8)")]
    KTooLarge { k: usize, n: usize },
    #[error("K = {0} is invalid (need K >= 2)")]
    InvalidK(usize),
    #[error("eps = {0} is outside (0, 1)")]
    InvalidEps(f64),
    #[error("inconsistent subproblems: {0}")]
    InconsistentSpecs(String),
}

/// Achieved statistics of one subproblem.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SubproblemStats {
    pub index: usize,
    pub w_size: usize,
    pub u_size: usize,
    pub d_edges: usize,
    pub e_edges: usize,
    pub f_edges: usize,
    /// `δ⁰(D_i)` and `Δ⁰(D_i)` over `U_i`.
    pub d_min_semi: usize,
    pub d_max_semi: usize,
    /// `min_{u ∈ U_i} min(d⁺_{E_i}(u, W_i), d⁻_{E_i}(u, W_i))`.
    pub e_min_connector: usize,
    /// `δ⁰(F_i)`.
    pub f_min_semi: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SubproblemSpec {
    pub index: usize,
    pub u: Vec<usize>,
    pub w: Vec<usize>,
    pub d_edges: Vec<Edge>,
    pub e_edges: Vec<Edge>,
    pub f_edges: Vec<Edge>,
    pub stats: SubproblemStats,
}

impl SubproblemSpec {
    /// `H_i` as a spanning graph on `0..n`.
    pub fn h_graph(&self, n: usize) -> OrientedGraph {
        OrientedGraph::new(n, self.h_edges()).expect("subproblem edges come from an oriented graph")
    }

    pub fn h_edges(&self) -> Vec<Edge> {
        let mut all: Vec<Edge> = self.d_edges.iter().chain(&self.e_edges).chain(&self.f_edges).copied().collect();
        all.sort_unstable();
        all
    }

    /// `D_i` relabelled onto `U_i`.
    pub fn d_graph(&self, n: usize) -> Subgraph {
        OrientedGraph::new(n, self.d_edges.iter().copied()).expect("subset of an oriented graph").induced(&self.u)
    }
}

/// Overrides for the lower bounds checked on each subproblem; `None` uses the default.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct PartitionFloors {
    /// Half-width of the allowed `D_i` degree window around the mean
    /// (default `2·sqrt(r̄ ln n)`).
    pub window: Option<f64>,
    /// Connector floor (default `ε|W_i|/4K`).
    pub connector: Option<f64>,
    /// Reservoir semi-degree floor (default `(β − ε)|W_i|` with `β = δ⁰(G)/n`).
    pub reservoir: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyCheck {
    pub property: u8,
    pub description: &'static str,
    pub target: f64,
    pub achieved: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PartitionReport {
    pub k: usize,
    pub eps: f64,
    pub n: usize,
    pub d: usize,
    pub subproblems: Vec<SubproblemStats>,
    pub properties: Vec<PropertyCheck>,
    pub all_met: bool,
    /// Every vertex lies in exactly `K` reservoirs.
    pub multiplicity_ok: bool,
    /// Mean number of `D`-neighbours sharing a reservoir with a vertex, over both directions.
    pub y_mean: f64,
    /// `(1 − ε)(d − y_mean)/(K³ − 2K)`, the expected `D_i` degree.
    pub r_expected: f64,
    /// Mean `D_i` out-degree over all subproblems.
    pub r_mean: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PartitionOutcome {
    pub specs: Vec<SubproblemSpec>,
    pub report: PartitionReport,
    pub seed_used: u64,
    pub attempts: usize,
}

/// Probability that an edge of `D'` goes to `D_i` for a given `i ∉ I_u ∪ I_v`.
pub fn d_probability(k: usize, eps: f64) -> f64 {
    (1.0 - eps) / (k.pow(3) - 2 * k) as f64
}

/// Probability that an edge of `D'` goes to `E_i` for a given `i ∈ I_u ∪ I_v`.
pub fn e_probability(k: usize, eps: f64) -> f64 {
    eps / (2 * k) as f64
}

fn check_inputs(g: &OrientedGraph, d: &FactorCertificate, k: usize, eps: f64) -> Result<(), PartitionError> {
    let n = g.n();
    if k < 2 {
        return Err(PartitionError::InvalidK(k));
    }
    if k.pow(3) * 8 > n {
        return Err(PartitionError::KTooLarge { k, n });
    }
    if !(eps > 0.0 && eps < 1.0) {
        return Err(PartitionError::InvalidEps(eps));
    }
    if let Some(&(u, v)) = d.edges.iter().find(|&&(u, v)| u >= n || v >= n || !g.has_edge(u, v)) {
        return Err(PartitionError::NotSpanningRegular(format!("({u}, {v}) is not an edge of G")));
    }
    let dg = OrientedGraph::new(n, d.edges.iter().copied())
        .map_err(|e| PartitionError::NotSpanningRegular(e.to_string()))?;
    if dg.regular_degree() != Some(d.r) {
        return Err(PartitionError::NotSpanningRegular(format!("not {}-regular", d.r)));
    }
    Ok(())
}

/// Builds the `K³` subproblems; resamples with seed `seed + attempt` until every
/// property holds or `retry_budget` attempts are spent, then returns the best attempt.
pub fn build_partition(
    g: &OrientedGraph,
    d: &FactorCertificate,
    k: usize,
    eps: f64,
    seed: u64,
    retry_budget: usize,
    floors: &PartitionFloors,
) -> Result<PartitionOutcome, PartitionError> {
    check_inputs(g, d, k, eps)?;
    let mut best: Option<((usize, f64), PartitionOutcome)> = None;
    let mut ran = 0;
    for attempt in 0..retry_budget.max(1) {
        ran = attempt + 1;
        let seed_used = seed.wrapping_add(attempt as u64);
        let (specs, report) = sample(g, d, k, eps, seed_used, floors);
        let score = score(&report);
        let outcome = PartitionOutcome { specs, report, seed_used, attempts: attempt + 1 };
        let done = outcome.report.all_met;
        if best.as_ref().map_or(true, |(s, _)| score < *s) {
            best = Some((score, outcome));
        }
        if done {
            break;
        }
    }
    let (_, mut outcome) = best.expect("at least one attempt");
    outcome.attempts = ran;
    Ok(outcome)
}

/// Failed property count, then total relative shortfall.
fn score(report: &PartitionReport) -> (usize, f64) {
    let failed = report.properties.iter().filter(|p| !p.pass).count();
    let shortfall = report
        .properties
        .iter()
        .filter(|p| !p.pass)
        .map(|p| (p.achieved - p.target).abs() / p.target.abs().max(1.0))
        .sum();
    (failed, shortfall)
}

fn sample(
    g: &OrientedGraph,
    d: &FactorCertificate,
    k: usize,
    eps: f64,
    seed: u64,
    floors: &PartitionFloors,
) -> (Vec<SubproblemSpec>, PartitionReport) {
    let n = g.n();
    let k2 = k * k;
    let k3 = k2 * k;
    let mut rng = rng::seeded(seed);

    // W_{k·K² + ℓ} = S_{k,ℓ}
    let mut reservoirs: Vec<Vec<usize>> = Vec::with_capacity(k3);
    for _ in 0..k {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let (base, extra) = (n / k2, n % k2);
        let mut rest = order.as_slice();
        for l in 0..k2 {
            let (head, tail) = rest.split_at(base + usize::from(l < extra));
            let mut part = head.to_vec();
            part.sort_unstable();
            reservoirs.push(part);
            rest = tail;
        }
    }
    let mut member: Vec<Vec<usize>> = vec![Vec::with_capacity(k); n];
    for (i, w) in reservoirs.iter().enumerate() {
        for &v in w {
            member[v].push(i);
        }
    }
    let shared = |u: usize, v: usize| -> Vec<usize> { member[u].iter().copied().filter(|i| member[v].contains(i)).collect() };

    let mut f_edges: Vec<Vec<Edge>> = vec![Vec::new(); k3];
    for (u, v) in g.edges() {
        if let [i] = shared(u, v)[..] {
            f_edges[i].push((u, v));
        }
    }

    // Bookkeeping counters, updated as edges are dealt.
    let mut d_edges: Vec<Vec<Edge>> = vec![Vec::new(); k3];
    let mut e_edges: Vec<Vec<Edge>> = vec![Vec::new(); k3];
    let mut d_out = vec![vec![0usize; n]; k3];
    let mut d_in = vec![vec![0usize; n]; k3];
    let mut e_out = vec![vec![0usize; n]; k3];
    let mut e_in = vec![vec![0usize; n]; k3];
    let (pd, pe) = (d_probability(k, eps), e_probability(k, eps));
    let mut inside_w = 0usize;
    for &(u, v) in &d.edges {
        if !shared(u, v).is_empty() {
            inside_w += 1;
            continue;
        }
        let endpoint_sets: Vec<usize> = member[u].iter().chain(&member[v]).copied().collect();
        debug_assert_eq!(endpoint_sets.len(), 2 * k, "I_u and I_v must be disjoint");
        let mut x: f64 = rng.gen();
        let mut target = None;
        for i in (0..k3).filter(|i| !endpoint_sets.contains(i)) {
            if x < pd {
                target = Some((i, false));
                break;
            }
            x -= pd;
        }
        if target.is_none() {
            let idx = ((x / pe) as usize).min(2 * k - 1);
            target = Some((endpoint_sets[idx], true));
        }
        let (i, connector) = target.unwrap();
        if connector {
            e_edges[i].push((u, v));
            // The U-side endpoint is the one outside W_i.
            if member[u].contains(&i) {
                e_in[i][v] += 1;
            } else {
                e_out[i][u] += 1;
            }
        } else {
            d_edges[i].push((u, v));
            d_out[i][u] += 1;
            d_in[i][v] += 1;
        }
    }

    let mut in_w = vec![vec![false; n]; k3];
    for (i, w) in reservoirs.iter().enumerate() {
        w.iter().for_each(|&v| in_w[i][v] = true);
    }
    let mut specs = Vec::with_capacity(k3);
    for i in 0..k3 {
        let u_set: Vec<usize> = (0..n).filter(|&v| !in_w[i][v]).collect();
        let f_graph = OrientedGraph::new(n, f_edges[i].iter().copied()).expect("subset of G").induced(&reservoirs[i]);
        let semi = |v: usize| d_out[i][v].min(d_in[i][v]);
        let stats = SubproblemStats {
            index: i,
            w_size: reservoirs[i].len(),
            u_size: u_set.len(),
            d_edges: d_edges[i].len(),
            e_edges: e_edges[i].len(),
            f_edges: f_edges[i].len(),
            d_min_semi: u_set.iter().map(|&v| semi(v)).min().unwrap_or(0),
            d_max_semi: u_set.iter().map(|&v| d_out[i][v].max(d_in[i][v])).max().unwrap_or(0),
            e_min_connector: u_set.iter().map(|&v| e_out[i][v].min(e_in[i][v])).min().unwrap_or(0),
            f_min_semi: f_graph.graph.degree_summary().min_semi,
        };
        let mut de = std::mem::take(&mut d_edges[i]);
        let mut ee = std::mem::take(&mut e_edges[i]);
        de.sort_unstable();
        ee.sort_unstable();
        specs.push(SubproblemSpec {
            index: i,
            u: u_set,
            w: reservoirs[i].clone(),
            d_edges: de,
            e_edges: ee,
            f_edges: std::mem::take(&mut f_edges[i]),
            stats,
        });
    }
    let y_mean = inside_w as f64 * 2.0 / (2 * n) as f64;
    let multiplicity_ok = member.iter().all(|m| m.len() == k);
    let report = assemble_report(g, d.r, k, eps, &specs, y_mean, multiplicity_ok, floors);
    (specs, report)
}

#[allow(clippy::too_many_arguments)]
fn assemble_report(
    g: &OrientedGraph,
    d: usize,
    k: usize,
    eps: f64,
    specs: &[SubproblemSpec],
    y_mean: f64,
    multiplicity_ok: bool,
    floors: &PartitionFloors,
) -> PartitionReport {
    let n = g.n();
    let k2 = k * k;
    let subproblems: Vec<SubproblemStats> = specs.iter().map(|s| s.stats.clone()).collect();
    let d_total: usize = subproblems.iter().map(|s| s.d_edges).sum();
    let u_total: usize = subproblems.iter().map(|s| s.u_size).sum();
    let r_mean = if u_total == 0 { 0.0 } else { d_total as f64 / u_total as f64 };
    let r_expected = (1.0 - eps) * (d as f64 - y_mean) / (k.pow(3) - 2 * k) as f64;

    let (lo, hi) = (n / k2, n.div_ceil(k2));
    let sizes = subproblems.iter().map(|s| s.w_size);
    let spread = sizes.clone().max().unwrap_or(0) - sizes.clone().min().unwrap_or(0);
    let sizes_ok = sizes.clone().all(|s| s == lo || s == hi);

    let window = floors.window.unwrap_or(2.0 * (r_mean * (n as f64).ln()).max(0.0).sqrt());
    let window_achieved = subproblems
        .iter()
        .map(|s| (r_mean - s.d_min_semi as f64).max(s.d_max_semi as f64 - r_mean))
        .fold(0.0, f64::max);

    let beta = g.degree_summary().min_semi as f64 / n as f64;
    let margin = |floor: &dyn Fn(&SubproblemStats) -> f64, value: &dyn Fn(&SubproblemStats) -> f64| {
        subproblems.iter().map(|s| value(s) - floor(s)).fold(f64::INFINITY, f64::min)
    };
    let connector_margin = margin(
        &|s| floors.connector.unwrap_or(eps * s.w_size as f64 / (4 * k) as f64),
        &|s| s.e_min_connector as f64,
    );
    let reservoir_margin = margin(
        &|s| floors.reservoir.unwrap_or((beta - eps) * s.w_size as f64),
        &|s| s.f_min_semi as f64,
    );

    let properties = vec![
        PropertyCheck {
            property: 1,
            description: "reservoir sizes are floor or ceil of n/K²",
            target: 1.0,
            achieved: spread as f64,
            pass: sizes_ok && spread <= 1,
        },
        PropertyCheck {
            property: 2,
            description: "D_i semi-degrees within the window around the mean",
            target: window,
            achieved: window_achieved,
            pass: window_achieved <= window,
        },
        PropertyCheck {
            property: 3,
            description: "connector degree margin over the floor",
            target: 0.0,
            achieved: connector_margin,
            pass: connector_margin >= 0.0,
        },
        PropertyCheck {
            property: 4,
            description: "reservoir semi-degree margin over the floor",
            target: 0.0,
            achieved: reservoir_margin,
            pass: reservoir_margin >= 0.0,
        },
    ];
    let all_met = multiplicity_ok && properties.iter().all(|p| p.pass);
    PartitionReport {
        k,
        eps,
        n,
        d,
        subproblems,
        properties,
        all_met,
        multiplicity_ok,
        y_mean,
        r_expected,
        r_mean,
    }
}

/// Recomputes every statistic from the emitted edge sets alone and checks the
/// structural invariants of the split.
pub fn verify_partition(
    g: &OrientedGraph,
    d: &FactorCertificate,
    k: usize,
    eps: f64,
    specs: &[SubproblemSpec],
    floors: &PartitionFloors,
) -> Result<PartitionReport, PartitionError> {
    check_inputs(g, d, k, eps)?;
    let bad = |msg: String| Err(PartitionError::InconsistentSpecs(msg));
    let n = g.n();
    if specs.len() != k.pow(3) {
        return bad(format!("{} subproblems, expected {}", specs.len(), k.pow(3)));
    }
    let d_set: HashSet<Edge> = d.edges.iter().copied().collect();
    let mut seen: HashSet<Edge> = HashSet::new();
    let mut multiplicity = vec![0usize; n];
    let mut stats = Vec::with_capacity(specs.len());
    for (i, s) in specs.iter().enumerate() {
        let mut side = vec![None; n];
        for &v in &s.u {
            side[v] = Some(false);
        }
        for &v in &s.w {
            if side[v].is_some() {
                return bad(format!("vertex {v} in both U and W of subproblem {i}"));
            }
            side[v] = Some(true);
            multiplicity[v] += 1;
        }
        if side.iter().any(|x| x.is_none()) {
            return bad(format!("U and W of subproblem {i} do not cover V"));
        }
        let in_w = |v: usize| side[v] == Some(true);
        for (name, edges) in [("D", &s.d_edges), ("E", &s.e_edges), ("F", &s.f_edges)] {
            for &(u, v) in edges {
                if !g.has_edge(u, v) {
                    return bad(format!("{name}_{i} edge ({u}, {v}) is not in G"));
                }
                let placed = match name {
                    "D" => !in_w(u) && !in_w(v) && d_set.contains(&(u, v)),
                    "E" => in_w(u) != in_w(v) && d_set.contains(&(u, v)),
                    _ => in_w(u) && in_w(v),
                };
                if !placed {
                    return bad(format!("{name}_{i} edge ({u}, {v}) is misplaced"));
                }
                if !seen.insert((u, v)) {
                    return bad(format!("edge ({u}, {v}) appears in more than one subgraph"));
                }
            }
        }
        let mask_w: Vec<bool> = (0..n).map(in_w).collect();
        let dg = OrientedGraph::new(n, s.d_edges.iter().copied()).expect("checked subset of G");
        let eg = OrientedGraph::new(n, s.e_edges.iter().copied()).expect("checked subset of G");
        let fg = OrientedGraph::new(n, s.f_edges.iter().copied()).expect("checked subset of G");
        stats.push(SubproblemStats {
            index: i,
            w_size: s.w.len(),
            u_size: s.u.len(),
            d_edges: s.d_edges.len(),
            e_edges: s.e_edges.len(),
            f_edges: s.f_edges.len(),
            d_min_semi: s.u.iter().map(|&v| dg.out_degree(v).min(dg.in_degree(v))).min().unwrap_or(0),
            d_max_semi: s.u.iter().map(|&v| dg.out_degree(v).max(dg.in_degree(v))).max().unwrap_or(0),
            e_min_connector: s
                .u
                .iter()
                .map(|&v| eg.out_degree_into(v, &mask_w).min(eg.in_degree_from(v, &mask_w)))
                .min()
                .unwrap_or(0),
            f_min_semi: fg.induced(&s.w).graph.degree_summary().min_semi,
        });
    }
    // D-edges with both ends in a common reservoir.
    let inside_w = d
        .edges
        .iter()
        .filter(|&&(u, v)| specs.iter().any(|s| s.w.contains(&u) && s.w.contains(&v)))
        .count();
    let y_mean = inside_w as f64 * 2.0 / (2 * n) as f64;
    let multiplicity_ok = multiplicity.iter().all(|&m| m == k);
    let rebuilt: Vec<SubproblemSpec> =
        specs.iter().zip(stats).map(|(s, stats)| SubproblemSpec { stats, ..s.clone() }).collect();
    Ok(assemble_report(g, d.r, k, eps, &rebuilt, y_mean, multiplicity_ok, floors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::rotational_tournament;

    fn setup(n: usize) -> (OrientedGraph, FactorCertificate) {
        let g = rotational_tournament(n).unwrap();
        let d = FactorCertificate { r: (n - 1) / 2, edges: g.edge_vec(), regular: true };
        (g, d)
    }

    #[test]
    fn probabilities_sum_to_one() {
        for k in 2usize..6 {
            for eps in [0.1, 0.3, 0.5, 0.9] {
                let total = (k.pow(3) - 2 * k) as f64 * d_probability(k, eps) + (2 * k) as f64 * e_probability(k, eps);
                assert!((total - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn input_validation() {
        let (g, d) = setup(101);
        let f = PartitionFloors::default();
        assert_eq!(build_partition(&g, &d, 1, 0.3, 0, 1, &f), Err(PartitionError::InvalidK(1)));
        assert_eq!(build_partition(&g, &d, 3, 0.3, 0, 1, &f), Err(PartitionError::KTooLarge { k: 3, n: 101 }));
        assert_eq!(build_partition(&g, &d, 2, 1.5, 0, 1, &f), Err(PartitionError::InvalidEps(1.5)));
        let partial = FactorCertificate { r: 50, edges: d.edges[1..].to_vec(), regular: true };
        assert!(matches!(build_partition(&g, &partial, 2, 0.3, 0, 1, &f), Err(PartitionError::NotSpanningRegular(_))));
    }

    #[test]
    fn structure_on_rotational_101() {
        let (g, d) = setup(101);
        let out = build_partition(&g, &d, 2, 0.3, 7, 5, &PartitionFloors::default()).unwrap();
        assert_eq!(out.specs.len(), 8);
        assert!(out.specs.iter().all(|s| s.w.len() == 25 || s.w.len() == 26));
        let mut all: Vec<Edge> = out.specs.iter().flat_map(|s| s.h_edges()).collect();
        let total = all.len();
        all.sort_unstable();
        all.dedup();
        assert_eq!(total, all.len());
        assert!(out.report.multiplicity_ok);
        let again = verify_partition(&g, &d, 2, 0.3, &out.specs, &PartitionFloors::default()).unwrap();
        assert_eq!(again, out.report);
    }

    #[test]
    fn verify_rejects_duplicated_edge() {
        let (g, d) = setup(101);
        let out = build_partition(&g, &d, 2, 0.3, 1, 1, &PartitionFloors::default()).unwrap();
        let mut specs = out.specs.clone();
        // Copy a D_0 edge into another D_j whose U_j also holds both endpoints.
        let (i, j, e) = (0..8)
            .flat_map(|i| (0..8).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j)
            .find_map(|(i, j)| {
                specs[i]
                    .d_edges
                    .iter()
                    .find(|&&(u, v)| specs[j].u.contains(&u) && specs[j].u.contains(&v))
                    .map(|&e| (i, j, e))
            })
            .unwrap();
        assert_ne!(i, j);
        specs[j].d_edges.push(e);
        let err = verify_partition(&g, &d, 2, 0.3, &specs, &PartitionFloors::default()).unwrap_err();
        assert!(matches!(err, PartitionError::InconsistentSpecs(ref m) if m.contains("more than one")), "{err}");
    }

    #[test]
    fn uneven_reservoirs_fail_property_one() {
        let (g, d) = setup(101);
        let out = build_partition(&g, &d, 2, 0.3, 1, 1, &PartitionFloors::default()).unwrap();
        let mut specs = out.specs.clone();
        // Move two vertices from W_0 to U_0 (and drop their F_0 edges).
        let moved: Vec<usize> = specs[0].w.drain(..2).collect();
        specs[0].u.extend(&moved);
        specs[0].u.sort_unstable();
        specs[0].f_edges.retain(|&(a, b)| !moved.contains(&a) && !moved.contains(&b));
        specs[0].e_edges.retain(|&(a, b)| !moved.contains(&a) && !moved.contains(&b));
        let report = verify_partition(&g, &d, 2, 0.3, &specs, &PartitionFloors::default()).unwrap();
        assert!(!report.properties[0].pass);
        assert!(!report.all_met);
    }

    #[test]
    fn deterministic_given_seed() {
        let (g, d) = setup(65);
        let f = PartitionFloors::default();
        assert_eq!(build_partition(&g, &d, 2, 0.3, 4, 2, &f), build_partition(&g, &d, 2, 0.3, 4, 2, &f));
    }
}
