use super::{FactorCertificate, MatchingError};
use crate::flow::Dinic;
use crate::graph::{BipartiteGraph, Edge};

pub const GALE_RYSER_MAX_M: usize = 12;

const EPS: f64 = 1e-9;

fn require_balanced(b: &BipartiteGraph) -> Result<usize, MatchingError> {
    if b.is_balanced() {
        Ok(b.left())
    } else {
        Err(MatchingError::Unbalanced { left: b.left(), right: b.right() })
    }
}

/// Runs the degree-prescribed flow `s -> a (cap_left[a])`, `a -> b (1, if allowed)`,
/// `b -> t (cap_right[b])` and returns the saturated pairs when every source arc
/// is saturated.
fn prescribed_degree_subgraph(
    left: usize,
    right: usize,
    allowed: impl Iterator<Item = Edge>,
    cap_left: &[usize],
    cap_right: &[usize],
) -> Option<Vec<Edge>> {
    let demand: usize = cap_left.iter().sum();
    if demand != cap_right.iter().sum::<usize>() {
        return None;
    }
    let s = left + right;
    let t = s + 1;
    let mut net = Dinic::new(t + 1);
    for (a, &c) in cap_left.iter().enumerate() {
        net.add_edge(s, a, c as i64);
    }
    for (b, &c) in cap_right.iter().enumerate() {
        net.add_edge(left + b, t, c as i64);
    }
    let arcs: Vec<(Edge, _)> = allowed.map(|(a, b)| ((a, b), net.add_edge(a, left + b, 1))).collect();
    if net.max_flow(s, t) as usize != demand {
        return None;
    }
    Some(arcs.into_iter().filter(|&(_, id)| net.flow(id) == 1).map(|(e, _)| e).collect())
}

fn flow_r_factor(b: &BipartiteGraph, r: usize) -> Option<Vec<Edge>> {
    let m = b.left();
    prescribed_degree_subgraph(m, m, b.edges(), &vec![r; m], &vec![r; m])
}

/// Whether `b` has an `r`-regular spanning subgraph (max-flow decision).
pub fn has_bipartite_r_factor(b: &BipartiteGraph, r: usize) -> Result<bool, MatchingError> {
    let m = require_balanced(b)?;
    if r > m {
        return Err(MatchingError::ROutOfRange { r, m });
    }
    Ok(flow_r_factor(b, r).is_some())
}

/// The subset inequality `e(X, Y) >= r(|X| + |Y| - m)` checked over every
/// `X ⊆ A`, `Y ⊆ B`. Exponential; limited to `m <= 12`.
pub fn gale_ryser_oracle(b: &BipartiteGraph, r: usize) -> Result<bool, MatchingError> {
    let m = require_balanced(b)?;
    if m > GALE_RYSER_MAX_M {
        return Err(MatchingError::TooLarge { m, max: GALE_RYSER_MAX_M });
    }
    if r > m {
        return Err(MatchingError::ROutOfRange { r, m });
    }
    let rows: Vec<u32> = (0..m)
        .map(|a| b.neighbors_of_left(a).iter().fold(0u32, |acc, &y| acc | 1 << y))
        .collect();
    for x in 0u32..1 << m {
        let xs = x.count_ones() as i64;
        for y in 0u32..1 << m {
            let e: i64 = (0..m)
                .filter(|&a| x >> a & 1 == 1)
                .map(|a| (rows[a] & y).count_ones() as i64)
                .sum();
            if e < r as i64 * (xs + y.count_ones() as i64 - m as i64) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// An `r`-regular spanning subgraph of `b`, extracted from an integral flow.
pub fn extract_bipartite_r_factor(b: &BipartiteGraph, r: usize) -> Result<FactorCertificate, MatchingError> {
    let m = require_balanced(b)?;
    if r > m {
        return Err(MatchingError::ROutOfRange { r, m });
    }
    let edges = flow_r_factor(b, r).ok_or(MatchingError::NoFactor { r })?;
    Ok(FactorCertificate { r, edges, regular: true })
}

/// An `αm`-factor of a bipartite graph whose degrees lie in
/// `[αm + ξ, αm + ξ + ξ²/m]`, with `α >= 1/2`. The window guarantees existence,
/// so a `NoFactor` result here indicates a bug.
pub fn almost_regular_factor(b: &BipartiteGraph, alpha: f64, xi: f64) -> Result<FactorCertificate, MatchingError> {
    let m = require_balanced(b)?;
    if alpha < 0.5 - EPS || alpha > 1.0 + EPS {
        return Err(MatchingError::HypothesisViolated(format!("alpha = {alpha} outside [1/2, 1]")));
    }
    if xi < 0.0 {
        return Err(MatchingError::HypothesisViolated(format!("xi = {xi} is negative")));
    }
    let target = alpha * m as f64;
    if (target - target.round()).abs() > EPS {
        return Err(MatchingError::HypothesisViolated(format!("alpha*m = {target} is not an integer")));
    }
    let r = target.round() as usize;
    let (lo, hi) = b.degree_range();
    let mf = m as f64;
    if (lo as f64) < target + xi - EPS {
        return Err(MatchingError::HypothesisViolated(format!(
            "min degree {lo} < alpha*m + xi = {}",
            target + xi
        )));
    }
    if (hi as f64) > target + xi + xi * xi / mf + EPS {
        return Err(MatchingError::HypothesisViolated(format!(
            "max degree {hi} > alpha*m + xi + xi^2/m = {}",
            target + xi + xi * xi / mf
        )));
    }
    let cert = extract_bipartite_r_factor(b, r);
    debug_assert!(cert.is_ok(), "factor lemma hypothesis held but no factor was found");
    cert
}

/// A `d`-regular bipartite supergraph of `b` on the same sides, if one exists.
///
/// For `2d <= m` this follows the complement route (an `(m-d)`-factor of the
/// bipartite complement, complemented back); otherwise the missing degrees are
/// filled directly by a flow over the non-edges. The two routes decide the same
/// question.
pub fn regular_supergraph(b: &BipartiteGraph, d: usize) -> Option<BipartiteGraph> {
    let m = b.left();
    if !b.is_balanced() || d > m || b.max_degree() > d {
        return None;
    }
    if 2 * d <= m {
        let comp = b.complement();
        let s = flow_r_factor(&comp, m - d)?;
        Some(comp.with_edges(s).complement())
    } else {
        let cap_left: Vec<usize> = (0..m).map(|a| d - b.left_degree(a)).collect();
        let cap_right: Vec<usize> = (0..m).map(|y| d - b.right_degree(y)).collect();
        let non_edges = (0..m).flat_map(|a| (0..m).filter(move |&y| !b.has_edge(a, y)).map(move |y| (a, y)));
        let added = prescribed_degree_subgraph(m, m, non_edges, &cap_left, &cap_right)?;
        Some(b.with_edges(b.edges().chain(added)))
    }
}

/// A `d`-regular supergraph of `b`, under the window
/// `d - ξ - ξ²/m <= δ(b) <= Δ(b) <= d - ξ`.
pub fn embed_in_regular(b: &BipartiteGraph, d: usize, xi: f64) -> Result<BipartiteGraph, MatchingError> {
    let m = require_balanced(b)?;
    if d > m {
        return Err(MatchingError::HypothesisViolated(format!("d = {d} exceeds side size {m}")));
    }
    if xi < 0.0 {
        return Err(MatchingError::HypothesisViolated(format!("xi = {xi} is negative")));
    }
    let (lo, hi) = b.degree_range();
    let df = d as f64;
    let floor = df - xi - xi * xi / m.max(1) as f64;
    if (lo as f64) < floor - EPS {
        return Err(MatchingError::HypothesisViolated(format!("min degree {lo} < d - xi - xi^2/m = {floor}")));
    }
    if (hi as f64) > df - xi + EPS {
        return Err(MatchingError::HypothesisViolated(format!("max degree {hi} > d - xi = {}", df - xi)));
    }
    regular_supergraph(b, d).ok_or(MatchingError::NoComplementFactor { d })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perfect_matching(m: usize) -> BipartiteGraph {
        BipartiteGraph::balanced(m, (0..m).map(|i| (i, i))).unwrap()
    }

    /// 8-cycle a0 b0 a1 b1 a2 b2 a3 b3 as a 2-regular bipartite graph, m = 4.
    fn eight_cycle() -> BipartiteGraph {
        BipartiteGraph::balanced(4, (0..4).flat_map(|i| [(i, i), ((i + 1) % 4, i)])).unwrap()
    }

    fn two_four_cycles() -> BipartiteGraph {
        BipartiteGraph::balanced(4, [(0, 0), (0, 1), (1, 0), (1, 1), (2, 2), (2, 3), (3, 2), (3, 3)]).unwrap()
    }

    fn is_r_regular_subgraph(b: &BipartiteGraph, edges: &[Edge], r: usize) -> bool {
        let m = b.left();
        let mut dl = vec![0; m];
        let mut dr = vec![0; m];
        for &(x, y) in edges {
            if !b.has_edge(x, y) {
                return false;
            }
            dl[x] += 1;
            dr[y] += 1;
        }
        dl.iter().chain(dr.iter()).all(|&d| d == r)
    }

    #[test]
    fn factor_existence_examples() {
        assert!(has_bipartite_r_factor(&BipartiteGraph::complete(3), 3).unwrap());
        assert!(!has_bipartite_r_factor(&perfect_matching(3), 2).unwrap());
        assert!(has_bipartite_r_factor(&eight_cycle(), 1).unwrap());
        assert_eq!(
            has_bipartite_r_factor(&perfect_matching(3), 4),
            Err(MatchingError::ROutOfRange { r: 4, m: 3 })
        );
    }

    #[test]
    fn oracle_examples() {
        assert!(gale_ryser_oracle(&BipartiteGraph::complete(3), 3).unwrap());
        assert!(!gale_ryser_oracle(&perfect_matching(3), 2).unwrap());
        assert!(matches!(
            gale_ryser_oracle(&perfect_matching(13), 1),
            Err(MatchingError::TooLarge { m: 13, max: 12 })
        ));
    }

    #[test]
    fn extraction_examples() {
        let k3 = BipartiteGraph::complete(3);
        let f = extract_bipartite_r_factor(&k3, 1).unwrap();
        assert_eq!(f.edges.len(), 3);
        assert!(is_r_regular_subgraph(&k3, &f.edges, 1));

        let c = two_four_cycles();
        let f = extract_bipartite_r_factor(&c, 2).unwrap();
        assert_eq!(f.edges, c.edges().collect::<Vec<_>>());

        let k4 = BipartiteGraph::complete(4);
        let f = extract_bipartite_r_factor(&k4, 2).unwrap();
        assert_eq!(f.edges.len(), 8);
        assert!(is_r_regular_subgraph(&k4, &f.edges, 2));

        assert_eq!(extract_bipartite_r_factor(&perfect_matching(3), 2), Err(MatchingError::NoFactor { r: 2 }));
    }

    #[test]
    fn almost_regular_factor_examples() {
        let c = two_four_cycles();
        let f = almost_regular_factor(&c, 0.5, 0.0).unwrap();
        assert_eq!(f.edges, c.edges().collect::<Vec<_>>());

        // K_{4,4} minus a perfect matching is 3-regular.
        let k = BipartiteGraph::balanced(4, (0..4).flat_map(|a| (0..4).filter(move |&b| b != a).map(move |b| (a, b))))
            .unwrap();
        let f = almost_regular_factor(&k, 0.75, 0.0).unwrap();
        assert_eq!(f.edges.len(), 12);

        // 4-regular circulant on m = 6: a -> a, a+1, a+2, a+3.
        let four = BipartiteGraph::balanced(6, (0..6).flat_map(|a| (0..4).map(move |j| (a, (a + j) % 6)))).unwrap();
        let f = almost_regular_factor(&four, 0.5, 1.0).unwrap();
        assert!(is_r_regular_subgraph(&four, &f.edges, 3));
    }

    #[test]
    fn almost_regular_factor_checks_window() {
        let four = BipartiteGraph::balanced(6, (0..6).flat_map(|a| (0..4).map(move |j| (a, (a + j) % 6)))).unwrap();
        assert!(matches!(almost_regular_factor(&four, 0.5, 2.0), Err(MatchingError::HypothesisViolated(_))));
        assert!(matches!(almost_regular_factor(&four, 0.4, 0.0), Err(MatchingError::HypothesisViolated(_))));
        assert!(matches!(almost_regular_factor(&four, 0.55, 0.0), Err(MatchingError::HypothesisViolated(_))));
    }

    #[test]
    fn embed_examples() {
        let c = two_four_cycles();
        assert_eq!(embed_in_regular(&c, 2, 0.0).unwrap(), c);

        let pm = perfect_matching(3);
        let h = embed_in_regular(&pm, 2, 1.0).unwrap();
        assert_eq!(h.regular_degree(), Some(2));
        assert!(pm.edges().all(|(a, b)| h.has_edge(a, b)));

        assert!(matches!(embed_in_regular(&c, 2, 1.0), Err(MatchingError::HypothesisViolated(_))));
    }

    #[test]
    fn supergraph_routes_agree_on_existence() {
        // Both routes are exercised: d <= m/2 and d > m/2.
        let pm = perfect_matching(6);
        for d in 1..=6 {
            let h = regular_supergraph(&pm, d).unwrap();
            assert_eq!(h.regular_degree(), Some(d));
            assert!(pm.edges().all(|(a, b)| h.has_edge(a, b)));
        }
        // A star-ish graph with a vertex of degree 3 cannot sit inside a 2-regular graph.
        let star = BipartiteGraph::balanced(3, [(0, 0), (0, 1), (0, 2)]).unwrap();
        assert!(regular_supergraph(&star, 2).is_none());
        assert!(regular_supergraph(&star, 3).is_some());
    }
}
