use super::{FactorCertificate, MatchingError};
use crate::flow::{ArcId, Dinic};
use crate::graph::{Edge, OrientedGraph};

/// Split network: source -> out-copy (cap r), out-copy u -> in-copy v for each
/// edge uv (cap 1), in-copy -> sink (cap r).
fn split_flow(g: &OrientedGraph, r: usize) -> (bool, Dinic, Vec<(Edge, ArcId)>) {
    let n = g.n();
    let (s, t) = (2 * n, 2 * n + 1);
    let mut net = Dinic::new(2 * n + 2);
    for v in 0..n {
        net.add_edge(s, v, r as i64);
        net.add_edge(n + v, t, r as i64);
    }
    let arcs: Vec<(Edge, ArcId)> = g.edges().map(|(u, v)| ((u, v), net.add_edge(u, n + v, 1))).collect();
    let ok = net.max_flow(s, t) == (r * n) as i64;
    (ok, net, arcs)
}

pub fn has_oriented_r_factor(g: &OrientedGraph, r: usize) -> bool {
    if r == 0 {
        return true;
    }
    let ds = g.degree_summary();
    r <= ds.min_semi && split_flow(g, r).0
}

/// reg(G): the largest `r` for which `g` has a spanning sub-digraph with every
/// in- and out-degree equal to `r`. Feasibility is monotone in `r` (a regular
/// bipartite graph splits into perfect matchings), so binary search applies.
pub fn oriented_reg(g: &OrientedGraph) -> usize {
    if let Some(d) = g.regular_degree() {
        return d;
    }
    let (mut lo, mut hi) = (0, g.degree_summary().min_semi);
    while lo < hi {
        let mid = (lo + hi + 1) / 2;
        if split_flow(g, mid).0 {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

pub fn extract_oriented_r_factor(g: &OrientedGraph, r: usize) -> Result<FactorCertificate, MatchingError> {
    if r == 0 {
        return Ok(FactorCertificate { r, edges: Vec::new(), regular: true });
    }
    if r > g.degree_summary().min_semi {
        return Err(MatchingError::NoFactor { r });
    }
    let (ok, net, arcs) = split_flow(g, r);
    if !ok {
        return Err(MatchingError::NoFactor { r });
    }
    let edges = arcs.into_iter().filter(|&(_, id)| net.flow(id) == 1).map(|(e, _)| e).collect();
    Ok(FactorCertificate { r, edges, regular: true })
}
