use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::assembly::HamiltonCycle;
use crate::graph::{edgelist, Edge, OrientedGraph};

/// Edge-disjoint Hamilton cycles of a host graph plus the unused edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionCertificate {
    pub n: usize,
    pub graph_sha256: String,
    pub cycles: Vec<HamiltonCycle>,
    pub leftover: Vec<Edge>,
    pub reg: usize,
    pub k: usize,
}

impl DecompositionCertificate {
    /// Builds a certificate for `cycles`, deriving the leftover edges from `g`.
    pub fn new(g: &OrientedGraph, mut cycles: Vec<HamiltonCycle>, reg: usize) -> Self {
        cycles.sort();
        let used: HashSet<Edge> = cycles.iter().flat_map(|c| c.edges()).collect();
        let leftover = g.edges().filter(|e| !used.contains(e)).collect();
        DecompositionCertificate {
            n: g.n(),
            graph_sha256: edgelist::sha256_hex(g),
            k: cycles.len(),
            cycles,
            leftover,
            reg,
        }
    }

    pub fn ratio(&self) -> f64 {
        if self.reg == 0 {
            0.0
        } else {
            self.k as f64 / self.reg as f64
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    VertexCount { claimed: usize, actual: usize },
    HashMismatch,
    NotHamiltonian { cycle: usize },
    NonEdge { cycle: usize, edge: Edge },
    EdgeReuse { edge: Edge },
    LeftoverNotInGraph { edge: Edge },
    LeftoverOverlapsCycle { edge: Edge },
    LeftoverIncomplete { missing: usize },
    CountMismatch { k: usize, cycles: usize },
    ExceedsReg { k: usize, reg: usize },
    RegAboveSemiDegree { reg: usize, min_semi: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub ok: bool,
    pub violation: Option<Violation>,
}

/// Checks a certificate against `g` from first principles and reports the
/// first violated invariant.
pub fn verify_certificate(g: &OrientedGraph, cert: &DecompositionCertificate) -> Verification {
    let fail = |v| Verification { ok: false, violation: Some(v) };
    let n = g.n();
    if cert.n != n {
        return fail(Violation::VertexCount { claimed: cert.n, actual: n });
    }
    if cert.graph_sha256 != edgelist::sha256_hex(g) {
        return fail(Violation::HashMismatch);
    }
    let mut used: HashSet<Edge> = HashSet::new();
    for (i, c) in cert.cycles.iter().enumerate() {
        let order = c.order();
        let mut seen = vec![false; n];
        let spanning = order.len() == n && n >= 2 && order.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true));
        if !spanning {
            return fail(Violation::NotHamiltonian { cycle: i });
        }
        for j in 0..n {
            let e = (order[j], order[(j + 1) % n]);
            if !g.has_edge(e.0, e.1) {
                return fail(Violation::NonEdge { cycle: i, edge: e });
            }
            if !used.insert(e) {
                return fail(Violation::EdgeReuse { edge: e });
            }
        }
    }
    let mut listed: HashSet<Edge> = HashSet::new();
    for &e in &cert.leftover {
        if e.0 >= n || e.1 >= n || !g.has_edge(e.0, e.1) {
            return fail(Violation::LeftoverNotInGraph { edge: e });
        }
        if used.contains(&e) {
            return fail(Violation::LeftoverOverlapsCycle { edge: e });
        }
        if !listed.insert(e) {
            return fail(Violation::EdgeReuse { edge: e });
        }
    }
    if used.len() + listed.len() != g.edge_count() {
        return fail(Violation::LeftoverIncomplete { missing: g.edge_count() - used.len() - listed.len() });
    }
    if cert.k != cert.cycles.len() {
        return fail(Violation::CountMismatch { k: cert.k, cycles: cert.cycles.len() });
    }
    if cert.k > cert.reg {
        return fail(Violation::ExceedsReg { k: cert.k, reg: cert.reg });
    }
    let min_semi = (0..n).map(|v| g.out_degree(v).min(g.in_degree(v))).min().unwrap_or(0);
    if cert.reg > min_semi {
        return fail(Violation::RegAboveSemiDegree { reg: cert.reg, min_semi });
    }
    Verification { ok: true, violation: None }
}
