use crate::assembly::HamiltonCycle;
use crate::graph::OrientedGraph;

/// Turns a regular leftover graph into Hamilton cycles, or nothing.
pub trait CompletionStage: Sync {
    fn name(&self) -> &'static str;
    fn complete(&self, leftover: &OrientedGraph) -> Vec<HamiltonCycle>;
}

pub struct NoCompletion;

impl CompletionStage for NoCompletion {
    fn name(&self) -> &'static str {
        "none"
    }

    fn complete(&self, _: &OrientedGraph) -> Vec<HamiltonCycle> {
        Vec::new()
    }
}

/// Exact Hamilton decomposition of a tiny, low-degree regular leftover.
pub struct ExactBacktracking {
    pub max_n: usize,
    pub max_degree: usize,
}

impl Default for ExactBacktracking {
    fn default() -> Self {
        ExactBacktracking { max_n: 12, max_degree: 2 }
    }
}

impl CompletionStage for ExactBacktracking {
    fn name(&self) -> &'static str {
        "exact-backtracking"
    }

    fn complete(&self, leftover: &OrientedGraph) -> Vec<HamiltonCycle> {
        match leftover.regular_degree() {
            Some(r) if r >= 1 && r <= self.max_degree && leftover.n() <= self.max_n => {
                find_hamilton_decomposition(leftover).unwrap_or_default()
            }
            _ => Vec::new(),
        }
    }
}

/// Some partition of `E(g)` into Hamilton cycles, found by always covering the
/// smallest remaining edge next. `None` if there is none. Intended for `n <= 64`.
pub fn find_hamilton_decomposition(g: &OrientedGraph) -> Option<Vec<HamiltonCycle>> {
    let n = g.n();
    assert!(n <= 64, "exact decomposition search is limited to 64 vertices");
    let mut out: Vec<u64> = (0..n).map(|v| g.out_neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w)).collect();

    fn paths(out: &[u64], path: &mut Vec<usize>, seen: u64, end: usize, found: &mut Vec<Vec<usize>>) {
        let n = out.len();
        let head = *path.last().unwrap();
        if path.len() == n {
            if head == end {
                found.push(path.clone());
            }
            return;
        }
        let mut next = out[head] & !seen;
        if path.len() + 1 < n {
            next &= !(1 << end);
        }
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            path.push(w);
            paths(out, path, seen | 1 << w, end, found);
            path.pop();
        }
    }

    fn go(out: &mut Vec<u64>, acc: &mut Vec<Vec<usize>>) -> bool {
        let Some(u) = out.iter().position(|&m| m != 0) else {
            return true;
        };
        let v = out[u].trailing_zeros() as usize;
        let mut found = Vec::new();
        paths(out, &mut vec![v], 1 << v, u, &mut found);
        for p in found {
            let toggle = |out: &mut Vec<u64>| {
                for i in 0..p.len() {
                    let (a, b) = (p[i], p[(i + 1) % p.len()]);
                    out[a] ^= 1 << b;
                }
            };
            toggle(out);
            acc.push(p.clone());
            if go(out, acc) {
                return true;
            }
            acc.pop();
            toggle(out);
        }
        false
    }

    if g.edge_count() == 0 || g.regular_degree().is_none() {
        return (g.edge_count() == 0).then(Vec::new);
    }
    let mut acc = Vec::new();
    go(&mut out, &mut acc).then(|| acc.into_iter().map(HamiltonCycle::new).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{directed_cycle, rotational_tournament};

    #[test]
    fn decomposes_small_tournaments() {
        for n in [3, 5, 7] {
            let g = rotational_tournament(n).unwrap();
            let cycles = find_hamilton_decomposition(&g).unwrap();
            assert_eq!(cycles.len(), (n - 1) / 2);
            assert!(cycles.iter().all(|c| c.is_hamiltonian_in(&g)));
        }
    }

    #[test]
    fn no_decomposition_for_two_triangles() {
        let g = OrientedGraph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(find_hamilton_decomposition(&g), None);
        assert!(ExactBacktracking::default().complete(&g).is_empty());
    }

    #[test]
    fn stage_respects_limits() {
        let stage = ExactBacktracking::default();
        assert_eq!(stage.complete(&directed_cycle(12).unwrap()).len(), 1);
        assert!(stage.complete(&directed_cycle(13).unwrap()).is_empty());
        assert!(stage.complete(&rotational_tournament(7).unwrap()).is_empty());
        assert!(NoCompletion.complete(&directed_cycle(3).unwrap()).is_empty());
    }
}
