use super::{CountingError, LogCount};
use crate::graph::OrientedGraph;

pub const HAMILTON_DP_MAX_N: usize = 20;
const DECOMP_MAX_N: usize = 7;
const DECOMP_LOW_DEGREE_MAX_N: usize = 12;

/// Number of directed Hamilton cycles, by a subset DP over paths leaving vertex 0.
pub fn count_hamilton_cycles_exact(g: &OrientedGraph) -> Result<LogCount, CountingError> {
    let n = g.n();
    if n > HAMILTON_DP_MAX_N {
        return Err(CountingError::TooLarge { what: "Hamilton cycle count", n, max: HAMILTON_DP_MAX_N });
    }
    if n < 3 {
        return Ok(LogCount::ZERO);
    }
    // Vertices 1..n are re-indexed to 0..k; dp[mask * k + v] counts paths
    // 0 -> ... -> v visiting exactly `mask`.
    let k = n - 1;
    let full = (1usize << k) - 1;
    let mut dp = vec![0u64; (1 << k) * k];
    for &v in g.out_neighbors(0) {
        dp[(1 << (v - 1)) * k + v - 1] = 1;
    }
    for mask in 1..=full {
        for v in 0..k {
            let ways = dp[mask * k + v];
            if ways == 0 {
                continue;
            }
            for &w in g.out_neighbors(v + 1) {
                if w == 0 || mask & (1 << (w - 1)) != 0 {
                    continue;
                }
                dp[(mask | 1 << (w - 1)) * k + w - 1] += ways;
            }
        }
    }
    let total: u64 = g.in_neighbors(0).iter().map(|&v| dp[full * k + v - 1]).sum();
    Ok(LogCount::from_u128(total as u128))
}

/// Bitmask adjacency for the small decomposition counters.
struct Bits {
    n: usize,
    out: Vec<u32>,
}

impl Bits {
    fn new(g: &OrientedGraph) -> Self {
        let out = (0..g.n()).map(|v| g.out_neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect();
        Bits { n: g.n(), out }
    }

    fn is_empty(&self) -> bool {
        self.out.iter().all(|&m| m == 0)
    }

    fn min_edge(&self) -> Option<(usize, usize)> {
        self.out.iter().enumerate().find(|(_, &m)| m != 0).map(|(u, &m)| (u, m.trailing_zeros() as usize))
    }

    fn toggle_cycle(&mut self, cycle: &[usize]) {
        for i in 0..cycle.len() {
            let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
            self.out[u] ^= 1 << v;
        }
    }

    /// Calls `f` on every Hamilton path `start -> ... -> end` (as a vertex list).
    fn for_each_path(&self, start: usize, end: usize, f: &mut dyn FnMut(&[usize])) {
        let mut path = vec![start];
        self.extend(&mut path, 1 << start, end, f);
    }

    fn extend(&self, path: &mut Vec<usize>, seen: u32, end: usize, f: &mut dyn FnMut(&[usize])) {
        let head = *path.last().unwrap();
        if path.len() == self.n {
            if head == end {
                f(path);
            }
            return;
        }
        let mut next = self.out[head] & !seen;
        if path.len() + 1 < self.n {
            next &= !(1 << end);
        }
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            path.push(w);
            self.extend(path, seen | 1 << w, end, f);
            path.pop();
        }
    }
}

fn check_size(g: &OrientedGraph, r: usize) -> Result<(), CountingError> {
    let n = g.n();
    let max = if r <= 2 { DECOMP_LOW_DEGREE_MAX_N } else { DECOMP_MAX_N };
    if n > max {
        return Err(CountingError::TooLarge { what: "Hamilton decomposition count", n, max });
    }
    Ok(())
}

/// Regularity screen shared by both counters: `Ok(Some(r))` to proceed,
/// `Ok(None)` when the answer is 0.
fn regular_degree_or_zero(g: &OrientedGraph) -> Result<Option<usize>, CountingError> {
    match g.regular_degree() {
        Some(r) => {
            check_size(g, r)?;
            Ok(Some(r))
        }
        None => Ok(None),
    }
}

/// Number of unordered partitions of `E(g)` into Hamilton cycles. Each step
/// must cover the lexicographically smallest remaining edge, so every partition
/// is generated once.
pub fn count_hamilton_decompositions_exact(g: &OrientedGraph) -> Result<LogCount, CountingError> {
    let Some(r) = regular_degree_or_zero(g)? else {
        return Ok(LogCount::ZERO);
    };
    if r == 0 {
        return Ok(LogCount::ONE);
    }
    fn go(bits: &mut Bits) -> u128 {
        let Some((u, v)) = bits.min_edge() else {
            return 1;
        };
        let mut cycles = Vec::new();
        bits.for_each_path(v, u, &mut |p| cycles.push(p.to_vec()));
        let mut total = 0;
        for c in cycles {
            bits.toggle_cycle(&c);
            total += go(bits);
            bits.toggle_cycle(&c);
        }
        total
    }
    Ok(LogCount::from_u128(go(&mut Bits::new(g))))
}

/// The same count by a different route: enumerate ordered sequences of
/// edge-disjoint Hamilton cycles (each cycle anchored at vertex 0) and divide by
/// `r!`. Fails with `NotDivisible` if the ordered count is not a multiple of `r!`.
pub fn count_hamilton_decompositions_ordered(g: &OrientedGraph) -> Result<LogCount, CountingError> {
    let Some(r) = regular_degree_or_zero(g)? else {
        return Ok(LogCount::ZERO);
    };
    if r == 0 {
        return Ok(LogCount::ONE);
    }
    fn go(bits: &mut Bits) -> u128 {
        if bits.is_empty() {
            return 1;
        }
        let mut cycles = Vec::new();
        let firsts = bits.out[0];
        for v in (0..bits.n).filter(|&v| firsts & 1 << v != 0) {
            bits.for_each_path(v, 0, &mut |p| {
                let mut c = vec![0];
                c.extend_from_slice(&p[..p.len() - 1]);
                cycles.push(c);
            });
        }
        let mut total = 0;
        for c in cycles {
            bits.toggle_cycle(&c);
            total += go(bits);
            bits.toggle_cycle(&c);
        }
        total
    }
    let ordered = go(&mut Bits::new(g));
    let fact: u128 = (1..=r as u128).product();
    if ordered % fact != 0 {
        return Err(CountingError::NotDivisible { ordered, r });
    }
    Ok(LogCount::from_u128(ordered / fact))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{directed_cycle, rotational_tournament, transitive_tournament};

    #[test]
    fn cycle_count_examples() {
        assert_eq!(count_hamilton_cycles_exact(&rotational_tournament(3).unwrap()).unwrap().exact, Some(1));
        for n in 1..8 {
            assert!(count_hamilton_cycles_exact(&transitive_tournament(n).unwrap()).unwrap().is_zero());
        }
        assert_eq!(count_hamilton_cycles_exact(&directed_cycle(9).unwrap()).unwrap().exact, Some(1));
        assert!(matches!(
            count_hamilton_cycles_exact(&OrientedGraph::empty(21)),
            Err(CountingError::TooLarge { .. })
        ));
    }

    #[test]
    fn decomposition_examples() {
        let tri = rotational_tournament(3).unwrap();
        assert_eq!(count_hamilton_decompositions_exact(&tri).unwrap().exact, Some(1));
        assert_eq!(count_hamilton_decompositions_ordered(&tri).unwrap().exact, Some(1));
        let tt = transitive_tournament(4).unwrap();
        assert!(count_hamilton_decompositions_exact(&tt).unwrap().is_zero());
        assert!(count_hamilton_decompositions_ordered(&tt).unwrap().is_zero());
        assert_eq!(count_hamilton_decompositions_exact(&OrientedGraph::empty(5)).unwrap().exact, Some(1));
    }

    #[test]
    fn two_disjoint_triangles_have_no_decomposition() {
        let g = OrientedGraph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(count_hamilton_decompositions_exact(&g).unwrap().is_zero());
    }

    #[test]
    fn size_caps() {
        let big = rotational_tournament(9).unwrap();
        assert!(matches!(count_hamilton_decompositions_exact(&big), Err(CountingError::TooLarge { .. })));
        let c = directed_cycle(12).unwrap();
        assert_eq!(count_hamilton_decompositions_exact(&c).unwrap().exact, Some(1));
    }
}
