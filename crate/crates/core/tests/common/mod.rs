//! Brute-force oracles shared by the integration tests. Nothing here calls the
//! library's own counting or search code.

#![allow(dead_code)]

use std::collections::HashSet;

use hamdec::OrientedGraph;
use rand::Rng;

/// Calls `f` on every permutation of `items` (Heap's algorithm).
pub fn for_each_permutation(items: &mut [usize], f: &mut impl FnMut(&[usize])) {
    fn heap(k: usize, a: &mut [usize], f: &mut impl FnMut(&[usize])) {
        if k <= 1 {
            f(a);
            return;
        }
        heap(k - 1, a, f);
        for i in 0..k - 1 {
            if k % 2 == 0 {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
            heap(k - 1, a, f);
        }
    }
    let k = items.len();
    heap(k, items, f);
}

/// Permanent as a sum over all permutations.
pub fn permanent_brute(a: &[Vec<u8>]) -> u128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut total = 0u128;
    let mut perm: Vec<usize> = (0..n).collect();
    for_each_permutation(&mut perm, &mut |p| {
        if (0..n).all(|i| a[i][p[i]] == 1) {
            total += 1;
        }
    });
    total
}

/// `e(X, Y) >= r(|X| + |Y| - m)` for all `X ⊆ A`, `Y ⊆ B`, from the 0/1 biadjacency rows.
pub fn gale_ryser_literal(rows: &[Vec<u8>], r: usize) -> bool {
    let m = rows.len();
    for x in 0u32..1 << m {
        for y in 0u32..1 << m {
            let mut e = 0i64;
            for a in 0..m {
                if x >> a & 1 == 1 {
                    for b in 0..m {
                        if y >> b & 1 == 1 && rows[a][b] == 1 {
                            e += 1;
                        }
                    }
                }
            }
            let rhs = r as i64 * (x.count_ones() as i64 + y.count_ones() as i64 - m as i64);
            if e < rhs {
                return false;
            }
        }
    }
    true
}

/// All directed Hamilton cycles of `g`, each as its edge set, by enumerating
/// orders of `1..n` after the fixed start 0.
pub fn hamilton_cycles_brute(g: &OrientedGraph) -> Vec<Vec<(usize, usize)>> {
    let n = g.n();
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let mut rest: Vec<usize> = (1..n).collect();
    for_each_permutation(&mut rest, &mut |p| {
        let order: Vec<usize> = std::iter::once(0).chain(p.iter().copied()).collect();
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (order[i], order[(i + 1) % n])).collect();
        if edges.iter().all(|&(u, v)| g.has_edge(u, v)) {
            let mut e = edges;
            e.sort_unstable();
            out.push(e);
        }
    });
    out
}

/// Number of unordered sets of Hamilton cycles partitioning `E(g)`.
pub fn hamilton_decompositions_brute(g: &OrientedGraph) -> u128 {
    let cycles = hamilton_cycles_brute(g);
    let total = g.edge_count();
    let n = g.n();
    if n == 0 || total % n != 0 {
        return 0;
    }
    let need = total / n;
    fn go(cycles: &[Vec<(usize, usize)>], from: usize, used: &mut HashSet<(usize, usize)>, left: usize) -> u128 {
        if left == 0 {
            return 1;
        }
        let mut count = 0;
        for i in from..cycles.len() {
            if cycles[i].iter().all(|e| !used.contains(e)) {
                cycles[i].iter().for_each(|&e| {
                    used.insert(e);
                });
                count += go(cycles, i + 1, used, left - 1);
                cycles[i].iter().for_each(|e| {
                    used.remove(e);
                });
            }
        }
        count
    }
    go(&cycles, 0, &mut HashSet::new(), need)
}

/// Whether `g` has a Hamilton path from `s` to `t`, by trying every order.
pub fn hamilton_path_brute(g: &OrientedGraph, s: usize, t: usize) -> bool {
    let n = g.n();
    let mut middle: Vec<usize> = (0..n).filter(|&v| v != s && v != t).collect();
    let mut found = false;
    for_each_permutation(&mut middle, &mut |p| {
        if found {
            return;
        }
        let order: Vec<usize> = std::iter::once(s).chain(p.iter().copied()).chain(std::iter::once(t)).collect();
        found = order.windows(2).all(|w| g.has_edge(w[0], w[1]));
    });
    found
}

/// A random oriented graph: each unordered pair gets an edge with probability
/// `p`, in a random direction.
pub fn random_oriented(n: usize, p: f64, rng: &mut impl Rng) -> OrientedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push(if rng.gen_bool(0.5) { (u, v) } else { (v, u) });
            }
        }
    }
    OrientedGraph::new(n, edges).unwrap()
}

pub fn random_matrix(n: usize, p: f64, rng: &mut impl Rng) -> Vec<Vec<u8>> {
    (0..n).map(|_| (0..n).map(|_| u8::from(rng.gen_bool(p))).collect()).collect()
}

/// A `d`-regular 0/1 matrix as a union of `d` random permutations that avoid each other.
pub fn random_regular_matrix(m: usize, d: usize, rng: &mut impl Rng) -> Vec<Vec<u8>> {
    use rand::seq::SliceRandom;
    'outer: loop {
        let mut a = vec![vec![0u8; m]; m];
        for _ in 0..d {
            let mut placed = false;
            for _ in 0..200 {
                let mut p: Vec<usize> = (0..m).collect();
                p.shuffle(rng);
                if (0..m).all(|i| a[i][p[i]] == 0) {
                    (0..m).for_each(|i| a[i][p[i]] = 1);
                    placed = true;
                    break;
                }
            }
            if !placed {
                continue 'outer;
            }
        }
        return a;
    }
}
