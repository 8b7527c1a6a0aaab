mod common;

use std::collections::HashSet;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hamdec::assembly::{complete_cover_to_cycle, hamilton_path_between, CompletionOptions, HamPathError};
use hamdec::counting::{count_hamilton_cycles_exact, permanent_exact};
use hamdec::graph::{edgelist, random_oriented, rotational_tournament, RandomKind};
use hamdec::matching::{
    extract_bipartite_r_factor, extract_oriented_r_factor, has_bipartite_r_factor, oriented_reg,
    pm_decompose_regular, Matching,
};
use hamdec::pathcover::{complete_digraph_path_decomposition, matchings_to_path_cover, DirectedPath, PathCover};
use hamdec::pipeline::{approximate_decomposition, verify_certificate, DecompositionCertificate, RunConfig};
use hamdec::{BipartiteGraph, OrientedGraph};

fn matrix(max: usize) -> impl Strategy<Value = Vec<Vec<u8>>> {
    (1..=max).prop_flat_map(|m| prop::collection::vec(prop::collection::vec(0u8..=1, m), m))
}

fn bipartite(rows: &[Vec<u8>]) -> BipartiteGraph {
    let m = rows.len();
    let edges = (0..m).flat_map(|a| (0..m).filter(move |&b| rows[a][b] == 1).map(move |b| (a, b)));
    BipartiteGraph::balanced(m, edges).unwrap()
}

/// An oriented graph on up to `max` vertices from a pair mask and orientation bits.
fn oriented(max: usize) -> impl Strategy<Value = OrientedGraph> {
    (2..=max, any::<u64>(), any::<u64>()).prop_map(|(n, present, dir)| {
        let mut edges = Vec::new();
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if present >> (bit % 64) & 1 == 1 {
                    edges.push(if dir >> (bit % 64) & 1 == 1 { (u, v) } else { (v, u) });
                }
                bit += 1;
            }
        }
        OrientedGraph::new(n, edges).unwrap()
    })
}

/// Largest r such that some spanning subgraph is r-regular, by trying every edge subset.
fn reg_brute(g: &OrientedGraph) -> usize {
    let edges = g.edge_vec();
    let n = g.n();
    let mut best = 0;
    for mask in 1u32..1 << edges.len() {
        let (mut out, mut inn) = (vec![0; n], vec![0; n]);
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                out[u] += 1;
                inn[v] += 1;
            }
        }
        let r = out[0];
        if r > best && out.iter().chain(&inn).all(|&d| d == r) {
            best = r;
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn flow_factor_test_matches_subset_oracle(rows in matrix(5), r in 0usize..=5) {
        let b = bipartite(&rows);
        prop_assume!(r <= rows.len());
        let truth = common::gale_ryser_literal(&rows, r);
        prop_assert_eq!(has_bipartite_r_factor(&b, r).unwrap(), truth);
        if truth {
            let f = extract_bipartite_r_factor(&b, r).unwrap();
            let sub = BipartiteGraph::balanced(rows.len(), f.edges.iter().copied()).unwrap();
            prop_assert!(f.edges.iter().all(|&(x, y)| b.has_edge(x, y)));
            prop_assert_eq!(sub.regular_degree().unwrap_or(0), r);
        }
    }

    #[test]
    fn ryser_matches_permutation_sum(rows in matrix(7)) {
        prop_assert_eq!(permanent_exact(&rows).unwrap(), common::permanent_brute(&rows));
    }

    #[test]
    fn reg_matches_subset_enumeration(g in oriented(5)) {
        prop_assume!(g.edge_count() <= 16);
        prop_assert_eq!(oriented_reg(&g), reg_brute(&g));
    }

    #[test]
    fn reg_is_monotone_and_bounded(g in oriented(9), extra in any::<u64>()) {
        let r = oriented_reg(&g);
        prop_assert!(r <= g.degree_summary().min_semi);
        let mut edges = g.edge_vec();
        let mut bit = 0;
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                if !g.has_edge(u, v) && !g.has_edge(v, u) && extra >> (bit % 64) & 1 == 1 {
                    edges.push((u, v));
                }
                bit += 1;
            }
        }
        let bigger = OrientedGraph::new(g.n(), edges).unwrap();
        prop_assert!(oriented_reg(&bigger) >= r);
        if r > 0 {
            let f = extract_oriented_r_factor(&g, r).unwrap();
            let h = OrientedGraph::new(g.n(), f.edges.iter().copied()).unwrap();
            prop_assert_eq!(h.regular_degree(), Some(r));
            prop_assert!(f.edges.iter().all(|&(u, v)| g.has_edge(u, v)));
        }
    }

    #[test]
    fn hamilton_cycle_dp_matches_enumeration(g in oriented(7)) {
        let dp = count_hamilton_cycles_exact(&g).unwrap().exact.unwrap();
        prop_assert_eq!(dp, common::hamilton_cycles_brute(&g).len() as u128);
    }

    #[test]
    fn hamilton_path_search_matches_enumeration(g in oriented(6), s in 0usize..6, dt in 1usize..6) {
        let n = g.n();
        let (s, t) = (s % n, (s % n + dt % (n - 1).max(1)) % n);
        prop_assume!(s != t);
        let truth = common::hamilton_path_brute(&g, s, t);
        match hamilton_path_between(&g, s, t, None, 0) {
            Ok(p) => {
                prop_assert!(truth);
                prop_assert!(p.is_valid_in(&g) && p.vertices.len() == n && p.start() == s && p.end() == t);
            }
            Err(HamPathError::NotFound { .. }) => prop_assert!(!truth),
            Err(e) => prop_assert!(false, "unexpected {}", e),
        }
    }

    #[test]
    fn regular_bipartite_splits_into_perfect_matchings(m in 1usize..8, d in 1usize..8, seed in any::<u64>()) {
        prop_assume!(d <= m);
        let rows = common::random_regular_matrix(m, d, &mut ChaCha8Rng::seed_from_u64(seed));
        let b = bipartite(&rows);
        let ms = pm_decompose_regular(&b).unwrap();
        prop_assert_eq!(ms.len(), d);
        let mut seen = HashSet::new();
        for mt in &ms {
            prop_assert!(mt.is_perfect_in(&b));
            prop_assert!(mt.edges.iter().all(|e| seen.insert(*e)));
        }
        prop_assert_eq!(seen.len(), b.edge_count());
    }

    #[test]
    fn path_decomposition_of_complete_digraph(half in 1usize..=12) {
        let b = 2 * half;
        let dec = complete_digraph_path_decomposition(b).unwrap();
        let mut pairs = HashSet::new();
        for p in &dec.paths {
            prop_assert_eq!(p.iter().copied().collect::<HashSet<_>>().len(), b);
            for w in p.windows(2) {
                prop_assert!(pairs.insert((w[0], w[1])));
            }
        }
        prop_assert_eq!(pairs.len(), b * (b - 1));
    }

    #[test]
    fn chained_matchings_give_path_covers(sizes in prop::collection::vec(1usize..6, 2..6), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut parts = Vec::new();
        let mut next = 0;
        for &s in &sizes {
            parts.push((next..next + s).collect::<Vec<_>>());
            next += s;
        }
        let mut matchings = Vec::new();
        for j in 0..parts.len() - 1 {
            let (x, y) = (parts[j].len(), parts[j + 1].len());
            let mut ys: Vec<usize> = (0..y).collect();
            ys.shuffle(&mut rng);
            let edges: Vec<(usize, usize)> = (0..x.min(y)).filter(|_| rng.gen_bool(0.7)).map(|i| (i, ys[i])).collect();
            matchings.push(Matching::new(edges));
        }
        let cover = matchings_to_path_cover(&parts, &matchings).unwrap();
        let total: usize = matchings.iter().map(|m| m.size()).sum();
        prop_assert_eq!(cover.size(), next - total);
        let mut seen: Vec<usize> = cover.paths.iter().flat_map(|p| p.vertices.iter().copied()).collect();
        seen.sort_unstable();
        prop_assert_eq!(seen, (0..next).collect::<Vec<_>>());
        for p in &cover.paths {
            for w in p.vertices.windows(2) {
                let j = parts.iter().position(|q| q.contains(&w[0])).unwrap();
                prop_assert!(parts[j + 1].contains(&w[1]));
            }
        }
    }

    #[test]
    fn edge_list_round_trip(g in oriented(12)) {
        let text = edgelist::to_string(&g);
        let back = edgelist::parse(&text).unwrap();
        prop_assert_eq!(edgelist::sha256_hex(&back), edgelist::sha256_hex(&g));
        prop_assert_eq!(back.edge_vec(), g.edge_vec());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn completions_are_hamiltonian_and_keep_paths(n_w in 4usize..14, seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = rng.gen_range(1..=(n_w / 2).min(4));
        let lens: Vec<usize> = (0..a).map(|_| rng.gen_range(1..=3)).collect();
        let n = n_w + lens.iter().sum::<usize>();
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let mut paths = Vec::new();
        let mut at = 0;
        for &l in &lens {
            paths.push(order[at..at + l].to_vec());
            at += l;
        }
        let w: Vec<usize> = order[at..].to_vec();
        let forced: HashSet<(usize, usize)> = paths.iter().flat_map(|p| p.windows(2).map(|e| (e[0], e[1]))).collect();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let e = if forced.contains(&(u, v)) || (!forced.contains(&(v, u)) && rng.gen_bool(0.5)) { (u, v) } else { (v, u) };
                edges.push(e);
            }
        }
        let host = OrientedGraph::new(n, edges).unwrap();
        let cover = PathCover { paths: paths.iter().cloned().map(DirectedPath::new).collect() };
        if let Ok(c) = complete_cover_to_cycle(&cover, &host, &w, &CompletionOptions::default(), seed) {
            prop_assert!(c.is_hamiltonian_in(&host));
            for p in &paths {
                prop_assert!(c.contains_segment(p));
            }
        }
    }

    #[test]
    fn pipeline_output_always_verifies(n in 5usize..28, r in 1usize..6, seed in 0u64..1000) {
        let kind = if r == 5 { RandomKind::Tournament } else { RandomKind::Regular(r.min((n - 1) / 2)) };
        let g = random_oriented(kind, n, seed).unwrap();
        let config = RunConfig { seed, ..Default::default() };
        let (cert, report) = approximate_decomposition(&g, &config).unwrap();
        prop_assert!(verify_certificate(&g, &cert).ok);
        prop_assert!(cert.k <= oriented_reg(&g));
        prop_assert!((0.0..=1.0).contains(&report.ratio));
        let json = serde_json::to_string(&cert).unwrap();
        let back: DecompositionCertificate = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, &cert);
        let (again, _) = approximate_decomposition(&g, &config).unwrap();
        prop_assert_eq!(again, cert);
    }
}

#[test]
fn pipeline_is_deterministic_on_tournaments() {
    let g = rotational_tournament(51).unwrap();
    let config = RunConfig { seed: 17, ..Default::default() };
    let (a, _) = approximate_decomposition(&g, &config).unwrap();
    let (b, _) = approximate_decomposition(&g, &config).unwrap();
    assert_eq!(a, b);
    assert!(verify_certificate(&g, &a).ok);
}
