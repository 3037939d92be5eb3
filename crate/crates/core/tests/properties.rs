//! Structural invariants checked on random digraphs against brute-force oracles.

use std::collections::BTreeSet;

use drdlab::connectivity::{
    brute, check_cut_balance, enumerate_min_edge_cuts, enumerate_min_vertex_cuts,
};
use drdlab::edgelist;
use drdlab::iso::{canonical_form, isomorphic};
use drdlab::regularity::{is_distance_regular, is_weakly_distance_regular};
use drdlab::{Digraph, Direction};
use proptest::prelude::*;

/// Random digraph that contains the Hamiltonian cycle 0 -> 1 -> ... -> 0,
/// hence is strongly connected.
fn connected_digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(proptest::bool::weighted(0.3), n * n),
            )
        })
        .prop_map(|(n, bits)| {
            let mut edges: BTreeSet<(usize, usize)> = (0..n).map(|v| (v, (v + 1) % n)).collect();
            for u in 0..n {
                for v in 0..n {
                    if u != v && bits[u * n + v] {
                        edges.insert((u, v));
                    }
                }
            }
            let edges: Vec<_> = edges.into_iter().collect();
            Digraph::from_edge_list(n, &edges).unwrap()
        })
}

/// Circulant digraph on `n` vertices with connection set `s`, relabeled.
/// Including 1 in `s` keeps it strongly connected.
fn circulant(max_n: usize) -> impl Strategy<Value = Digraph> {
    (3..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::btree_set(2..n, 0..n.min(4)),
                Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
            )
        })
        .prop_map(|(n, mut s, perm)| {
            s.insert(1);
            let edges: Vec<_> = (0..n)
                .flat_map(|u| {
                    s.iter()
                        .map(|&d| (perm[u], perm[(u + d) % n]))
                        .collect::<Vec<_>>()
                })
                .collect();
            Digraph::from_edge_list(n, &edges).unwrap()
        })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn shells_partition_vertices(g in connected_digraph(9)) {
        let d = g.diameter().unwrap();
        for dir in [Direction::Out, Direction::In] {
            for x in 0..g.n() {
                let mut seen = vec![0; g.n()];
                for k in 0..=d {
                    for v in g.shell(x, k, dir).unwrap() {
                        seen[v] += 1;
                    }
                }
                prop_assert!(seen.iter().all(|&c| c == 1));
                prop_assert!(g.shell(x, d + 1, dir).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn distances_obey_triangle_inequality(g in connected_digraph(9)) {
        let d = g.distances().unwrap();
        for u in 0..g.n() {
            for v in 0..g.n() {
                for w in 0..g.n() {
                    prop_assert!(d.get(u, w) <= d.get(u, v) + d.get(v, w));
                }
            }
        }
    }

    #[test]
    fn reverse_distances_are_transposed(g in connected_digraph(9)) {
        let r = g.reverse();
        prop_assert_eq!(r.distances().unwrap(), &g.distances().unwrap().transpose());
    }

    #[test]
    fn girth_two_iff_digon(g in connected_digraph(9)) {
        prop_assert_eq!(g.girth().unwrap() == 2, g.has_digon());
    }

    #[test]
    fn edge_cuts_match_brute_force(g in connected_digraph(8)) {
        let (_, oracle) = brute::min_edge_cuts(&g);
        let cuts = enumerate_min_edge_cuts(&g).unwrap();
        let mut ours: Vec<_> = cuts.iter().map(|c| c.crossing.clone()).collect();
        ours.sort();
        let theirs: Vec<_> = oracle.keys().cloned().collect();
        prop_assert_eq!(ours, theirs);
        for cut in &cuts {
            prop_assert_eq!(&cut.generating_sides, &oracle[&cut.crossing]);
        }
    }

    #[test]
    fn regular_edge_cuts_match_brute_force(g in circulant(10)) {
        let (_, oracle) = brute::min_edge_cuts(&g);
        let mut ours: Vec<_> = enumerate_min_edge_cuts(&g).unwrap().into_iter().map(|c| c.crossing).collect();
        ours.sort();
        prop_assert_eq!(ours, oracle.into_keys().collect::<Vec<_>>());
    }

    #[test]
    fn vertex_cuts_match_brute_force(g in connected_digraph(8)) {
        match brute::min_vertex_cuts(&g) {
            None => prop_assert!(enumerate_min_vertex_cuts(&g).is_err()),
            Some((_, oracle)) => {
                let mut ours: Vec<_> = enumerate_min_vertex_cuts(&g).unwrap().into_iter().map(|c| c.vertices).collect();
                ours.sort();
                prop_assert_eq!(ours, oracle);
            }
        }
    }

    #[test]
    fn invariants_survive_relabeling((g, perm) in connected_digraph(8).prop_flat_map(|g| { let n = g.n(); (Just(g), permutation(n)) })) {
        let h = g.relabel(&perm).unwrap();
        prop_assert!(isomorphic(&g, &h));
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert_eq!(g.girth().unwrap(), h.girth().unwrap());
        prop_assert_eq!(g.diameter().unwrap(), h.diameter().unwrap());
        prop_assert_eq!(is_distance_regular(&g).ok(), is_distance_regular(&h).ok());
        prop_assert_eq!(is_weakly_distance_regular(&g).ok(), is_weakly_distance_regular(&h).ok());
    }

    #[test]
    fn edge_list_roundtrip(g in connected_digraph(12)) {
        let text = edgelist::to_string(&g);
        let back = edgelist::parse(&text).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(edgelist::to_string(&back), text);
    }

    #[test]
    fn regular_cuts_are_balanced(g in circulant(12), mask in any::<u16>()) {
        let a: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        prop_assume!(!a.is_empty() && a.len() < g.n());
        let side: Vec<bool> = (0..g.n()).map(|v| mask >> v & 1 == 1).collect();
        let edges = g.edges();
        let forward = edges.iter().filter(|&&(u, v)| side[u] && !side[v]).count();
        let backward = edges.iter().filter(|&&(u, v)| !side[u] && side[v]).count();
        prop_assert_eq!(forward, backward);
        prop_assert!(check_cut_balance(&g, &a).unwrap());
    }
}
