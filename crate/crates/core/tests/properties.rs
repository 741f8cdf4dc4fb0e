use min3gen::canon::{are_isomorphic_bruteforce, certificate};
use min3gen::compat::{has_chording_path, no_chording_paths, VertexPairSet};
use min3gen::cycles::{chords, enumerate_cycles_bruteforce};
use min3gen::graph::Graph;
use min3gen::io::{decode_graph6, encode_graph6};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn certificate_ignores_labels((g, perm) in graph_and_perm(10)) {
        prop_assert_eq!(certificate(&g), certificate(&g.permuted(&perm)));
    }

    #[test]
    fn certificate_decides_isomorphism(g in graph(6), h in graph(6)) {
        prop_assert_eq!(certificate(&g) == certificate(&h), are_isomorphic_bruteforce(&g, &h));
    }

    #[test]
    fn graph6_round_trips(g in graph(20)) {
        prop_assert_eq!(decode_graph6(&encode_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn split_undone_by_contraction(g in graph(9), pick in any::<(usize, usize, usize)>()) {
        let n = g.n();
        let v = pick.0 % n;
        let nbrs: Vec<usize> = g.neighbors(v).collect();
        prop_assume!(nbrs.len() >= 3);
        let u = nbrs[pick.1 % nbrs.len()];
        let w = nbrs[pick.2 % nbrs.len()];
        prop_assume!(u != w);
        let (h, x) = g.split_vertex(v, u, w).unwrap();
        prop_assert_eq!(x, n);
        prop_assert_eq!((h.n(), h.m()), (n + 1, g.m() + 1));
        let back = h.delete_vertex(x).unwrap().add_edge(v, u).unwrap().add_edge(v, w).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn chording_depends_only_on_remainder(g in graph(7), picks in proptest::collection::vec(any::<usize>(), 3)) {
        let edges: Vec<(usize, usize)> = g.edges().map(|e| e.ends()).collect();
        prop_assume!(g.n() >= 2);
        let mut removed: Vec<(usize, usize)> = Vec::new();
        for p in &picks[..2] {
            if !edges.is_empty() {
                let e = edges[p % edges.len()];
                if !removed.contains(&e) {
                    removed.push(e);
                }
            }
        }
        let a = picks[2] % g.n();
        let b = (a + 1) % g.n();
        let cs = enumerate_cycles_bruteforce(&g);
        let forward = has_chording_path(&cs, &g, a, b, &removed).unwrap();
        let mut reversed = removed.clone();
        reversed.reverse();
        prop_assert_eq!(forward, has_chording_path(&cs, &g, a, b, &reversed).unwrap());
        let mut rest = g.clone();
        for &(u, v) in &removed {
            rest = rest.delete_edge(u, v).unwrap();
        }
        let rest_cs = enumerate_cycles_bruteforce(&rest);
        prop_assert_eq!(forward, has_chording_path(&rest_cs, &rest, a, b, &[]).unwrap());

        let any_chord = rest_cs.iter().any(|c| {
            rest.edges().any(|e| chords(c, e.u(), e.v()))
        });
        if !any_chord {
            let all: Vec<(usize, usize)> =
                (0..g.n()).flat_map(|p| (p + 1..g.n()).map(move |q| (p, q))).collect();
            let pairs = VertexPairSet::new(all).unwrap();
            prop_assert!(no_chording_paths(&rest_cs, &rest, &pairs, &[]).unwrap());
        }
    }
}
