//! Propagated cycle sets against brute-force enumeration.

use min3gen::cycles::{
    apply_add_edge, apply_flip_edge, apply_subdivide_edge, enumerate_cycles_bruteforce,
};
use min3gen::graph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).unwrap()
}

#[test]
fn flip_matches_bruteforce_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    for _ in 0..150 {
        let n = rng.gen_range(4..=7);
        let p = rng.gen_range(0.3..0.8);
        let g = random_graph(&mut rng, n, p);
        let cs = enumerate_cycles_bruteforce(&g);
        for b in 0..n {
            for a in g.neighbors(b) {
                for c in g.neighbors(b) {
                    if a == c || g.has_edge(a, c) {
                        continue;
                    }
                    let flipped = g.flip_edge(a, b, c).unwrap();
                    let got = apply_flip_edge(&cs, a, b, c).unwrap();
                    assert_eq!(
                        got,
                        enumerate_cycles_bruteforce(&flipped),
                        "{g:?} flip {a}{b}->{a}{c}"
                    );
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 500, "{checked}");
}

#[test]
fn add_and_subdivide_match_bruteforce_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..150 {
        let n = rng.gen_range(3..=8);
        let p = rng.gen_range(0.2..0.8);
        let g = random_graph(&mut rng, n, p);
        let cs = enumerate_cycles_bruteforce(&g);
        for (u, v) in g.non_edges() {
            let got = apply_add_edge(&cs, &g, u, v);
            assert_eq!(got, enumerate_cycles_bruteforce(&g.add_edge(u, v).unwrap()));
            assert!(cs.is_subset(&got));
        }
        for e in g.edges() {
            let (h, c) = g.subdivide_edge(e.u(), e.v()).unwrap();
            let got = apply_subdivide_edge(&cs, e.u(), e.v(), c);
            assert_eq!(got.len(), cs.len());
            assert_eq!(got, enumerate_cycles_bruteforce(&h));
        }
    }
}
