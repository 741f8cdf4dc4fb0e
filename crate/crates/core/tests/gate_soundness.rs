//! Applying each operation to a set yields a minimally 3-connected graph
//! exactly when the set passes the compatibility check.

mod common;

use min3gen::compat::{is_3_compatible, CompatibleSet};
use min3gen::cycles::enumerate_cycles_bruteforce;
use min3gen::generator::generate_min3;
use min3gen::graph::{Edge, Graph};
use min3gen::validate::is_minimally_3_connected;

fn check_all(g: &Graph) -> usize {
    let cs = enumerate_cycles_bruteforce(g);
    let edges: Vec<Edge> = g.edges().collect();
    let n = g.n();
    let mut checked = 0;
    let mut agree = |s: CompatibleSet, h: Graph| {
        let gate = is_3_compatible(&cs, g, &s).unwrap();
        assert_eq!(gate, is_minimally_3_connected(&h), "{g:?} with {s:?}");
        checked += 1;
    };
    for x in 0..n {
        for &e in edges.iter().filter(|e| !e.contains(x)) {
            agree(
                CompatibleSet::VertexEdge { x, edge: e },
                common::d1(g, x, e.u(), e.v()),
            );
        }
    }
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            agree(
                CompatibleSet::EdgePair {
                    first: e,
                    second: f,
                },
                common::d2(g, e.ends(), f.ends()),
            );
        }
    }
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                agree(
                    CompatibleSet::VertexTriple { x, y, z },
                    common::d3(g, x, y, z),
                );
            }
        }
    }
    checked
}

#[test]
fn gates_agree_with_oracle_up_to_eight_vertices() {
    let mut checked = 0;
    for col in generate_min3(8).unwrap() {
        for (_, g) in &col.graphs {
            checked += check_all(g);
        }
    }
    checked += check_all(&Graph::complete(4).unwrap());
    checked += check_all(&Graph::wheel(4).unwrap());
    assert_eq!(checked, 4960);
}
