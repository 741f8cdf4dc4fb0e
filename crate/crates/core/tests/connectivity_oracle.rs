//! The pair-removal oracle against the definition, over every labeled graph
//! on at most six vertices.

use min3gen::graph::Graph;
use min3gen::validate::{is_3_connected, is_minimally_3_connected};

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    parent[x] = r;
    r
}

/// Connected after deleting `gone`, by union-find over the surviving edges.
fn survives(n: usize, edges: &[(usize, usize)], gone: &[usize]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    for &(u, v) in edges {
        if gone.contains(&u) || gone.contains(&v) {
            continue;
        }
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        parent[ru] = rv;
    }
    let alive: Vec<usize> = (0..n).filter(|v| !gone.contains(v)).collect();
    let root = find(&mut parent, alive[0]);
    alive.iter().all(|&v| find(&mut parent, v) == root)
}

/// More than three vertices and no vertex set of size at most two separates.
fn by_definition(n: usize, edges: &[(usize, usize)]) -> bool {
    if n <= 3 {
        return false;
    }
    let mut subsets: Vec<Vec<usize>> = vec![vec![]];
    subsets.extend((0..n).map(|v| vec![v]));
    subsets.extend((0..n).flat_map(|u| (u + 1..n).map(move |v| vec![u, v])));
    subsets.iter().all(|s| survives(n, edges, s))
}

#[test]
fn agrees_with_definition_up_to_six_vertices() {
    let mut three_connected = 0;
    for n in 1..=6 {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(n, edges.iter().copied()).unwrap();
            let want = by_definition(n, &edges);
            assert_eq!(is_3_connected(&g), want, "{g:?}");
            if want {
                three_connected += 1;
                let minimal = edges.iter().all(|&(u, v)| {
                    let rest: Vec<_> = edges.iter().copied().filter(|&e| e != (u, v)).collect();
                    !by_definition(n, &rest)
                });
                assert_eq!(is_minimally_3_connected(&g), minimal, "{g:?}");
            }
        }
    }
    assert!(three_connected > 0);
}
