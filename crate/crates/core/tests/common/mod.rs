#![allow(dead_code)]

use min3gen::graph::Graph;
use rand::Rng;

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).unwrap()
}

/// Subdivide `ab` by a new vertex and join it to `x`.
pub fn d1(g: &Graph, x: usize, a: usize, b: usize) -> Graph {
    let (h, y) = g.subdivide_edge(a, b).unwrap();
    h.add_edge(x, y).unwrap()
}

/// Subdivide two distinct edges and join the new vertices.
pub fn d2(g: &Graph, (a, b): (usize, usize), (c, d): (usize, usize)) -> Graph {
    let (h, x) = g.subdivide_edge(a, b).unwrap();
    let (h, y) = h.subdivide_edge(c, d).unwrap();
    h.add_edge(x, y).unwrap()
}

/// A new vertex joined to `x`, `y` and `z`.
pub fn d3(g: &Graph, x: usize, y: usize, z: usize) -> Graph {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().map(|e| e.ends()).collect();
    edges.extend([(x, n), (y, n), (z, n)]);
    Graph::from_edges(n + 1, edges).unwrap()
}
