use std::collections::HashSet;

use rayon::prelude::*;

use crate::canon::{certificate, Certificate};
use crate::graph::{Edge, Graph};

use super::{Collection, GenerateError};

/// Subdivide `e` and `f` and join the two new vertices.
pub fn bridge(g: &Graph, e: Edge, f: Edge) -> Graph {
    assert_ne!(e, f, "bridged edges must differ");
    let (g, x) = g.subdivide_edge(e.u(), e.v()).expect("edge present");
    let (g, y) = g.subdivide_edge(f.u(), f.v()).expect("edge present");
    g.add_edge(x, y).expect("fresh vertices")
}

/// One generation of 3-connected cubic graphs, sorted by certificate.
pub struct CubicGeneration;

impl CubicGeneration {
    /// All bridgings of every graph in `current`, up to isomorphism.
    pub fn next(current: &[Graph]) -> Vec<(Certificate, Graph)> {
        let batches: Vec<Vec<(Certificate, Graph)>> = current
            .par_iter()
            .map(|g| {
                let edges: Vec<Edge> = g.edges().collect();
                let mut out = Vec::new();
                for (i, &e) in edges.iter().enumerate() {
                    for &f in &edges[i + 1..] {
                        let h = bridge(g, e, f);
                        out.push((certificate(&h), h));
                    }
                }
                out
            })
            .collect();
        let mut seen: HashSet<Certificate> = HashSet::new();
        let mut out: Vec<(Certificate, Graph)> = batches
            .into_iter()
            .flatten()
            .filter(|(c, _)| seen.insert(c.clone()))
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }
}

/// 3-connected cubic graphs on `4..=max_n` vertices (even `n` only).
pub fn generate_cubic(max_n: usize, threads: usize) -> Result<Vec<Collection>, GenerateError> {
    if max_n < 4 {
        return Err(GenerateError::MaxNTooSmall { got: max_n, min: 4 });
    }
    if max_n % 2 == 1 {
        return Err(GenerateError::OddCubic(max_n));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()?;
    pool.install(|| {
        let k4 = Graph::complete(4).expect("small");
        let mut out = vec![Collection {
            n: 4,
            graphs: vec![(certificate(&k4), k4)],
        }];
        for n in (6..=max_n).step_by(2) {
            let current: Vec<Graph> = out
                .last()
                .expect("seeded")
                .graphs
                .iter()
                .map(|(_, g)| g.clone())
                .collect();
            let graphs = CubicGeneration::next(&current);
            log::info!("cubic n={n}: {}", graphs.len());
            out.push(Collection { n, graphs });
        }
        Ok(out)
    })
}
