//! Connectivity oracle used to check generator output.
//!
//! Deliberately naive: plain BFS after deleting each vertex pair. Nothing in
//! here touches cycle sets or path gates.

use crate::graph::Graph;

fn connected_within(g: &Graph, alive: u64) -> bool {
    if alive == 0 {
        return true;
    }
    let start = alive.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        let fresh = g.neighbor_mask(v) & alive & !seen;
        seen |= fresh;
        let mut rest = fresh;
        while rest != 0 {
            stack.push(rest.trailing_zeros() as usize);
            rest &= rest - 1;
        }
    }
    seen == alive
}

pub fn is_connected(g: &Graph) -> bool {
    connected_within(g, g.vertex_mask())
}

/// At least four vertices and no separating set of size two or less.
pub fn is_3_connected(g: &Graph) -> bool {
    let n = g.n();
    if n < 4 {
        return false;
    }
    let all = g.vertex_mask();
    for u in 0..n {
        for v in u + 1..n {
            if !connected_within(g, all & !(1u64 << u) & !(1u64 << v)) {
                return false;
            }
        }
    }
    true
}

/// 3-connected, and deleting any single edge loses that.
pub fn is_minimally_3_connected(g: &Graph) -> bool {
    is_3_connected(g)
        && g.edges().all(|e| {
            let h = g.delete_edge(e.u(), e.v()).expect("edge present");
            !is_3_connected(&h)
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        let p = Graph::prism();
        assert!(is_3_connected(&p));
        assert!(is_minimally_3_connected(&p));
        for e in p.edges() {
            assert!(!is_3_connected(&p.delete_edge(e.u(), e.v()).unwrap()));
        }
        assert!(is_3_connected(&Graph::complete(4).unwrap()));
        assert!(is_minimally_3_connected(&Graph::wheel(5).unwrap()));
        assert!(is_minimally_3_connected(
            &Graph::complete_bipartite_3(3).unwrap()
        ));
        let k5 = Graph::complete(5).unwrap();
        assert!(is_3_connected(&k5));
        assert!(!is_minimally_3_connected(&k5));
    }

    #[test]
    fn small_graphs_fail() {
        assert!(!is_3_connected(&Graph::complete(3).unwrap()));
        assert!(!is_3_connected(&Graph::cycle_graph(6).unwrap()));
        assert!(is_connected(&Graph::path_graph(5).unwrap()));
        assert!(!is_connected(&Graph::empty(2).unwrap()));
    }
}
