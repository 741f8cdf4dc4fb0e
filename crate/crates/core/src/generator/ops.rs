//! The five shelf procedures: two edge additions and three vertex splits.

use crate::compat::{no_chording_paths, VertexPairSet};
use crate::cycles::{apply_add_edge, apply_flip_edge, apply_subdivide_edge, CycleSet};
use crate::graph::{Graph, VertexId};

use super::{Candidate, Provenance, ShelfEntry};

/// How a candidate's graph came from its parent, enough to carry the
/// parent's cycles across.
#[derive(Debug, Clone)]
pub(crate) enum Step {
    /// `parent` is the graph before the edge `uv` was added.
    Add {
        parent: Graph,
        u: VertexId,
        v: VertexId,
    },
    /// Subdivide `sub` with the new vertex, then flip `(flip, hub)` onto it.
    Split {
        sub: (VertexId, VertexId),
        flip: (VertexId, VertexId),
        new: VertexId,
    },
}

impl Step {
    pub(crate) fn cycles(&self, parent: &CycleSet) -> CycleSet {
        match self {
            Step::Add { parent: g, u, v } => apply_add_edge(parent, g, *u, *v),
            Step::Split {
                sub: (a, b),
                flip: (p, hub),
                new,
            } => {
                let sub = apply_subdivide_edge(parent, *a, *b, *new);
                apply_flip_edge(&sub, *p, *hub, *new).expect("split flips are admissible")
            }
        }
    }
}

fn gate(e: &ShelfEntry, pairs: &[(VertexId, VertexId)], removed: &[(VertexId, VertexId)]) -> bool {
    let pairs = VertexPairSet::new(pairs.iter().copied()).expect("distinct pair ends");
    no_chording_paths(&e.cycles, &e.graph, &pairs, removed).expect("gate edges present")
}

/// Split `v` toward `u` and `w`, with the new vertex taking `vw` by
/// subdivision and `vu` by a flip.
fn split(
    e: &ShelfEntry,
    v: VertexId,
    u: VertexId,
    w: VertexId,
    provenance: impl FnOnce(VertexId) -> Provenance,
) -> Candidate {
    let (graph, new) = e
        .graph
        .split_vertex(v, u, w)
        .expect("split preconditions hold");
    Candidate {
        graph,
        provenance: provenance(new),
        step: Step::Split {
            sub: (v, w),
            flip: (u, v),
            new,
        },
    }
}

fn add(e: &ShelfEntry, u: VertexId, v: VertexId, provenance: Provenance) -> Candidate {
    Candidate {
        graph: e.graph.add_edge(u, v).expect("non-edge"),
        provenance,
        step: Step::Add {
            parent: e.graph.clone(),
            u,
            v,
        },
    }
}

pub(crate) fn candidates_e1(e: &ShelfEntry) -> Vec<Candidate> {
    e.graph
        .non_edges()
        .map(|(u, v)| add(e, u, v, Provenance::B { u, v }))
        .collect()
}

pub(crate) fn candidates_e2(e: &ShelfEntry) -> Vec<Candidate> {
    let Provenance::B { u, v } = e.provenance else {
        return Vec::new();
    };
    let g = &e.graph;
    let mut out = Vec::new();
    for w in 0..g.n() {
        if w != u && !g.has_edge(w, u) {
            out.push(add(e, u, w, Provenance::C { x: u, y: v, z: w }));
        }
        if w != v && !g.has_edge(w, v) {
            out.push(add(e, w, v, Provenance::C { x: v, y: u, z: w }));
        }
    }
    out
}

pub(crate) fn candidates_c1(e: &ShelfEntry) -> Vec<Candidate> {
    let Provenance::B { u: b, v: c } = e.provenance else {
        return Vec::new();
    };
    let g = &e.graph;
    let mut out = Vec::new();
    for a in g.neighbors(b).filter(|&a| a != c) {
        if gate(e, &[(c, a), (b, c)], &[(b, c), (b, a)]) {
            out.push(split(e, b, a, c, |x| Provenance::A1 {
                split: b,
                other: c,
                third: a,
                new: x,
            }));
        }
    }
    for d in g.neighbors(c).filter(|&d| d != b) {
        if gate(e, &[(b, d), (c, b)], &[(b, c), (c, d)]) {
            out.push(split(e, c, d, b, |y| Provenance::A1 {
                split: c,
                other: b,
                third: d,
                new: y,
            }));
        }
    }
    out
}

pub(crate) fn candidates_c2(e: &ShelfEntry) -> Vec<Candidate> {
    let Provenance::A1 {
        split: c,
        other: b,
        third: d,
        new: y,
    } = e.provenance
    else {
        return Vec::new();
    };
    let g = &e.graph;
    let removed_for = |a: VertexId| [(a, b), (b, y), (c, y), (d, y)];
    let candidates: Vec<VertexId> = g
        .neighbors(b)
        .filter(|&a| a != c && a != d && a != y)
        .collect();
    let mut out = Vec::new();
    for &a in &candidates {
        if gate(e, &[(c, a), (c, b), (d, b), (d, a)], &removed_for(a)) {
            out.push(split(e, b, y, a, |x| Provenance::A2 { b, u: y, a, new: x }));
        }
    }
    for &a in &candidates {
        for &k in candidates.iter().filter(|&&k| k != a) {
            if gate(e, &[(k, a), (k, b)], &removed_for(a)) {
                out.push(split(e, b, k, a, |x| Provenance::A2 { b, u: k, a, new: x }));
            }
        }
    }
    out
}

pub(crate) fn candidates_c3(e: &ShelfEntry) -> Vec<Candidate> {
    let Provenance::C { x, y, z } = e.provenance else {
        return Vec::new();
    };
    if gate(e, &[(x, y), (x, z), (y, z)], &[(x, y), (x, z)]) {
        vec![split(e, x, y, z, |w| Provenance::A3 { x, y, z, new: w })]
    } else {
        Vec::new()
    }
}

fn realize(e: &ShelfEntry, cands: Vec<Candidate>) -> Vec<ShelfEntry> {
    cands
        .into_iter()
        .map(|c| {
            let cycles = c.step.cycles(&e.cycles);
            ShelfEntry::new(c.graph, cycles, c.provenance)
        })
        .collect()
}

/// Every single edge addition of a finished entry.
pub fn e1(e: &ShelfEntry) -> Vec<ShelfEntry> {
    realize(e, candidates_e1(e))
}

/// Every second edge addition sharing an end with the recorded one of a
/// `B` entry.
pub fn e2(e: &ShelfEntry) -> Vec<ShelfEntry> {
    realize(e, candidates_e2(e))
}

/// Gated splits of either end of the added edge of a `B` entry.
pub fn c1(e: &ShelfEntry) -> Vec<ShelfEntry> {
    realize(e, candidates_c1(e))
}

/// Gated splits of the unsplit end of an `A1` entry.
pub fn c2(e: &ShelfEntry) -> Vec<ShelfEntry> {
    realize(e, candidates_c2(e))
}

/// The gated split of the shared end of a `C` entry; at most one.
pub fn c3(e: &ShelfEntry) -> Vec<ShelfEntry> {
    realize(e, candidates_c3(e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::enumerate_cycles_bruteforce;
    use crate::validate::is_minimally_3_connected;

    fn exact(entries: &[ShelfEntry]) {
        for e in entries {
            assert_eq!(
                e.cycles,
                enumerate_cycles_bruteforce(&e.graph),
                "{:?}",
                e.provenance
            );
        }
    }

    #[test]
    fn e1_on_prism() {
        let out = e1(&ShelfEntry::root());
        assert_eq!(out.len(), 6);
        assert!(out.iter().all(|e| e.graph.m() == 10 && e.graph.n() == 6));
        exact(&out);
        let k5 = ShelfEntry::new(
            Graph::complete(5).unwrap(),
            enumerate_cycles_bruteforce(&Graph::complete(5).unwrap()),
            Provenance::Root,
        );
        assert!(e1(&k5).is_empty());
    }

    #[test]
    fn e2_shares_a_vertex() {
        let b = e1(&ShelfEntry::root());
        let plus02 = b
            .iter()
            .find(|e| e.provenance == Provenance::B { u: 0, v: 2 })
            .unwrap();
        let out = e2(plus02);
        assert!(!out.is_empty());
        exact(&out);
        for e in &out {
            let Provenance::C { x, y, z } = e.provenance else {
                panic!()
            };
            assert!([0, 2].contains(&x) && [0, 2].contains(&y) && x != y);
            assert!(e.graph.has_edge(x, z) && !plus02.graph.has_edge(x, z));
        }
    }

    #[test]
    fn splits_are_exact_and_minimal() {
        let root = ShelfEntry::root();
        for b in e1(&root) {
            let a1 = c1(&b);
            exact(&a1);
            for e in &a1 {
                assert_eq!((e.graph.n(), e.graph.m()), (7, 11));
                assert!(is_minimally_3_connected(&e.graph));
                let a2 = c2(e);
                exact(&a2);
                for f in &a2 {
                    assert_eq!((f.graph.n(), f.graph.m()), (8, 12));
                    assert!(is_minimally_3_connected(&f.graph));
                }
            }
            for c in e2(&b) {
                let a3 = c3(&c);
                assert!(a3.len() <= 1);
                exact(&a3);
                for f in &a3 {
                    assert_eq!((f.graph.n(), f.graph.m()), (7, 12));
                    assert!(is_minimally_3_connected(&f.graph));
                }
            }
        }
    }
}
