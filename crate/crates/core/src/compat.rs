//! Chording-path queries and the three 3-compatibility predicates that gate
//! every vertex split.
//!
//! A chording path for a cycle `C` is a path that uses a chord `uv` of `C`
//! and meets `C` in `u` and `v` only. For a fixed cycle and chord, an
//! `a`-`b` chording path exists iff, after deleting the other vertices of
//! `C` and the chord itself, there are two vertex-disjoint paths linking
//! `{a, b}` to `{u, v}`. That is a unit-capacity flow of value two, found
//! here with at most two augmentations.

use std::collections::HashSet;

use smallvec::SmallVec;
use thiserror::Error;

use crate::cycles::CycleSet;
use crate::graph::{bit, bits, Edge, Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompatError {
    #[error("pair ({0}, {0}) has identical ends")]
    DegeneratePair(VertexId),
    #[error("deleted edge {0}{1} is not an edge of the graph")]
    NotAnEdge(VertexId, VertexId),
    #[error("vertex {0} is not in the graph")]
    MissingVertex(VertexId),
    #[error("malformed compatible set: {0}")]
    Malformed(String),
}

/// Unordered vertex pairs to test for chording paths.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VertexPairSet {
    pairs: SmallVec<[(VertexId, VertexId); 4]>,
}

impl VertexPairSet {
    pub fn new<I>(pairs: I) -> Result<VertexPairSet, CompatError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut out = SmallVec::new();
        for (a, b) in pairs {
            if a == b {
                return Err(CompatError::DegeneratePair(a));
            }
            let p = (a.min(b), a.max(b));
            if !out.contains(&p) {
                out.push(p);
            }
        }
        out.sort_unstable();
        Ok(VertexPairSet { pairs: out })
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.pairs.iter().copied()
    }
}

/// The three shapes of 3-compatible set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompatibleSet {
    /// A vertex `x` and an edge `ab` with `x ∉ {a, b}`.
    VertexEdge { x: VertexId, edge: Edge },
    /// Two distinct, possibly adjacent, edges.
    EdgePair { first: Edge, second: Edge },
    /// Three distinct vertices.
    VertexTriple {
        x: VertexId,
        y: VertexId,
        z: VertexId,
    },
}

impl CompatibleSet {
    fn validate(&self, g: &Graph) -> Result<(), CompatError> {
        let has_vertex = |v: VertexId| {
            if v < g.n() {
                Ok(())
            } else {
                Err(CompatError::MissingVertex(v))
            }
        };
        let has_edge = |e: &Edge| {
            if g.has_edge(e.u(), e.v()) {
                Ok(())
            } else {
                Err(CompatError::NotAnEdge(e.u(), e.v()))
            }
        };
        match self {
            CompatibleSet::VertexEdge { x, edge } => {
                has_vertex(*x)?;
                has_edge(edge)?;
                if edge.contains(*x) {
                    return Err(CompatError::Malformed(format!("{x} is an end of {edge}")));
                }
            }
            CompatibleSet::EdgePair { first, second } => {
                has_edge(first)?;
                has_edge(second)?;
                if first == second {
                    return Err(CompatError::Malformed(format!("{first} given twice")));
                }
            }
            CompatibleSet::VertexTriple { x, y, z } => {
                for v in [x, y, z] {
                    has_vertex(*v)?;
                }
                if x == y || y == z || x == z {
                    return Err(CompatError::Malformed(format!(
                        "vertices {x}, {y}, {z} are not distinct"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The pairs to test and the edges to delete first.
    pub fn conditions(&self) -> (VertexPairSet, SmallVec<[(VertexId, VertexId); 4]>) {
        let build = |pairs: &[(VertexId, VertexId)]| {
            VertexPairSet::new(pairs.iter().copied().filter(|(p, q)| p != q))
                .expect("identical ends filtered")
        };
        match *self {
            CompatibleSet::VertexEdge { x, edge } => {
                let (a, b) = edge.ends();
                (build(&[(x, a), (x, b)]), [(a, b)].into_iter().collect())
            }
            CompatibleSet::EdgePair { first, second } => {
                let (a, b) = first.ends();
                let (c, d) = second.ends();
                (
                    build(&[(a, c), (b, c), (a, d), (b, d)]),
                    [(a, b), (c, d)].into_iter().collect(),
                )
            }
            CompatibleSet::VertexTriple { x, y, z } => {
                (build(&[(x, y), (x, z), (y, z)]), SmallVec::new())
            }
        }
    }
}

/// Whether `G \ removed` has an `a`-`b` path that is a chording path of one
/// of its cycles. `cs` must be the cycle set of `g`.
pub fn has_chording_path(
    cs: &CycleSet,
    g: &Graph,
    a: VertexId,
    b: VertexId,
    removed: &[(VertexId, VertexId)],
) -> Result<bool, CompatError> {
    let pairs = VertexPairSet::new([(a, b)])?;
    Ok(!no_chording_paths(cs, g, &pairs, removed)?)
}

/// True iff no pair in `pairs` is joined by a chording path in
/// `G \ removed`. The cycles of `G \ removed` are those of `cs` that use no
/// removed edge.
pub fn no_chording_paths(
    cs: &CycleSet,
    g: &Graph,
    pairs: &VertexPairSet,
    removed: &[(VertexId, VertexId)],
) -> Result<bool, CompatError> {
    for &(u, v) in removed {
        if !g.has_edge(u, v) {
            return Err(CompatError::NotAnEdge(u, v));
        }
    }
    for (p, q) in pairs.iter() {
        if p >= g.n() {
            return Err(CompatError::MissingVertex(p));
        }
        if q >= g.n() {
            return Err(CompatError::MissingVertex(q));
        }
    }
    if pairs.is_empty() {
        return Ok(true);
    }
    let mut rows = g.rows().to_vec();
    for &(u, v) in removed {
        rows[u] &= !bit(v);
        rows[v] &= !bit(u);
    }
    let all = g.vertex_mask();
    let mut seen: HashSet<(u64, u8, u8)> = HashSet::new();
    for cyc in cs.avoiding(removed) {
        let on_cycle = cyc.mask();
        let seq: SmallVec<[u8; 16]> = cyc.vertices().map(|v| v as u8).collect();
        let k = seq.len();
        for (i, &u) in seq.iter().enumerate() {
            let u = u as usize;
            let prev = seq[(i + k - 1) % k] as usize;
            let next = seq[(i + 1) % k] as usize;
            let chords = rows[u] & on_cycle & !bit(prev) & !bit(next) & !((bit(u) << 1) - 1);
            for v in bits(chords) {
                if !seen.insert((on_cycle, u as u8, v as u8)) {
                    continue;
                }
                let allowed = all & !(on_cycle & !bit(u) & !bit(v));
                for (p, q) in pairs.iter() {
                    if allowed & bit(p) == 0 || allowed & bit(q) == 0 {
                        continue;
                    }
                    if links_through_chord(&mut rows, allowed, p, q, u, v) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Two vertex-disjoint paths joining `{p, q}` to `{u, v}` inside `allowed`,
/// without using the edge `uv`.
fn links_through_chord(
    rows: &mut [u64],
    allowed: u64,
    p: VertexId,
    q: VertexId,
    u: VertexId,
    v: VertexId,
) -> bool {
    rows[u] &= !bit(v);
    rows[v] &= !bit(u);
    let found = disjoint_links(rows, allowed, bit(p) | bit(q), bit(u) | bit(v)) >= 2;
    rows[u] |= bit(v);
    rows[v] |= bit(u);
    found
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    In,
    Out,
}

/// Maximum number (capped at two) of vertex-disjoint paths from the source
/// set to the sink set, inside `allowed`. A vertex in both sets forms a
/// path on its own.
fn disjoint_links(rows: &[u64], allowed: u64, sources: u64, sinks: u64) -> usize {
    let n = rows.len();
    let mut flow_out = vec![0u64; n];
    let mut through = 0u64;
    let mut src_used = 0u64;
    let mut sink_used = 0u64;
    let mut found = 0;
    // parent of (v, side): previous (vertex, side), or None for the source
    let mut parent_in: Vec<Option<(usize, Side)>> = vec![None; n];
    let mut parent_out: Vec<Option<(usize, Side)>> = vec![None; n];
    while found < 2 {
        let mut seen_in = 0u64;
        let mut seen_out = 0u64;
        let mut queue: SmallVec<[(usize, Side); 32]> = SmallVec::new();
        for s in bits(sources & allowed & !src_used) {
            seen_in |= bit(s);
            parent_in[s] = None;
            queue.push((s, Side::In));
        }
        let mut end = None;
        let mut head = 0;
        while head < queue.len() {
            let (x, side) = queue[head];
            head += 1;
            match side {
                Side::In => {
                    if through & bit(x) == 0 && seen_out & bit(x) == 0 {
                        seen_out |= bit(x);
                        parent_out[x] = Some((x, Side::In));
                        queue.push((x, Side::Out));
                    }
                    // cancel flow arriving at x
                    for y in 0..n {
                        if flow_out[y] & bit(x) != 0 && seen_out & bit(y) == 0 {
                            seen_out |= bit(y);
                            parent_out[y] = Some((x, Side::In));
                            queue.push((y, Side::Out));
                        }
                    }
                }
                Side::Out => {
                    if sinks & bit(x) != 0 && sink_used & bit(x) == 0 {
                        end = Some(x);
                        break;
                    }
                    if through & bit(x) != 0 && seen_in & bit(x) == 0 {
                        seen_in |= bit(x);
                        parent_in[x] = Some((x, Side::Out));
                        queue.push((x, Side::In));
                    }
                    for y in bits(rows[x] & allowed & !flow_out[x] & !seen_in) {
                        seen_in |= bit(y);
                        parent_in[y] = Some((x, Side::Out));
                        queue.push((y, Side::In));
                    }
                }
            }
        }
        let Some(t) = end else { break };
        sink_used |= bit(t);
        let mut cur = (t, Side::Out);
        loop {
            let prev = match cur.1 {
                Side::In => parent_in[cur.0],
                Side::Out => parent_out[cur.0],
            };
            let Some(prev) = prev else {
                src_used |= bit(cur.0);
                break;
            };
            match (prev.1, cur.1) {
                (Side::In, Side::Out) if prev.0 == cur.0 => through |= bit(cur.0),
                (Side::Out, Side::In) if prev.0 == cur.0 => through &= !bit(cur.0),
                (Side::Out, Side::In) => {
                    let (x, y) = (prev.0, cur.0);
                    if flow_out[y] & bit(x) != 0 {
                        flow_out[y] &= !bit(x);
                    } else {
                        flow_out[x] |= bit(y);
                    }
                }
                (Side::In, Side::Out) => {
                    // residual of flow cur -> prev
                    flow_out[cur.0] &= !bit(prev.0);
                }
                _ => unreachable!("arcs alternate sides"),
            }
            cur = prev;
        }
        found += 1;
    }
    found
}

/// Whether `s` is 3-compatible in `g`. `cs` must be the cycle set of `g`.
pub fn is_3_compatible(cs: &CycleSet, g: &Graph, s: &CompatibleSet) -> Result<bool, CompatError> {
    s.validate(g)?;
    let (pairs, removed) = s.conditions();
    no_chording_paths(cs, g, &pairs, &removed)
}
