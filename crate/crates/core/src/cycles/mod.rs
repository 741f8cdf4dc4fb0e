//! Cycle sets carried alongside each graph, and their propagation through
//! edge addition, edge subdivision and edge flips.
//!
//! A [`CycleSet`] is always the complete set of cycles of its companion
//! graph. The generator never enumerates cycles from scratch; the brute
//! force [`enumerate_cycles_bruteforce`] exists as a seed check and test
//! oracle.

mod pattern;

use std::fmt;

use smallvec::SmallVec;
use thiserror::Error;

use crate::graph::{bit, bits, Graph, VertexId};

pub use pattern::{apply_flip_edge, extract_pattern, Pattern, Token};

pub(crate) type Seq = SmallVec<[u8; 16]>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("a cycle needs at least 3 vertices, got {0}")]
    TooShort(usize),
    #[error("vertex {0} repeats in cycle")]
    RepeatedVertex(VertexId),
    #[error("vertex id {0} does not fit a cycle entry")]
    VertexOutOfRange(VertexId),
    #[error("{1}{2} does not chord cycle {0}")]
    NotAChord(Cycle, VertexId, VertexId),
    #[error("cycle {0} holds fewer than two of the flip vertices")]
    TooFewMarked(Cycle),
    #[error("flip vertices must be distinct, got {0}, {1}, {2}")]
    FlipArguments(VertexId, VertexId, VertexId),
    #[error("cycle {cycle} has pattern {pattern}, which no valid flip can produce")]
    InadmissiblePattern { cycle: Cycle, pattern: Pattern },
    #[error("malformed cycle text {0:?}")]
    Parse(String),
}

/// A cycle as its vertex sequence, closed implicitly.
///
/// Stored in canonical rotation: the smallest vertex first, followed by the
/// smaller of its two cycle neighbours.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    verts: Seq,
}

impl Cycle {
    pub fn new<I>(seq: I) -> Result<Cycle, CycleError>
    where
        I: IntoIterator<Item = VertexId>,
    {
        let mut verts = Seq::new();
        let mut seen = 0u64;
        for v in seq {
            if v >= 64 {
                return Err(CycleError::VertexOutOfRange(v));
            }
            if seen & bit(v) != 0 {
                return Err(CycleError::RepeatedVertex(v));
            }
            seen |= bit(v);
            verts.push(v as u8);
        }
        if verts.len() < 3 {
            return Err(CycleError::TooShort(verts.len()));
        }
        Ok(Cycle::canonical(verts))
    }

    /// Canonicalize a sequence already known to be a valid cycle.
    pub(crate) fn canonical(mut verts: Seq) -> Cycle {
        debug_assert!(verts.len() >= 3);
        let (min_pos, _) = verts
            .iter()
            .enumerate()
            .min_by_key(|&(_, v)| *v)
            .expect("non-empty");
        verts.rotate_left(min_pos);
        let k = verts.len();
        if verts[k - 1] < verts[1] {
            verts[1..].reverse();
        }
        Cycle { verts }
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.verts.iter().map(|&v| v as VertexId)
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.verts
    }

    pub fn mask(&self) -> u64 {
        self.verts.iter().fold(0, |acc, &v| acc | bit(v as usize))
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.position(v).is_some()
    }

    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.verts.iter().position(|&x| x as usize == v)
    }

    /// Whether `a` and `b` are consecutive on the cycle.
    pub fn contains_edge(&self, a: VertexId, b: VertexId) -> bool {
        match (self.position(a), self.position(b)) {
            (Some(i), Some(j)) => cyclic_neighbors(i, j, self.len()),
            _ => false,
        }
    }

    /// The cycle's edges as `(u, v)` pairs in traversal order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let k = self.len();
        (0..k).map(move |i| (self.verts[i] as usize, self.verts[(i + 1) % k] as usize))
    }

    /// Whether every consecutive pair is an edge of `g`.
    pub fn lies_in(&self, g: &Graph) -> bool {
        self.edges().all(|(u, v)| g.has_edge(u, v))
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.verts.iter().enumerate() {
            if i > 0 {
                f.write_str("-")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl std::str::FromStr for Cycle {
    type Err = CycleError;

    fn from_str(s: &str) -> Result<Cycle, CycleError> {
        let verts = s
            .split('-')
            .map(|t| {
                t.parse::<VertexId>()
                    .map_err(|_| CycleError::Parse(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Cycle::new(verts)
    }
}

#[inline]
fn cyclic_neighbors(i: usize, j: usize, k: usize) -> bool {
    (i + 1) % k == j || (j + 1) % k == i
}

/// The set of cycles of one graph, deduplicated under canonical rotation
/// and kept sorted.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct CycleSet {
    cycles: Vec<Cycle>,
}

impl fmt::Debug for CycleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.cycles.iter()).finish()
    }
}

impl FromIterator<Cycle> for CycleSet {
    fn from_iter<T: IntoIterator<Item = Cycle>>(iter: T) -> Self {
        let mut cycles: Vec<Cycle> = iter.into_iter().collect();
        cycles.sort_unstable();
        cycles.dedup();
        CycleSet { cycles }
    }
}

impl CycleSet {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Cycle> {
        self.cycles.iter()
    }

    pub fn contains(&self, c: &Cycle) -> bool {
        self.cycles.binary_search(c).is_ok()
    }

    pub fn is_subset(&self, other: &CycleSet) -> bool {
        self.cycles.iter().all(|c| other.contains(c))
    }

    /// Cycles that use none of the given edges: the cycle set of `G \ X`.
    pub fn avoiding(&self, removed: &[(VertexId, VertexId)]) -> impl Iterator<Item = &Cycle> + '_ {
        let removed: SmallVec<[(VertexId, VertexId); 4]> = removed.iter().copied().collect();
        self.cycles
            .iter()
            .filter(move |c| !removed.iter().any(|&(u, v)| c.contains_edge(u, v)))
    }
}

impl<'a> IntoIterator for &'a CycleSet {
    type Item = &'a Cycle;
    type IntoIter = std::slice::Iter<'a, Cycle>;

    fn into_iter(self) -> Self::IntoIter {
        self.cycles.iter()
    }
}

/// Every cycle of `g`, by exhaustive simple-path search.
///
/// Each cycle is discovered from its smallest vertex `s`, extending paths
/// through vertices above `s` only, and recorded in one direction.
pub fn enumerate_cycles_bruteforce(g: &Graph) -> CycleSet {
    let mut out = Vec::new();
    let mut path = Seq::new();
    for s in 0..g.n() {
        let above = g.vertex_mask() & !((bit(s) << 1) - 1);
        path.clear();
        path.push(s as u8);
        extend_paths(g, s, above, bit(s), &mut path, &mut out);
    }
    out.into_iter().collect()
}

fn extend_paths(
    g: &Graph,
    s: usize,
    allowed: u64,
    used: u64,
    path: &mut Seq,
    out: &mut Vec<Cycle>,
) {
    let last = *path.last().expect("non-empty") as usize;
    let row = g.neighbor_mask(last);
    if path.len() >= 3 && row & bit(s) != 0 && path[1] < *path.last().unwrap() {
        out.push(Cycle {
            verts: path.clone(),
        });
    }
    let mut next = row & allowed & !used;
    while next != 0 {
        let v = next.trailing_zeros() as usize;
        next &= next - 1;
        path.push(v as u8);
        extend_paths(g, s, allowed, used | bit(v), path, out);
        path.pop();
    }
}

/// Whether the edge `uv` would chord `c`: both ends on the cycle but not
/// consecutive on it.
pub fn chords(c: &Cycle, u: VertexId, v: VertexId) -> bool {
    match (c.position(u), c.position(v)) {
        (Some(i), Some(j)) => i != j && !cyclic_neighbors(i, j, c.len()),
        _ => false,
    }
}

/// Split `c` along the chord `v1 v2` into the two cycles it closes:
/// the arc from `v2` forward to `v1`, and the arc from `v1` forward to `v2`.
pub fn chord_cycle(c: &Cycle, v1: VertexId, v2: VertexId) -> Result<(Cycle, Cycle), CycleError> {
    if !chords(c, v1, v2) {
        return Err(CycleError::NotAChord(c.clone(), v1, v2));
    }
    let i = c.position(v1).expect("checked");
    let j = c.position(v2).expect("checked");
    Ok((arc(c.raw(), j, i), arc(c.raw(), i, j)))
}

/// Closed cycle formed by walking `seq` forward from index `from` to `to`.
fn arc(seq: &[u8], from: usize, to: usize) -> Cycle {
    let k = seq.len();
    let len = (to + k - from) % k + 1;
    let verts: Seq = (0..len).map(|t| seq[(from + t) % k]).collect();
    Cycle::canonical(verts)
}

/// Cycles after adding the edge `ab` to `g`: every old cycle, plus one new
/// cycle for each simple `a`-`b` path of `g`, closed by the new edge.
///
/// Chording old cycles through `ab` only ever yields cycles shorter than the
/// chorded one, so it misses new cycles whose `a`-`b` path cannot be
/// completed to a cycle of `g` (a Hamiltonian path, for instance). The new
/// cycles are therefore read off the paths directly; the chorded halves are
/// among them.
pub fn apply_add_edge(cs: &CycleSet, g: &Graph, a: VertexId, b: VertexId) -> CycleSet {
    debug_assert!(a != b && !g.has_edge(a, b));
    let mut out: Vec<Cycle> = cs.iter().cloned().collect();
    let mut path = Seq::new();
    path.push(a as u8);
    paths_between(g, b, bit(a), &mut path, &mut |p| {
        if p.len() >= 3 {
            out.push(Cycle::canonical(p.iter().copied().collect()));
        }
    });
    out.into_iter().collect()
}

/// Call `visit` on every simple path that extends `path` to `target`.
pub(crate) fn paths_between(
    g: &Graph,
    target: VertexId,
    used: u64,
    path: &mut Seq,
    visit: &mut impl FnMut(&[u8]),
) {
    let last = *path.last().expect("non-empty") as usize;
    if last == target {
        visit(path);
        return;
    }
    let mut next = g.neighbor_mask(last) & !used;
    while next != 0 {
        let v = next.trailing_zeros() as usize;
        next &= next - 1;
        if v != target && !reaches(g, v, target, used | bit(v)) {
            continue;
        }
        path.push(v as u8);
        paths_between(g, target, used | bit(v), path, visit);
        path.pop();
    }
}

/// Whether `to` is reachable from `from` without entering `blocked`
/// (`from` itself may be blocked).
fn reaches(g: &Graph, from: VertexId, to: VertexId, blocked: u64) -> bool {
    let open = g.vertex_mask() & !blocked | bit(to);
    let mut seen = bit(from);
    let mut frontier = seen;
    while frontier != 0 {
        if seen & bit(to) != 0 {
            return true;
        }
        let mut grow = 0;
        for v in bits(frontier) {
            grow |= g.neighbor_mask(v);
        }
        frontier = grow & open & !seen;
        seen |= frontier;
    }
    seen & bit(to) != 0
}

/// Cycles after subdividing `ab` with the new vertex `c`: `a, b` becomes
/// `a, c, b` wherever the edge is used.
pub fn apply_subdivide_edge(cs: &CycleSet, a: VertexId, b: VertexId, c: VertexId) -> CycleSet {
    cs.iter()
        .map(|cyc| {
            let (Some(i), Some(j)) = (cyc.position(a), cyc.position(b)) else {
                return cyc.clone();
            };
            let k = cyc.len();
            let insert_at = if (i + 1) % k == j {
                i + 1
            } else if (j + 1) % k == i {
                j + 1
            } else {
                return cyc.clone();
            };
            let mut verts = cyc.verts.clone();
            verts.insert(insert_at, c as u8);
            Cycle::canonical(verts)
        })
        .collect()
}
