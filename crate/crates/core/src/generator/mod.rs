//! Shelf-by-shelf generation of minimally 3-connected graphs from the prism,
//! and cubic generation by edge bridging.
//!
//! A shelf holds every graph built so far with `n` vertices and `m` edges,
//! split by the step that made it: finished graphs (`A0`..`A3`), single edge
//! additions (`B`) and double edge additions sharing a vertex (`C`). Shelf
//! `(m, n)` is built from shelves `(m - 1, n)` and `(m - 1, n - 1)` only.

mod cubic;
mod ops;

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::canon::{certificate, Certificate};
use crate::cycles::{enumerate_cycles_bruteforce, Cycle, CycleSet};
use crate::graph::{Graph, VertexId};

pub use cubic::{bridge, generate_cubic, CubicGeneration};
pub use ops::{c1, c2, c3, e1, e2};

#[derive(Debug, Error)]
pub enum GenerateError {
    #[error("max_n must be at least {min}, got {got}")]
    MaxNTooSmall { got: usize, min: usize },
    #[error("cubic graphs need an even vertex count, got {0}")]
    OddCubic(usize),
    #[error("resumed level {0} is incomplete")]
    IncompleteLevel(usize),
    #[error("failed to build thread pool: {0}")]
    ThreadPool(#[from] rayon::ThreadPoolBuildError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassTag {
    A0,
    B,
    C,
    A1,
    A2,
    A3,
}

impl ClassTag {
    pub const ALL: [ClassTag; 6] = [
        ClassTag::A0,
        ClassTag::B,
        ClassTag::C,
        ClassTag::A1,
        ClassTag::A2,
        ClassTag::A3,
    ];

    /// Finished, minimally 3-connected classes.
    pub fn is_final(self) -> bool {
        !matches!(self, ClassTag::B | ClassTag::C)
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ClassTag::A0 => "A0",
            ClassTag::B => "B",
            ClassTag::C => "C",
            ClassTag::A1 => "A1",
            ClassTag::A2 => "A2",
            ClassTag::A3 => "A3",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for ClassTag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClassTag::ALL
            .into_iter()
            .find(|t| t.to_string() == s)
            .ok_or_else(|| format!("unknown class tag {s:?}"))
    }
}

/// How an entry was made from its parent.
///
/// Vertex names refer to the entry's own graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    Root,
    /// Edge `uv` added to a finished graph.
    B {
        u: VertexId,
        v: VertexId,
    },
    /// Edges `xy` (the earlier one) and `xz` added.
    C {
        x: VertexId,
        y: VertexId,
        z: VertexId,
    },
    /// `split` was split toward `other` (the far end of the added edge) and
    /// `third`; `new` is the split-off vertex.
    A1 {
        split: VertexId,
        other: VertexId,
        third: VertexId,
        new: VertexId,
    },
    /// `b` was split toward `u` and `a`; `new` is the split-off vertex.
    A2 {
        b: VertexId,
        u: VertexId,
        a: VertexId,
        new: VertexId,
    },
    /// `x` was split toward `y` and `z`; `new` is the split-off vertex.
    A3 {
        x: VertexId,
        y: VertexId,
        z: VertexId,
        new: VertexId,
    },
}

impl Provenance {
    pub fn class(&self) -> ClassTag {
        match self {
            Provenance::Root => ClassTag::A0,
            Provenance::B { .. } => ClassTag::B,
            Provenance::C { .. } => ClassTag::C,
            Provenance::A1 { .. } => ClassTag::A1,
            Provenance::A2 { .. } => ClassTag::A2,
            Provenance::A3 { .. } => ClassTag::A3,
        }
    }

    /// The recorded vertices in field order.
    pub fn fields(&self) -> Vec<VertexId> {
        match *self {
            Provenance::Root => vec![],
            Provenance::B { u, v } => vec![u, v],
            Provenance::C { x, y, z } => vec![x, y, z],
            Provenance::A1 {
                split,
                other,
                third,
                new,
            } => vec![split, other, third, new],
            Provenance::A2 { b, u, a, new } => vec![b, u, a, new],
            Provenance::A3 { x, y, z, new } => vec![x, y, z, new],
        }
    }

    pub fn from_fields(class: ClassTag, f: &[VertexId]) -> Option<Provenance> {
        Some(match (class, f) {
            (ClassTag::A0, []) => Provenance::Root,
            (ClassTag::B, &[u, v]) => Provenance::B { u, v },
            (ClassTag::C, &[x, y, z]) => Provenance::C { x, y, z },
            (ClassTag::A1, &[split, other, third, new]) => Provenance::A1 {
                split,
                other,
                third,
                new,
            },
            (ClassTag::A2, &[b, u, a, new]) => Provenance::A2 { b, u, a, new },
            (ClassTag::A3, &[x, y, z, new]) => Provenance::A3 { x, y, z, new },
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShelfEntry {
    pub graph: Graph,
    pub cycles: CycleSet,
    pub provenance: Provenance,
    pub certificate: Certificate,
}

impl ShelfEntry {
    pub fn new(graph: Graph, cycles: CycleSet, provenance: Provenance) -> ShelfEntry {
        let certificate = certificate(&graph);
        ShelfEntry {
            graph,
            cycles,
            provenance,
            certificate,
        }
    }

    /// The prism with its fourteen cycles.
    pub fn root() -> ShelfEntry {
        let graph = Graph::prism();
        let cycles = prism_cycles();
        debug_assert_eq!(cycles, enumerate_cycles_bruteforce(&graph));
        ShelfEntry::new(graph, cycles, Provenance::Root)
    }
}

const PRISM_CYCLES: [&str; 14] = [
    "0-1-5-4-3",
    "0-1-2-5-4-3",
    "0-1-5-2-3-4",
    "0-3-2-1-5-4",
    "1-2-3-4-5",
    "0-1-2-5-4",
    "0-1-5-2-3",
    "0-1-2-3-4",
    "2-3-4-5",
    "1-2-5",
    "0-3-2-5-4",
    "0-1-5-4",
    "0-3-4",
    "0-1-2-3",
];

pub fn prism_cycles() -> CycleSet {
    PRISM_CYCLES
        .iter()
        .map(|s| s.parse::<Cycle>().expect("valid literal"))
        .collect()
}

/// All entries with a given edge and vertex count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shelf {
    pub m: usize,
    pub n: usize,
    classes: [Vec<ShelfEntry>; 6],
}

impl Shelf {
    pub fn new(m: usize, n: usize) -> Shelf {
        Shelf {
            m,
            n,
            classes: Default::default(),
        }
    }

    pub fn class(&self, tag: ClassTag) -> &[ShelfEntry] {
        &self.classes[tag.index()]
    }

    pub fn entries(&self) -> impl Iterator<Item = &ShelfEntry> {
        self.classes.iter().flatten()
    }

    pub fn finished(&self) -> impl Iterator<Item = &ShelfEntry> {
        ClassTag::ALL
            .into_iter()
            .filter(|t| t.is_final())
            .flat_map(|t| self.class(t).iter())
    }

    pub fn len(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Append an entry to its class.
    pub fn push(&mut self, entry: ShelfEntry) {
        self.classes[entry.provenance.class().index()].push(entry);
    }

    fn sort(&mut self) {
        for class in &mut self.classes {
            class.sort_by(|a, b| a.certificate.cmp(&b.certificate));
        }
    }
}

/// A candidate made by one of the procedures, before its cycles are known.
pub(crate) struct Candidate {
    pub graph: Graph,
    pub provenance: Provenance,
    pub step: ops::Step,
}

/// Certificates seen on the shelf under construction.
struct CertStore(HashSet<Certificate>);

impl CertStore {
    /// Realize the candidates that are new, in input order. Certificates are
    /// computed in parallel, admission is sequential, so the result does not
    /// depend on the thread count.
    fn admit(
        &mut self,
        inputs: &[ShelfEntry],
        produce: impl Fn(&ShelfEntry) -> Vec<Candidate> + Sync,
    ) -> Vec<ShelfEntry> {
        let batches: Vec<Vec<(Certificate, Candidate)>> = inputs
            .par_iter()
            .map(|e| {
                produce(e)
                    .into_iter()
                    .map(|c| (certificate(&c.graph), c))
                    .collect()
            })
            .collect();
        let mut kept: Vec<(usize, Certificate, Candidate)> = Vec::new();
        for (i, batch) in batches.into_iter().enumerate() {
            for (cert, cand) in batch {
                if self.0.insert(cert.clone()) {
                    kept.push((i, cert, cand));
                }
            }
        }
        kept.into_par_iter()
            .map(|(i, cert, cand)| {
                let cycles = cand.step.cycles(&inputs[i].cycles);
                ShelfEntry {
                    graph: cand.graph,
                    cycles,
                    provenance: cand.provenance,
                    certificate: cert,
                }
            })
            .collect()
    }
}

/// Sources for shelf `(m, n)`: shelf `(m - 1, n)` and shelf `(m - 1, n - 1)`.
pub struct Sources<'a> {
    pub same_n: Option<&'a Shelf>,
    pub smaller_n: Option<&'a Shelf>,
}

/// Which classes to produce on a shelf.
#[derive(Debug, Clone, Copy)]
pub struct ShelfPlan {
    pub intermediates: bool,
    pub finished: bool,
}

/// Build shelf `(m, n)`: C, B, A1, A2, A3 in that order, discarding any
/// graph whose certificate is already on the shelf.
pub fn run_shelf(m: usize, n: usize, src: Sources<'_>, plan: ShelfPlan) -> Shelf {
    let empty = Shelf::new(0, 0);
    let same = src.same_n.unwrap_or(&empty);
    let smaller = src.smaller_n.unwrap_or(&empty);
    let mut store = CertStore(HashSet::new());
    let mut shelf = Shelf::new(m, n);
    if plan.intermediates {
        shelf.classes[ClassTag::C.index()] =
            store.admit(same.class(ClassTag::B), ops::candidates_e2);
        let finished: Vec<ShelfEntry> = same.finished().cloned().collect();
        shelf.classes[ClassTag::B.index()] = store.admit(&finished, ops::candidates_e1);
    }
    if plan.finished {
        shelf.classes[ClassTag::A1.index()] =
            store.admit(smaller.class(ClassTag::B), ops::candidates_c1);
        shelf.classes[ClassTag::A2.index()] =
            store.admit(smaller.class(ClassTag::A1), ops::candidates_c2);
        shelf.classes[ClassTag::A3.index()] =
            store.admit(smaller.class(ClassTag::C), ops::candidates_c3);
    }
    if (m, n) == (9, 6) {
        let root = ShelfEntry::root();
        if store.0.insert(root.certificate.clone()) {
            shelf.classes[ClassTag::A0.index()].push(root);
        }
    }
    shelf.sort();
    shelf
}

/// Every shelf for one vertex count, keyed by edge count.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Level {
    pub n: usize,
    pub shelves: BTreeMap<usize, Shelf>,
    /// Whether B and C were produced, so the level can seed `n + 1`.
    pub with_intermediates: bool,
}

/// Minimally 3-connected graphs on `n` vertices, sorted by certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collection {
    pub n: usize,
    pub graphs: Vec<(Certificate, Graph)>,
}

impl Collection {
    fn from_graphs(n: usize, graphs: impl IntoIterator<Item = Graph>) -> Collection {
        let mut graphs: Vec<(Certificate, Graph)> =
            graphs.into_iter().map(|g| (certificate(&g), g)).collect();
        graphs.sort_by(|a, b| a.0.cmp(&b.0));
        graphs.dedup_by(|a, b| a.0 == b.0);
        Collection { n, graphs }
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }
}

type Observer<'a, T> = Box<dyn FnMut(&T) + Send + 'a>;

/// Driver for the min3 mode.
pub struct Min3Generator<'a> {
    max_n: usize,
    threads: usize,
    observer: Option<Observer<'a, Shelf>>,
    level_observer: Option<Observer<'a, Level>>,
    resume: Vec<Level>,
}

impl<'a> Min3Generator<'a> {
    pub fn new(max_n: usize) -> Result<Min3Generator<'a>, GenerateError> {
        if max_n < 6 {
            return Err(GenerateError::MaxNTooSmall { got: max_n, min: 6 });
        }
        Ok(Min3Generator {
            max_n,
            threads: 0,
            observer: None,
            level_observer: None,
            resume: Vec::new(),
        })
    }

    /// 0 picks the rayon default.
    pub fn threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }

    /// Called with each shelf once it is complete.
    pub fn on_shelf(mut self, f: impl FnMut(&Shelf) + Send + 'a) -> Self {
        self.observer = Some(Box::new(f));
        self
    }

    /// Called with each level once all its shelves are complete.
    pub fn on_level(mut self, f: impl FnMut(&Level) + Send + 'a) -> Self {
        self.level_observer = Some(Box::new(f));
        self
    }

    /// Continue after previously completed levels `6..=k`, in order. Their
    /// finished entries are reused and generation restarts at `k + 1`.
    pub fn resume_from(mut self, levels: Vec<Level>) -> Self {
        self.resume = levels;
        self
    }

    pub fn run(self) -> Result<Vec<Collection>, GenerateError> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.threads)
            .build()?;
        pool.install(move || self.run_inner())
    }

    fn run_inner(mut self) -> Result<Vec<Collection>, GenerateError> {
        let mut found: BTreeMap<usize, Vec<Graph>> = BTreeMap::new();
        let mut prev: Option<Level> = None;
        for (i, level) in std::mem::take(&mut self.resume).into_iter().enumerate() {
            if level.n != 6 + i || !level.with_intermediates {
                return Err(GenerateError::IncompleteLevel(level.n));
            }
            if level.n > self.max_n {
                break;
            }
            let graphs = found.entry(level.n).or_default();
            for shelf in level.shelves.values() {
                graphs.extend(shelf.finished().map(|e| e.graph.clone()));
            }
            prev = Some(level);
        }
        let start = prev.as_ref().map_or(6, |l| l.n + 1);
        for n in start..=self.max_n {
            let level = self.run_level(n, prev.as_ref());
            let graphs = found.entry(n).or_default();
            for shelf in level.shelves.values() {
                graphs.extend(shelf.finished().map(|e| e.graph.clone()));
            }
            if let Some(f) = self.level_observer.as_mut() {
                f(&level);
            }
            prev = Some(level);
        }
        Ok((6..=self.max_n)
            .map(|n| {
                let mut graphs = found.remove(&n).unwrap_or_default();
                graphs.push(Graph::wheel(n - 1).expect("n >= 6"));
                graphs.push(Graph::complete_bipartite_3(n - 3).expect("n >= 6"));
                Collection::from_graphs(n, graphs)
            })
            .collect())
    }

    fn run_level(&mut self, n: usize, prev: Option<&Level>) -> Level {
        let last = n == self.max_n;
        let halin = n >= 8;
        let finished_cap = if halin { 3 * n - 9 } else { usize::MAX };
        let cap = if halin { 3 * n - 7 } else { n * (n - 1) / 2 };
        // shelf (m + 1, n) reads (m, n - 1); past this nothing arrives from below
        let prev_top = prev
            .and_then(|l| l.shelves.iter().rev().find(|(_, s)| !s.is_empty()))
            .map_or(0, |(&m, _)| m);
        let mut level = Level {
            n,
            shelves: BTreeMap::new(),
            with_intermediates: !last,
        };
        if n == 6 {
            let plan = ShelfPlan {
                intermediates: false,
                finished: true,
            };
            let root = run_shelf(
                9,
                6,
                Sources {
                    same_n: None,
                    smaller_n: None,
                },
                plan,
            );
            level.shelves.insert(9, root);
        }
        for m in n + 4..=cap {
            if last && m > finished_cap {
                break;
            }
            let plan = ShelfPlan {
                intermediates: !last,
                finished: m <= finished_cap,
            };
            let shelf = run_shelf(
                m,
                n,
                Sources {
                    same_n: level.shelves.get(&(m - 1)),
                    smaller_n: prev.and_then(|l| l.shelves.get(&(m - 1))),
                },
                plan,
            );
            log::info!(
                "n={n} m={m}: C={} B={} A1={} A2={} A3={}",
                shelf.class(ClassTag::C).len(),
                shelf.class(ClassTag::B).len(),
                shelf.class(ClassTag::A1).len(),
                shelf.class(ClassTag::A2).len(),
                shelf.class(ClassTag::A3).len(),
            );
            if let Some(f) = self.observer.as_mut() {
                f(&shelf);
            }
            let done = shelf.is_empty() && m > prev_top;
            level.shelves.insert(m, shelf);
            if done {
                break;
            }
        }
        level
    }
}

/// Every minimally 3-connected graph with 6..=max_n vertices.
pub fn generate_min3(max_n: usize) -> Result<Vec<Collection>, GenerateError> {
    Min3Generator::new(max_n)?.run()
}
