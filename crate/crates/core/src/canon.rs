//! Canonical certificates for isomorphism rejection.
//!
//! The labeling is found by individualization and refinement: start from
//! the degree partition, refine by counts of neighbours in each cell until
//! stable, then branch on the first smallest non-singleton cell. Every
//! discrete partition reached is a labeling; the certificate is the least
//! adjacency encoding over all of them. Automorphisms discovered along the
//! way (two leaves with equal encodings) prune sibling branches in the same
//! orbit.

use std::fmt;

use crate::graph::{bit, bits, Graph, VertexId};

/// Canonical form of a graph: `[n]` followed by the upper triangle of the
/// canonically relabeled adjacency matrix, packed eight bits per
/// byte, most significant first, in column order `(0,1), (0,2), (1,2), ...`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Certificate(Vec<u8>);

impl Certificate {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn from_bytes(bytes: Vec<u8>) -> Certificate {
        Certificate(bytes)
    }
}

impl fmt::Debug for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Certificate(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

/// Anything that assigns isomorphism-complete certificates.
pub trait CertificateProvider: Sync {
    fn certificate(&self, g: &Graph) -> Certificate;
}

/// The built-in labeler.
#[derive(Debug, Default, Clone, Copy)]
pub struct Refiner;

impl CertificateProvider for Refiner {
    fn certificate(&self, g: &Graph) -> Certificate {
        certificate(g)
    }
}

pub fn certificate(g: &Graph) -> Certificate {
    encode(&canonical_form(g))
}

/// `g` relabeled canonically.
pub fn canonical_form(g: &Graph) -> Graph {
    g.permuted(&canonical_labeling(g))
}

/// `labeling[v]` is the canonical position of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<VertexId> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let mut search = Search {
        rows: g.rows(),
        best: None,
        autos: Vec::new(),
    };
    let mut cells = degree_partition(g);
    refine(search.rows, &mut cells);
    search.descend(cells, &mut Vec::new());
    search.best.expect("at least one leaf").1
}

fn encode(canon: &Graph) -> Certificate {
    let n = canon.n();
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(8));
    out.push(n as u8);
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | canon.has_edge(i, j) as u8;
            used += 1;
            if used == 8 {
                out.push(acc);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push(acc << (8 - used));
    }
    Certificate(out)
}

fn degree_partition(g: &Graph) -> Vec<u64> {
    let mut by_degree: Vec<(usize, u64)> = Vec::new();
    for v in 0..g.n() {
        let d = g.degree(v);
        match by_degree.iter_mut().find(|(k, _)| *k == d) {
            Some((_, mask)) => *mask |= bit(v),
            None => by_degree.push((d, bit(v))),
        }
    }
    by_degree.sort_unstable_by_key(|&(d, _)| d);
    by_degree.into_iter().map(|(_, m)| m).collect()
}

/// Split cells by the vector of neighbour counts into every cell until no
/// cell splits. Sub-cells replace their parent in signature order, so the
/// result does not depend on vertex names.
fn refine(rows: &[u64], cells: &mut Vec<u64>) {
    loop {
        let mut next = Vec::with_capacity(cells.len() + 2);
        for &cell in cells.iter() {
            if cell.count_ones() == 1 {
                next.push(cell);
                continue;
            }
            let mut groups: Vec<(Vec<u8>, u64)> = Vec::new();
            for v in bits(cell) {
                let sig: Vec<u8> = cells
                    .iter()
                    .map(|&c| (rows[v] & c).count_ones() as u8)
                    .collect();
                match groups.iter_mut().find(|(s, _)| *s == sig) {
                    Some((_, m)) => *m |= bit(v),
                    None => groups.push((sig, bit(v))),
                }
            }
            groups.sort_unstable_by(|a, b| a.0.cmp(&b.0));
            next.extend(groups.into_iter().map(|(_, m)| m));
        }
        let stable = next.len() == cells.len();
        *cells = next;
        if stable {
            return;
        }
    }
}

struct Search<'a> {
    rows: &'a [u64],
    /// Least encoding so far and the labeling that produced it.
    best: Option<(Vec<u64>, Vec<VertexId>)>,
    autos: Vec<Vec<u8>>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<u64>, fixed: &mut Vec<usize>) {
        if cells.len() == self.rows.len() {
            self.leaf(&cells);
            return;
        }
        let (target, cell) = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .map(|(i, &c)| (i, c))
            .expect("non-discrete partition");
        let mut explored = 0u64;
        for v in bits(cell) {
            if explored != 0 && self.orbit_of(v, fixed) & explored != 0 {
                continue;
            }
            explored |= bit(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(bit(v));
            child.push(cell & !bit(v));
            child.extend_from_slice(&cells[target + 1..]);
            refine(self.rows, &mut child);
            fixed.push(v);
            self.descend(child, fixed);
            fixed.pop();
        }
    }

    /// Orbit of `v` under the automorphisms found so far that fix every
    /// vertex of `fixed`.
    fn orbit_of(&self, v: usize, fixed: &[usize]) -> u64 {
        let gens: Vec<&Vec<u8>> = self
            .autos
            .iter()
            .filter(|g| fixed.iter().all(|&f| g[f] as usize == f))
            .collect();
        let mut orbit = bit(v);
        let mut frontier = orbit;
        while frontier != 0 {
            let mut grow = 0u64;
            for w in bits(frontier) {
                for g in &gens {
                    grow |= bit(g[w] as usize);
                }
            }
            frontier = grow & !orbit;
            orbit |= grow;
        }
        orbit
    }

    fn leaf(&mut self, cells: &[u64]) {
        let n = self.rows.len();
        let mut labeling = vec![0usize; n];
        for (pos, &c) in cells.iter().enumerate() {
            labeling[c.trailing_zeros() as usize] = pos;
        }
        let mut encoded = vec![0u64; n];
        for (v, &row) in self.rows.iter().enumerate() {
            encoded[labeling[v]] = bits(row).fold(0, |acc, u| acc | bit(labeling[u]));
        }
        match &self.best {
            None => self.best = Some((encoded, labeling)),
            Some((best, best_labeling)) => match encoded.cmp(best) {
                std::cmp::Ordering::Less => self.best = Some((encoded, labeling)),
                std::cmp::Ordering::Equal => {
                    // best_labeling^-1 after labeling maps G onto itself
                    let mut inverse = vec![0u8; n];
                    for (v, &p) in best_labeling.iter().enumerate() {
                        inverse[p] = v as u8;
                    }
                    let auto: Vec<u8> = labeling.iter().map(|&p| inverse[p]).collect();
                    if auto.iter().enumerate().any(|(v, &w)| v != w as usize) {
                        self.autos.push(auto);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }
}

/// Exhaustive isomorphism test: extend a partial bijection vertex by vertex,
/// matching degrees and adjacency to already-mapped vertices.
pub fn are_isomorphic_bruteforce(g1: &Graph, g2: &Graph) -> bool {
    if g1.n() != g2.n() || g1.m() != g2.m() {
        return false;
    }
    let mut d1 = g1.degrees();
    let mut d2 = g2.degrees();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return false;
    }
    let mut map = vec![usize::MAX; g1.n()];
    extend_map(g1, g2, 0, &mut map, 0)
}

fn extend_map(g1: &Graph, g2: &Graph, v: usize, map: &mut [usize], used: u64) -> bool {
    if v == g1.n() {
        return true;
    }
    for w in bits(g2.vertex_mask() & !used) {
        if g1.degree(v) != g2.degree(w) {
            continue;
        }
        let consistent = (0..v).all(|u| g1.has_edge(u, v) == g2.has_edge(map[u], w));
        if consistent {
            map[v] = w;
            if extend_map(g1, g2, v + 1, map, used | bit(w)) {
                return true;
            }
        }
    }
    map[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn shuffled(g: &Graph, rng: &mut impl Rng) -> Graph {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(rng);
        g.permuted(&perm)
    }

    #[test]
    fn relabelings_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for g in [
            Graph::prism(),
            Graph::prism().add_edge(0, 2).unwrap(),
            Graph::wheel(5).unwrap(),
            Graph::complete_bipartite_3(3).unwrap(),
        ] {
            let c = certificate(&g);
            for _ in 0..1000 {
                let q = shuffled(&g, &mut rng);
                assert_eq!(certificate(&q), c);
                assert!(are_isomorphic_bruteforce(&g, &q));
            }
        }
    }

    #[test]
    fn distinct_families_differ() {
        let w5 = Graph::wheel(5).unwrap();
        let k33 = Graph::complete_bipartite_3(3).unwrap();
        let p = Graph::prism();
        assert_ne!(certificate(&w5), certificate(&k33));
        assert_ne!(certificate(&p), certificate(&k33));
        assert!(!are_isomorphic_bruteforce(&w5, &k33));
        assert!(!are_isomorphic_bruteforce(&p, &k33));
    }

    #[test]
    fn four_vertex_graphs_have_eleven_classes() {
        let pairs: Vec<(usize, usize)> = (0..4)
            .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
            .collect();
        let graphs: Vec<Graph> = (0u32..64)
            .map(|m| {
                let edges = pairs.iter().enumerate().filter(|(i, _)| m & (1 << i) != 0);
                Graph::from_edges(4, edges.map(|(_, &e)| e)).unwrap()
            })
            .collect();
        // classify by brute force, independently of certificates
        let mut reps: Vec<&Graph> = Vec::new();
        for g in &graphs {
            if !reps.iter().any(|r| are_isomorphic_bruteforce(r, g)) {
                reps.push(g);
            }
        }
        assert_eq!(reps.len(), 11);
        let certs: std::collections::HashSet<_> = graphs.iter().map(certificate).collect();
        assert_eq!(certs.len(), 11);
    }

    #[test]
    fn symmetric_graphs_stay_fast_and_stable() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for g in [
            Graph::complete_bipartite_3(8).unwrap(),
            Graph::complete(9).unwrap(),
            Graph::wheel(10).unwrap(),
            Graph::cycle_graph(16).unwrap(),
        ] {
            let c = certificate(&g);
            for _ in 0..5 {
                assert_eq!(certificate(&shuffled(&g, &mut rng)), c);
            }
        }
    }

    #[test]
    fn canonical_form_is_isomorphic() {
        let g = Graph::prism().add_edge(0, 2).unwrap();
        let c = canonical_form(&g);
        assert!(are_isomorphic_bruteforce(&g, &c));
        assert_eq!(canonical_form(&c), c);
    }

    #[test]
    fn certificate_layout() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(certificate(&k4).as_bytes(), &[4, 0b1111_1100]);
        let empty = Graph::empty(1).unwrap();
        assert_eq!(certificate(&empty).as_bytes(), &[1]);
    }
}
