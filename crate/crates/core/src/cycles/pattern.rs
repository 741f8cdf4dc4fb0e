//! Cycle patterns relative to three marked vertices and the edge-flip
//! rewrite built on them.
//!
//! For a flip of `ab` to `ac` each cycle holding at least two of `a, b, c`
//! is rotated so the first marked vertex leads, the marked vertices are
//! replaced by `a`, `b`, `c`, and the unmarked runs between them become
//! `◇`, `△`, `□` in order. The rewrite of the cycle is a function of that
//! token string alone.

use std::fmt;

use smallvec::SmallVec;

use super::{Cycle, CycleError, CycleSet, Seq};
use crate::graph::{bit, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Token {
    A,
    B,
    C,
    Diamond,
    Triangle,
    Square,
}

impl Token {
    fn key(self) -> char {
        match self {
            Token::A => 'a',
            Token::B => 'b',
            Token::C => 'c',
            Token::Diamond => 'd',
            Token::Triangle => 't',
            Token::Square => 's',
        }
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Token::A => "a",
            Token::B => "b",
            Token::C => "c",
            Token::Diamond => "◇",
            Token::Triangle => "△",
            Token::Square => "□",
        };
        f.write_str(s)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    tokens: SmallVec<[Token; 6]>,
}

impl Pattern {
    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    /// Compact ASCII form: `d`, `t`, `s` stand for `◇`, `△`, `□`.
    fn key(&self) -> SmallVec<[u8; 6]> {
        self.tokens.iter().map(|t| t.key() as u8).collect()
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.tokens.iter().try_for_each(|t| write!(f, "{t}"))
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern({self})")
    }
}

type Runs = SmallVec<[Seq; 3]>;

/// Pattern of a raw vertex sequence (any rotation, either direction), plus
/// the unmarked runs in token order. `None` when fewer than two of the
/// marked vertices occur.
fn decompose(seq: &[u8], a: VertexId, b: VertexId, c: VertexId) -> Option<(Pattern, Runs)> {
    let pos = |v: VertexId| seq.iter().position(|&x| x as usize == v);
    let (pa, pb, pc) = (pos(a), pos(b), pos(c));
    let marked = [pa, pb, pc].iter().filter(|p| p.is_some()).count();
    if marked < 2 {
        return None;
    }
    let start = pa.or(pb).or(pc).expect("at least two marked");
    let k = seq.len();
    let mut tokens = SmallVec::new();
    let mut runs = Runs::new();
    let fillers = [Token::Diamond, Token::Triangle, Token::Square];
    let mut in_run = false;
    for t in 0..k {
        let v = seq[(start + t) % k] as usize;
        let marker = if v == a {
            Some(Token::A)
        } else if v == b {
            Some(Token::B)
        } else if v == c {
            Some(Token::C)
        } else {
            None
        };
        match marker {
            Some(tok) => {
                tokens.push(tok);
                in_run = false;
            }
            None => {
                if !in_run {
                    tokens.push(fillers[runs.len()]);
                    runs.push(Seq::new());
                    in_run = true;
                }
                runs.last_mut().expect("run open").push(v as u8);
            }
        }
    }
    Some((Pattern { tokens }, runs))
}

/// Pattern of `cyc` in its stored orientation with respect to `a, b, c`.
pub fn extract_pattern(
    cyc: &Cycle,
    a: VertexId,
    b: VertexId,
    c: VertexId,
) -> Result<Pattern, CycleError> {
    decompose(cyc.raw(), a, b, c)
        .map(|(p, _)| p)
        .ok_or_else(|| CycleError::TooFewMarked(cyc.clone()))
}

/// What becomes of a cycle with the given pattern when `ab` is flipped to
/// `ac`. `None` marks a pattern no simple graph with `ab, bc` present and
/// `ac` absent can produce.
fn rewrite_rule(key: &[u8]) -> Option<&'static [&'static str]> {
    let rule: &'static [&'static str] = match key {
        // a and b only
        b"adb" => &["adbc"],
        b"abd" => &["acbd"],
        b"adbt" => &["adbt"],
        // a and c only: ac now chords the cycle
        b"adct" => &["adct", "adc", "act"],
        // b and c only
        b"bdc" => &["bdc"],
        b"bcd" => &["bcd"],
        b"bdct" => &["bdct"],
        // a, b, c in that order
        b"abcd" => &["acd"],
        b"adbct" => &["adbct"],
        b"abdct" => &["bdc", "act"],
        b"adbtcs" => &["adbtcs"],
        // a, c, b in that order
        b"adcb" => &["adc"],
        b"adctb" => &["ctb", "adc"],
        b"adcbt" => &["adcbt"],
        b"adctbs" => &["adctbs"],
        _ => return None,
    };
    Some(rule)
}

fn assemble(shape: &str, runs: &Runs, a: VertexId, b: VertexId, c: VertexId) -> Cycle {
    let mut verts = Seq::new();
    for ch in shape.bytes() {
        match ch {
            b'a' => verts.push(a as u8),
            b'b' => verts.push(b as u8),
            b'c' => verts.push(c as u8),
            b'd' => verts.extend_from_slice(&runs[0]),
            b't' => verts.extend_from_slice(&runs[1]),
            b's' => verts.extend_from_slice(&runs[2]),
            _ => unreachable!("rewrite table alphabet"),
        }
    }
    Cycle::canonical(verts)
}

/// Rewrite one cycle, given as a raw sequence in any rotation or direction,
/// for the flip of `ab` to `ac`. Cycle merging across pairs is not handled
/// here.
pub(crate) fn rewrite_sequence(
    seq: &[u8],
    a: VertexId,
    b: VertexId,
    c: VertexId,
    out: &mut Vec<Cycle>,
) -> Result<(), CycleError> {
    let Some((pattern, runs)) = decompose(seq, a, b, c) else {
        out.push(Cycle::canonical(seq.iter().copied().collect()));
        return Ok(());
    };
    let rule = rewrite_rule(&pattern.key()).ok_or_else(|| CycleError::InadmissiblePattern {
        cycle: Cycle::canonical(seq.iter().copied().collect()),
        pattern: pattern.clone(),
    })?;
    out.extend(rule.iter().map(|shape| assemble(shape, &runs, a, b, c)));
    Ok(())
}

/// Walk `cyc` from `from` to `to`, leaving `from` by the side that does not
/// go straight to `to`. Both vertices must be consecutive on the cycle.
fn long_way(cyc: &Cycle, from: VertexId, to: VertexId) -> Seq {
    let seq = cyc.raw();
    let k = seq.len();
    let i = cyc.position(from).expect("on cycle");
    let forward_hits = seq[(i + 1) % k] as usize == to;
    (0..k)
        .map(|t| {
            let idx = if forward_hits {
                (i + k - t) % k
            } else {
                (i + t) % k
            };
            seq[idx]
        })
        .collect()
}

/// Cycles after replacing edge `ab` with `ac`, where `bc` is an edge and
/// `ac` is not.
///
/// Single cycles are rewritten by pattern. In addition every pair of
/// cycles, one through edge `ab` and one through edge `bc`, meeting only in
/// `b`, merges into one cycle `a ... b ... c` closed by the new edge.
pub fn apply_flip_edge(
    cs: &CycleSet,
    a: VertexId,
    b: VertexId,
    c: VertexId,
) -> Result<CycleSet, CycleError> {
    if a == b || b == c || a == c {
        return Err(CycleError::FlipArguments(a, b, c));
    }
    let mut out = Vec::with_capacity(cs.len() + cs.len() / 2);
    let mut through_ab = Vec::new();
    let mut through_bc = Vec::new();
    for cyc in cs {
        rewrite_sequence(cyc.raw(), a, b, c, &mut out)?;
        if cyc.contains_edge(a, b) {
            through_ab.push((cyc.mask(), cyc));
        } else if cyc.contains_edge(b, c) {
            through_bc.push((cyc.mask(), cyc));
        }
    }
    for &(mask_ab, left) in &through_ab {
        let mut head: Option<Seq> = None;
        for &(mask_bc, right) in &through_bc {
            if mask_ab & mask_bc != bit(b) {
                continue;
            }
            let head = head.get_or_insert_with(|| {
                // a ... b avoiding the edge ab, reversed to end at b
                let mut s = long_way(left, b, a);
                s.reverse();
                s
            });
            let tail = long_way(right, b, c);
            let mut verts = head.clone();
            verts.extend_from_slice(&tail[1..]);
            out.push(Cycle::canonical(verts));
        }
    }
    Ok(out.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::enumerate_cycles_bruteforce;
    use crate::graph::Graph;

    fn c_of(s: &str) -> Cycle {
        Cycle::new(s.bytes().map(|b| (b - b'0') as VertexId)).unwrap()
    }

    #[test]
    fn pattern_examples() {
        let p = extract_pattern(&c_of("01543"), 1, 4, 3).unwrap();
        assert_eq!(p.to_string(), "a◇bc△");
        let p = extract_pattern(&c_of("012543"), 1, 5, 3).unwrap();
        assert_eq!(p.to_string(), "a◇b△c□");
        let p = extract_pattern(&c_of("017"), 0, 1, 9).unwrap();
        assert_eq!(p.to_string(), "ab◇");
        assert!(matches!(
            extract_pattern(&c_of("0123"), 0, 7, 8),
            Err(CycleError::TooFewMarked(_))
        ));
    }

    #[test]
    fn single_case_one_rewrite() {
        // a=0, b=1, c=2; only one cycle holds two of them, as a◇b
        let cs = CycleSet::from_iter([c_of("0341"), c_of("345")]);
        let got = apply_flip_edge(&cs, 0, 1, 2).unwrap();
        assert_eq!(got, CycleSet::from_iter([c_of("03412"), c_of("345")]));
    }

    #[test]
    fn case_six_merges_two_triangles() {
        // triangles (a,b,x) and (b,c,y) sharing only b
        let (a, b, c, x, y) = (0, 1, 2, 3, 4);
        let g = Graph::from_edges(5, [(a, b), (b, x), (x, a), (b, c), (c, y), (y, b)]).unwrap();
        let cs = enumerate_cycles_bruteforce(&g);
        let flipped = g.flip_edge(a, b, c).unwrap();
        let got = apply_flip_edge(&cs, a, b, c).unwrap();
        assert!(got.contains(&Cycle::new([a, x, b, y, c]).unwrap()));
        assert_eq!(got, enumerate_cycles_bruteforce(&flipped));
    }

    #[test]
    fn inadmissible_pattern_is_reported() {
        // a and c consecutive means ac is already an edge
        let cs = CycleSet::from_iter([c_of("0245")]);
        let err = apply_flip_edge(&cs, 0, 1, 2).unwrap_err();
        assert!(
            matches!(err, CycleError::InadmissiblePattern { .. }),
            "{err}"
        );
        assert!(matches!(
            apply_flip_edge(&cs, 0, 0, 2),
            Err(CycleError::FlipArguments(..))
        ));
    }

    #[test]
    fn split_step_on_prism_matches_oracle() {
        let p = Graph::prism();
        let cs = enumerate_cycles_bruteforce(&p);
        let (g1, x) = p.subdivide_edge(0, 1).unwrap();
        let cs1 = crate::cycles::apply_subdivide_edge(&cs, 0, 1, x);
        let g2 = g1.flip_edge(2, 1, x).unwrap();
        let got = apply_flip_edge(&cs1, 2, 1, x).unwrap();
        assert_eq!(got, enumerate_cycles_bruteforce(&g2));

        let g3 = g1.flip_edge(3, 0, x).unwrap();
        let got = apply_flip_edge(&cs1, 3, 0, x).unwrap();
        assert_eq!(got, enumerate_cycles_bruteforce(&g3));
    }

    #[test]
    fn rewrite_is_orientation_independent() {
        // every cycle of K5 minus ac, under each rotation and direction
        let g = Graph::complete(5).unwrap().delete_edge(0, 2).unwrap();
        let cs = enumerate_cycles_bruteforce(&g);
        for cyc in &cs {
            let raw: Vec<u8> = cyc.raw().to_vec();
            let mut reference = Vec::new();
            rewrite_sequence(&raw, 0, 1, 2, &mut reference).unwrap();
            let reference: CycleSet = reference.into_iter().collect();
            for r in 0..raw.len() {
                for dir in [false, true] {
                    let mut s = raw.clone();
                    s.rotate_left(r);
                    if dir {
                        s.reverse();
                    }
                    let mut got = Vec::new();
                    rewrite_sequence(&s, 0, 1, 2, &mut got).unwrap();
                    assert_eq!(got.into_iter().collect::<CycleSet>(), reference, "{s:?}");
                }
            }
        }
    }
}
