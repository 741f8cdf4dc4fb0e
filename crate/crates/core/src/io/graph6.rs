//! graph6 text form, short size header only (n ≤ 62).

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("graph6 byte {0:#04x} outside 63..=126")]
    BadByte(u8),
    #[error("graphs with {0} vertices need the long size header, which is unsupported")]
    Unsupported(usize),
    #[error("graph6 body has {got} bytes, expected {want}")]
    Length { got: usize, want: usize },
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= 62, "graph6 short form holds at most 62 vertices");
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            used += 1;
            if used == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push(((acc << (6 - used)) + 63) as char);
    }
    out
}

pub fn decode_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    let (&head, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Graph6Error::BadByte(b));
    }
    if head == 126 {
        return Err(Graph6Error::Unsupported(63));
    }
    let n = (head - 63) as usize;
    let want = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if body.len() != want {
        return Err(Graph6Error::Length {
            got: body.len(),
            want,
        });
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, edges).expect("decoded edges are simple"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        assert_eq!(encode_graph6(&Graph::complete(4).unwrap()), "C~");
        assert_eq!(encode_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(encode_graph6(&Graph::empty(0).unwrap()), "?");
        // path 0-1-2: bits (0,1)=1 (0,2)=0 (1,2)=1 -> 101000
        assert_eq!(encode_graph6(&Graph::path_graph(3).unwrap()), "Bg");
        assert_eq!(encode_graph6(&Graph::complete(5).unwrap()), "D~{");
    }

    #[test]
    fn round_trip() {
        for g in [
            Graph::prism(),
            Graph::wheel(7).unwrap(),
            Graph::complete_bipartite_3(5).unwrap(),
            Graph::cycle_graph(13).unwrap(),
        ] {
            assert_eq!(decode_graph6(&encode_graph6(&g)).unwrap(), g);
        }
    }

    #[test]
    fn malformed() {
        assert_eq!(decode_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(
            decode_graph6("C~~"),
            Err(Graph6Error::Length { got: 2, want: 1 })
        );
        assert_eq!(decode_graph6("C "), Err(Graph6Error::BadByte(b' ')));
        assert_eq!(decode_graph6("~"), Err(Graph6Error::Unsupported(63)));
    }
}
