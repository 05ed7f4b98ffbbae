//! The graph6 text format: a size prefix followed by the upper triangle of
//! the adjacency matrix, column by column, six bits per printable byte.

use std::path::Path;

use super::Graph;
use crate::{Error, Result};

const MAX_N: usize = 258_047;

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= MAX_N {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn decode_graph6(s: &str) -> Result<Graph> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    let bad = |m: &str| Error::MalformedGraph6(m.to_string());
    if bytes.is_empty() {
        return Err(bad("empty input"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(bad(&format!("byte {b:#04x} outside the graph6 range")));
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 4 && bytes[1] != 126 {
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    } else if bytes.len() >= 8 {
        let n = bytes[2..8].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[8..])
    } else {
        return Err(bad("truncated size prefix"));
    };
    if n > MAX_N {
        return Err(bad(&format!("{n} vertices exceeds the supported maximum")));
    }
    let total_bits = n * n.saturating_sub(1) / 2;
    let expected = total_bits.div_ceil(6);
    if body.len() != expected {
        return Err(bad(&format!("expected {expected} data bytes for n = {n}, found {}", body.len())));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    // padding bits must be zero
    if total_bits % 6 != 0 {
        let last = body[expected - 1] - 63;
        if last & ((1 << (6 - total_bits % 6)) - 1) != 0 {
            return Err(bad("nonzero padding bits"));
        }
    }
    Ok(g)
}

/// One graph per non-empty line.
pub fn read_graph6_file(path: &Path) -> Result<Vec<Graph>> {
    let text = std::fs::read_to_string(path).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => Error::FileNotFound(path.to_path_buf()),
        _ => Error::Io(e),
    })?;
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(decode_graph6)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::GraphSpec;
    use proptest::prelude::*;

    #[test]
    fn single_vertex() {
        assert_eq!(encode_graph6(&Graph::empty(1)), "@");
        assert_eq!(decode_graph6("@").unwrap().order(), 1);
    }

    #[test]
    fn small_reference_strings() {
        // path a-c, a-e, b-d, d-e on 5 vertices
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(encode_graph6(&g), "DQc");
        // K4
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(encode_graph6(&k4), "C~");
    }

    #[test]
    fn petersen_round_trip() {
        let p = GraphSpec::Petersen.build().unwrap();
        assert_eq!(decode_graph6(&encode_graph6(&p)).unwrap(), p);
    }

    #[test]
    fn long_size_prefix() {
        let g = GraphSpec::Rook(9).build().unwrap();
        let s = encode_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(decode_graph6(&s).unwrap(), g);
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(decode_graph6("garbage\x01"), Err(Error::MalformedGraph6(_))));
        assert!(decode_graph6("").is_err());
        assert!(decode_graph6("D").is_err());
        // 3 vertices: one data byte, the low three bits are padding
        assert!(decode_graph6("B??").is_err());
        assert_eq!(decode_graph6("B?").unwrap().edge_count(), 0);
        assert_eq!(decode_graph6("Bw").unwrap().edge_count(), 3);
        assert!(decode_graph6("B@").is_err());
    }

    #[test]
    fn header_is_accepted() {
        assert_eq!(decode_graph6(">>graph6<<DQc").unwrap().edge_count(), 4);
    }

    proptest! {
        #[test]
        fn round_trip(n in 0usize..100, edges in proptest::collection::vec((0usize..100, 0usize..100), 0..300)) {
            let g = Graph::from_edges(n, edges.into_iter().filter(|&(a, b)| a < n && b < n));
            prop_assert_eq!(decode_graph6(&encode_graph6(&g)).unwrap(), g);
        }
    }
}
