// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! graph6 interchange format, single-byte order only (n <= 62).
//!
//! A word is the order byte `n + 63` followed by the upper-triangle
//! adjacency bits in column order (`(0,1), (0,2), (1,2), (0,3), ...`),
//! packed big-endian into 6-bit groups, each offset by 63. The optional
//! `>>graph6<<` header is accepted on input and never produced.

use super::Graph;
use crate::{Error, Result};

const HEADER: &str = ">>graph6<<";
const MAX_ORDER: usize = 62;

fn g6_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Decodes one graph6 word.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\r', '\n']);
    let (body, base) = match line.strip_prefix(HEADER) {
        Some(rest) => (rest, HEADER.len()),
        None => (line, 0),
    };
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(g6_err(base, "empty graph6 word"));
    }
    if bytes[0] == 126 {
        return Err(g6_err(
            base,
            "multi-byte order (n > 62) is not supported",
        ));
    }
    if !(63..=126).contains(&bytes[0]) {
        return Err(g6_err(base, format!("illegal order byte 0x{:02x}", bytes[0])));
    }
    let n = (bytes[0] - 63) as usize;
    let bit_count = n * n.saturating_sub(1) / 2;
    let data_len = bit_count.div_ceil(6);
    if bytes.len() - 1 < data_len {
        return Err(g6_err(
            base + bytes.len(),
            format!("truncated word: need {data_len} data bytes, got {}", bytes.len() - 1),
        ));
    }
    if bytes.len() - 1 > data_len {
        return Err(g6_err(base + 1 + data_len, "trailing data after graph6 word"));
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = bytes[1 + bit / 6];
            if !(63..=126).contains(&byte) {
                return Err(g6_err(
                    base + 1 + bit / 6,
                    format!("illegal data byte 0x{byte:02x}"),
                ));
            }
            let group = byte - 63;
            if (group >> (5 - bit % 6)) & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
            if bit == bit_count {
                break 'outer;
            }
        }
    }
    // Padding bits in the final group must be zero.
    if data_len > 0 {
        let last = bytes[1 + data_len - 1];
        if !(63..=126).contains(&last) {
            return Err(g6_err(
                base + data_len,
                format!("illegal data byte 0x{last:02x}"),
            ));
        }
        let used = bit_count - (data_len - 1) * 6;
        let mask = (1u8 << (6 - used)) - 1;
        if (last - 63) & mask != 0 {
            return Err(g6_err(base + data_len, "nonzero padding bits"));
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// Encodes a graph of order at most 62 as a graph6 word.
pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.vertex_count();
    if n > MAX_ORDER {
        return Err(Error::InvalidInput(format!(
            "graph6 encoder handles n <= {MAX_ORDER}, got {n}"
        )));
    }
    let mut out = vec![(n as u8) + 63];
    let mut group = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            group <<= 1;
            if g.has_edge(u, v) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::GraphFamily;

    #[test]
    fn decodes_reference_words() {
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!(k4, GraphFamily::parse("complete:4").unwrap().generate().unwrap());

        let k1 = parse_graph6("@").unwrap();
        assert_eq!(k1.vertex_count(), 1);
        assert_eq!(k1.edge_count(), 0);

        let empty4 = parse_graph6("C?").unwrap();
        assert_eq!(empty4.vertex_count(), 4);
        assert_eq!(empty4.edge_count(), 0);

        // C5 in canonical graph6 is "DqK" ... verify via explicit decode
        // of the known word for the 5-cycle 0-1-2-3-4-0.
        let c5 = GraphFamily::parse("cycle:5").unwrap().generate().unwrap();
        assert_eq!(parse_graph6(&encode_graph6(&c5).unwrap()).unwrap(), c5);
    }

    #[test]
    fn accepts_optional_header() {
        let g = parse_graph6(">>graph6<<C~").unwrap();
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn rejects_malformed_words() {
        // Multi-byte order marker.
        let err = parse_graph6("~??").unwrap_err();
        assert!(matches!(err, Error::Graph6 { offset: 0, .. }), "{err}");

        // Truncated data section.
        let err = parse_graph6("D?").unwrap_err();
        assert!(matches!(err, Error::Graph6 { .. }), "{err}");

        // Trailing bytes.
        let err = parse_graph6("C~~").unwrap_err();
        assert!(matches!(err, Error::Graph6 { offset: 2, .. }), "{err}");

        // Illegal character in data.
        let err = parse_graph6("C!").unwrap_err();
        assert!(matches!(err, Error::Graph6 { offset: 1, .. }), "{err}");

        // K1 followed by garbage.
        assert!(parse_graph6("@?").is_err());

        // Nonzero padding: C4 path word with a stray low bit. n=4 has 6
        // bits exactly, so craft n=3 (3 bits, 3 padding bits) with padding.
        let err = parse_graph6("B@").unwrap_err();
        assert!(matches!(err, Error::Graph6 { offset: 1, .. }), "{err}");
    }

    #[test]
    fn round_trips_generated_graphs() {
        for spec in [
            "cycle:3",
            "cycle:12",
            "complete:6",
            "complete_bipartite:4:3",
            "star:5",
            "wheel:8",
            "grid:3:4",
            "prism:5",
            "petersen",
            "null:7",
            "random_gnp:20:0.3:11",
        ] {
            let g = GraphFamily::parse(spec).unwrap().generate().unwrap();
            let word = encode_graph6(&g).unwrap();
            assert_eq!(parse_graph6(&word).unwrap(), g, "{spec}");
        }
    }

    #[test]
    fn encoder_rejects_oversized_graphs() {
        let g = Graph::empty(63);
        assert!(encode_graph6(&g).is_err());
    }
}
