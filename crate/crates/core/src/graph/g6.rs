//! graph6 text codec (undirected, no header), one graph per string.
//!
//! Size field: a single byte n+63 for n <= 62, or '~' followed by three
//! 6-bit bytes for 63 <= n <= 258047. Adjacency bits follow in upper
//! triangle column order x(0,1), x(0,2), x(1,2), x(0,3), ..., packed six
//! per byte from the high bit, each byte offset by 63.

use super::{Graph, GraphError};

fn err(msg: impl Into<String>) -> GraphError {
    GraphError::Graph6(msg.into())
}

pub fn encode(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else {
        assert!(n <= 258_047, "graph6 long form supports n <= 258047");
        bytes.push(126);
        bytes.push(((n >> 12) & 63) as u8 + 63);
        bytes.push(((n >> 6) & 63) as u8 + 63);
        bytes.push((n & 63) as u8 + 63);
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let mut acc = 0u8;
    let mut filled = 0;
    let mut bit_index = 0;
    for v in 1..n {
        for u in 0..v {
            acc <<= 1;
            if g.has_edge(u, v) {
                acc |= 1;
            }
            filled += 1;
            bit_index += 1;
            if filled == 6 {
                bytes.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        acc <<= 6 - filled;
        bytes.push(acc + 63);
    }
    debug_assert_eq!(bit_index, nbits);
    String::from_utf8(bytes).unwrap()
}

pub fn decode(text: &str) -> Result<Graph, GraphError> {
    let bytes = text.trim_end().as_bytes();
    if bytes.is_empty() {
        return Err(err("empty string"));
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(err("graphs with more than 258047 vertices are unsupported"));
        }
        if bytes.len() < 4 {
            return Err(err("truncated size field"));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            if !(63..=126).contains(&b) {
                return Err(err(format!("invalid size byte {}", b)));
            }
            n = (n << 6) | (b - 63) as usize;
        }
        (n, 4)
    } else {
        let b = bytes[0];
        if !(63..=125).contains(&b) {
            return Err(err(format!("invalid size byte {}", b)));
        }
        ((b - 63) as usize, 1)
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() - pos != nbytes {
        return Err(err(format!(
            "expected {} data bytes for n = {}, got {}",
            nbytes,
            n,
            bytes.len() - pos
        )));
    }
    let mut edges = Vec::new();
    let mut acc = 0u8;
    let mut avail = 0;
    for v in 1..n {
        for u in 0..v {
            if avail == 0 {
                let b = bytes[pos];
                pos += 1;
                if !(63..=126).contains(&b) {
                    return Err(err(format!("invalid data byte {}", b)));
                }
                acc = b - 63;
                avail = 6;
            }
            if acc >> (avail - 1) & 1 == 1 {
                edges.push((u, v));
            }
            avail -= 1;
        }
    }
    if avail > 0 && acc & ((1 << avail) - 1) != 0 {
        return Err(err("nonzero padding bits"));
    }
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    #[test]
    fn known_strings() {
        // 'C' = n 4, '~' = all six upper-triangle bits: K_4
        assert_eq!(decode("C~").unwrap(), families::complete(4));
        // empty graph on 5 vertices
        assert_eq!(decode("D??").unwrap(), Graph::empty(5));
        assert_eq!(encode(&families::complete(4)), "C~");
        assert_eq!(encode(&Graph::empty(5)), "D??");
    }

    #[test]
    fn round_trip_families() {
        for g in [
            families::complete(7),
            families::wheel(6).unwrap(),
            families::k4q_hat(3).unwrap(),
            families::path(1),
            Graph::empty(0),
            families::complete_bipartite(3, 4),
        ] {
            assert_eq!(decode(&encode(&g)).unwrap(), g);
        }
    }

    #[test]
    fn long_form_round_trip() {
        let g = families::path(70);
        let s = encode(&g);
        assert!(s.starts_with('~'));
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn malformed_inputs() {
        assert!(decode("").is_err());
        assert!(decode("C").is_err()); // missing data bytes
        assert!(decode("C~~~").is_err()); // too many
        assert!(decode(" C~").is_err()); // leading garbage
        assert!(decode("~~A???").is_err()); // > 258047 unsupported
    }
}
