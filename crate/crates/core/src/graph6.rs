//! graph6 encoding and decoding (bit-exact).
//!
//! Layout: the order n as a single byte n + 63 (n <= 62 suffices here),
//! followed by the upper triangle of the adjacency matrix in column order
//! (x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...), packed big-endian into 6-bit
//! chunks, each offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    debug_assert!(n <= 62);
    let mut bytes = vec![(n as u8) + 63];
    let mut chunk = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            chunk <<= 1;
            if g.has_edge(i, j) {
                chunk |= 1;
            }
            used += 1;
            if used == 6 {
                bytes.push(chunk + 63);
                chunk = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        chunk <<= 6 - used;
        bytes.push(chunk + 63);
    }
    String::from_utf8(bytes).unwrap()
}

pub fn decode(s: &str) -> Result<Graph> {
    let bytes = s.trim().as_bytes();
    if bytes.is_empty() {
        return Err(Error::NotApplicable("empty graph6 string"));
    }
    if bytes[0] == 126 {
        // multi-byte order encoding; out of range for this crate
        return Err(Error::SizeLimitExceeded { n: 63, limit: 32 });
    }
    if bytes[0] < 63 {
        return Err(Error::NotApplicable("invalid graph6 header byte"));
    }
    let n = (bytes[0] - 63) as usize;
    if n > 32 {
        return Err(Error::SizeLimitExceeded { n, limit: 32 });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != 1 + nbytes {
        return Err(Error::NotApplicable("graph6 string has wrong length"));
    }
    let mut g = Graph::new(n);
    let mut idx = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + idx / 6];
            if byte < 63 || byte > 126 {
                return Err(Error::NotApplicable("invalid graph6 body byte"));
            }
            let bit = (byte - 63) >> (5 - (idx % 6)) & 1;
            if bit == 1 {
                g.add_edge(i, j);
            }
            idx += 1;
            if idx == nbits {
                break 'outer;
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_strings() {
        // Standard examples: K3 is "Bw", the empty graph on 5 vertices is "D??",
        // P4 labeled along the path is "Ch".
        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(encode(&k3), "Bw");
        assert_eq!(encode(&Graph::new(5)), "D??");
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(encode(&p4), "Ch");
        assert_eq!(decode("Bw").unwrap(), k3);
    }

    #[test]
    fn rejects_garbage() {
        assert!(decode("").is_err());
        assert!(decode("B").is_err());
        assert!(decode(" ").is_err());
    }

    proptest! {
        #[test]
        fn roundtrip(n in 0usize..10, seed in any::<u64>()) {
            let mut g = Graph::new(n);
            let mut state = seed;
            for i in 0..n {
                for j in (i + 1)..n {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if state >> 63 == 1 {
                        g.add_edge(i, j);
                    }
                }
            }
            let s = encode(&g);
            prop_assert_eq!(decode(&s).unwrap(), g);
        }
    }
}
