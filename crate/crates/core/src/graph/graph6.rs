//! graph6 serialization (the format used by nauty and most graph databases).

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
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
}

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn malformed<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::MalformedGraph6(msg.into()))
}

pub fn graph6_decode(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return malformed("empty input");
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return malformed(format!("byte {b} outside 63..=126"));
    }
    let sixes = |s: &[u8]| s.iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
    let (n, body) = match bytes {
        [126, 126, rest @ ..] if rest.len() >= 6 => (sixes(&rest[..6]), &rest[6..]),
        [126, 126, ..] => return malformed("truncated order"),
        [126, rest @ ..] if rest.len() >= 3 => (sixes(&rest[..3]), &rest[3..]),
        [126, ..] => return malformed("truncated order"),
        [b, rest @ ..] => ((b - 63) as usize, rest),
        [] => unreachable!(),
    };
    if n == 0 {
        return malformed("order 0");
    }
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            limit: MAX_ORDER,
        });
    }
    let bits = n * (n - 1) / 2;
    if body.len() != bits.div_ceil(6) {
        return malformed(format!(
            "expected {} data bytes for order {n}, found {}",
            bits.div_ceil(6),
            body.len()
        ));
    }
    let bit = |i: usize| (body[i / 6] - 63) >> (5 - i % 6) & 1 == 1;
    if (bits..body.len() * 6).any(bit) {
        return malformed("non-zero padding bits");
    }
    let mut g = Graph::empty(n)?;
    let mut i = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(i) {
                g.set_edge(u, v, true);
            }
            i += 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, petersen};
    use proptest::prelude::*;

    #[test]
    fn k2_is_a_underscore() {
        assert_eq!(graph6_encode(&complete(2).unwrap()), "A_");
    }

    #[test]
    fn known_strings() {
        assert_eq!(graph6_encode(&petersen()).len(), 9);
        let g = graph6_decode("D?{").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(graph6_encode(&g), "D?{");
        assert_eq!(graph6_encode(&complete(5).unwrap()), "D~{");
        assert_eq!(graph6_decode(">>graph6<<A_\n").unwrap(), complete(2).unwrap());
    }

    #[test]
    fn malformed_inputs() {
        for bad in ["", "?", "A", "A__", "A`", "D?{ ", "~"] {
            assert!(
                matches!(graph6_decode(bad), Err(Error::MalformedGraph6(_))),
                "{bad:?}"
            );
        }
    }

    #[test]
    fn long_order_header() {
        let g = crate::graph::path(70).unwrap();
        let s = graph6_encode(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(graph6_decode(&s).unwrap(), g);
    }

    proptest! {
        #[test]
        fn round_trip(n in 1usize..40, seed in any::<u64>()) {
            let mut g = Graph::empty(n).unwrap();
            let mut s = seed;
            for u in 0..n {
                for v in u + 1..n {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if s >> 63 == 1 {
                        g.set_edge(u, v, true);
                    }
                }
            }
            let text = graph6_encode(&g);
            prop_assert_eq!(graph6_decode(&text).unwrap(), g);
        }
    }
}
