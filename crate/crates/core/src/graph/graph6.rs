//! graph6 text encoding, short form only (at most 62 vertices).

use super::Graph;

const MAX_SHORT: usize = 62;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
#[error("graph6 parse error at byte {offset}: {message}")]
pub struct Graph6Error {
    pub offset: usize,
    pub message: String,
}

fn err(offset: usize, message: impl Into<String>) -> Graph6Error {
    Graph6Error { offset, message: message.into() }
}

/// Decodes a graph6 string. Surrounding whitespace is ignored; vertices are
/// labeled `0..n`.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let lead = text.len() - text.trim_start().len();
    let bytes = text.trim().as_bytes();
    let Some(&head) = bytes.first() else {
        return Err(err(0, "empty input"));
    };
    if head == b'>' {
        return Err(err(lead, "graph6 header `>>graph6<<` is not supported"));
    }
    if !(63..=126).contains(&head) {
        return Err(err(lead, format!("invalid character {:?}", head as char)));
    }
    if head == 126 {
        return Err(err(lead, format!("long form (more than {MAX_SHORT} vertices) is not supported")));
    }
    let n = (head - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() != expected {
        let at = lead + 1 + body.len().min(expected);
        return Err(err(at, format!("expected {expected} data byte(s) for {n} vertices, found {}", body.len())));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(lead + 1 + i, format!("invalid character {:?}", b as char)));
        }
        let chunk = b - 63;
        for s in (0..6).rev() {
            let bit = (chunk >> s) & 1 == 1;
            if k < bits {
                if bit {
                    let (u, v) = pair_at(k);
                    g.add_edge(u, v);
                }
            } else if bit {
                return Err(err(lead + 1 + i, "nonzero padding bits"));
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Position `k` in column-major upper-triangle order: (0,1), (0,2), (1,2), (0,3), ...
fn pair_at(k: usize) -> (usize, usize) {
    let mut v = 1;
    let mut start = 0;
    while start + v <= k {
        start += v;
        v += 1;
    }
    (k - start, v)
}

/// Encodes a graph in graph6 (vertex order = index order).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_SHORT, "short-form graph6 holds at most {MAX_SHORT} vertices");
    let mut out = String::with_capacity(1 + (n * n) / 12 + 1);
    out.push((n as u8 + 63) as char);
    let mut chunk = 0u8;
    let mut used = 0;
    for v in 1..n {
        for u in 0..v {
            chunk = (chunk << 1) | g.has_edge(u, v) as u8;
            used += 1;
            if used == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push(((chunk << (6 - used)) + 63) as char);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;
    use proptest::prelude::*;

    #[test]
    fn known_strings() {
        assert_eq!(parse_graph6("C~").unwrap(), generate("complete", &[4]).unwrap());
        assert_eq!(write_graph6(&Graph::empty(1)), "@");
        assert_eq!(write_graph6(&Graph::empty(0)), "?");
        // P4 in path order
        assert_eq!(write_graph6(&generate("path", &[4]).unwrap()), "Ch");
    }

    #[test]
    fn parse_errors_carry_offsets() {
        assert_eq!(parse_graph6("").unwrap_err().offset, 0);
        assert_eq!(parse_graph6("C~~").unwrap_err().offset, 2);
        assert_eq!(parse_graph6("C").unwrap_err().offset, 1);
        assert_eq!(parse_graph6("C!").unwrap_err().offset, 1);
        // n = 2 has one data bit; the low five must be zero
        assert!(parse_graph6("A_").is_ok());
        assert_eq!(parse_graph6("A`").unwrap_err().message, "nonzero padding bits");
        assert!(parse_graph6("~?@c").is_err());
        assert_eq!(parse_graph6("  C~\n").unwrap().edge_count(), 6);
    }

    proptest! {
        #[test]
        fn round_trip(n in 0usize..20, seed in any::<u64>()) {
            let mut g = Graph::empty(n);
            let mut s = seed;
            for u in 0..n {
                for v in u + 1..n {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if s >> 63 == 1 {
                        g.add_edge(u, v);
                    }
                }
            }
            let text = write_graph6(&g);
            prop_assert_eq!(parse_graph6(&text).unwrap(), g);
            prop_assert_eq!(write_graph6(&parse_graph6(&text).unwrap()), text);
        }
    }
}
