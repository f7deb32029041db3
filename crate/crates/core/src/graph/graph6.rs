use crate::error::{Error, Result};
use crate::graph::Graph;

// graph6: printable bytes 63..=126, 6 bits each, upper adjacency
// triangle column-major (for j in 1..n, i in 0..j), zero-padded.

/// Parses a single-line graph6 code (short form n <= 62, or the `~`-prefixed
/// long forms). A leading `>>graph6<<` header is accepted and stripped.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!(
                "byte {b} outside printable range 63..=126"
            )));
        }
    }

    let (n, rest) = decode_size(bytes)?;
    if n == 0 {
        return Err(Error::Graph6("zero-vertex graph".into()));
    }
    let bit_count = n * (n - 1) / 2;
    let needed = bit_count.div_ceil(6);
    if rest.len() != needed {
        return Err(Error::Graph6(format!(
            "expected {needed} data bytes for n = {n}, got {}",
            rest.len()
        )));
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[bit / 6] - 63;
            if byte & (1 << (5 - bit % 6)) != 0 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::new(n, edges)
}

fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8])> {
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as usize, &bytes[1..]));
    }
    if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated 3-byte size field".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        return Ok((n, &bytes[4..]));
    }
    if bytes.len() < 8 {
        return Err(Error::Graph6("truncated 6-byte size field".into()));
    }
    let n = bytes[2..8]
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    Ok((n, &bytes[8..]))
}

/// Encodes a graph as a graph6 string (short form for n <= 62, 3-byte long
/// form above that).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.push(63 + ((n >> 12) & 0x3f) as u8);
        out.push(63 + ((n >> 6) & 0x3f) as u8);
        out.push(63 + (n & 0x3f) as u8);
    }
    let mut acc = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::{named, GraphKind};

    // Reference strings cross-checked against an independent graph6 codec.

    #[test]
    fn parses_k2() {
        let g = parse_graph6("A_").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn parses_k3() {
        let g = parse_graph6("Bw").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
    }

    #[test]
    fn parses_empty_two_vertices() {
        let g = parse_graph6("A?").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.m(), 0);
        assert!(!g.is_connected());
    }

    #[test]
    fn parses_p4() {
        let g = parse_graph6("Ch").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn encodes_petersen() {
        let g = named(&GraphKind::parse_named("petersen").unwrap()).unwrap();
        assert_eq!(encode_graph6(&g), "IheA@GUAo");
    }

    #[test]
    fn rejects_bad_bytes() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("A").is_err()); // truncated bit stream
        assert!(parse_graph6("A_X").is_err()); // trailing data
        assert!(parse_graph6("\u{7f}_").is_err()); // byte out of range
    }

    #[test]
    fn header_is_stripped() {
        assert_eq!(parse_graph6(">>graph6<<A_").unwrap().m(), 1);
    }

    #[test]
    fn long_form_round_trip() {
        let g = crate::graph::random_connected(70, 0.1, 42).unwrap();
        let code = encode_graph6(&g);
        assert!(code.starts_with('~'));
        assert_eq!(parse_graph6(&code).unwrap(), g);
    }
}
