use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parses the line-oriented edge-list format: first line `n m`, then `m`
/// lines `u v` with 0-based endpoints. Blank lines and `#` comments are
/// skipped; CRLF is tolerated.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line_no, header) = lines.next().ok_or(Error::MalformedLine {
        line: 1,
        reason: "empty input".into(),
    })?;
    let mut parts = header.split_whitespace();
    let n: usize = parse_field(&mut parts, line_no, "vertex count")?;
    let m: usize = parse_field(&mut parts, line_no, "edge count")?;
    if parts.next().is_some() {
        return Err(Error::MalformedLine {
            line: line_no,
            reason: "trailing tokens after \"n m\"".into(),
        });
    }
    if n == 0 {
        return Err(Error::MalformedLine {
            line: line_no,
            reason: "vertex count must be positive".into(),
        });
    }

    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line_no, line) = lines.next().ok_or(Error::MalformedLine {
            line: 0,
            reason: format!("expected {m} edge lines, input ended early"),
        })?;
        let mut parts = line.split_whitespace();
        let u: usize = parse_field(&mut parts, line_no, "endpoint")?;
        let v: usize = parse_field(&mut parts, line_no, "endpoint")?;
        if parts.next().is_some() {
            return Err(Error::MalformedLine {
                line: line_no,
                reason: "trailing tokens after edge".into(),
            });
        }
        edges.push((u, v));
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(Error::MalformedLine {
            line: line_no,
            reason: "unexpected content after the last edge".into(),
        });
    }
    Graph::new(n, edges)
}

fn parse_field<'a>(
    parts: &mut impl Iterator<Item = &'a str>,
    line: usize,
    what: &str,
) -> Result<usize> {
    let tok = parts.next().ok_or_else(|| Error::MalformedLine {
        line,
        reason: format!("missing {what}"),
    })?;
    tok.parse().map_err(|_| Error::MalformedLine {
        line,
        reason: format!("{what} is not a non-negative integer: {tok:?}"),
    })
}

/// Serializes a graph in the edge-list format accepted by
/// [`parse_edge_list`].
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_k2() {
        let g = parse_edge_list("2 1\n0 1").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn parses_triangle() {
        let g = parse_edge_list("3 3\n0 1\n1 2\n0 2").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
    }

    #[test]
    fn rejects_loop_edge() {
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n1 1"),
            Err(Error::LoopEdge(1))
        ));
    }

    #[test]
    fn rejects_duplicate_and_range() {
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n1 0"),
            Err(Error::DuplicateEdge(0, 1))
        ));
        assert!(matches!(
            parse_edge_list("2 1\n0 5"),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("2").is_err());
        assert!(parse_edge_list("2 1\n0").is_err());
        assert!(parse_edge_list("2 1\n0 x").is_err());
        assert!(parse_edge_list("2 2\n0 1").is_err());
    }

    #[test]
    fn tolerates_crlf_and_comments() {
        let g = parse_edge_list("# a path\r\n3 2\r\n0 1\r\n1 2\r\n").unwrap();
        assert_eq!(g.m(), 2);
    }

    #[test]
    fn round_trip() {
        let g = parse_edge_list("4 3\n0 1\n1 2\n2 3").unwrap();
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }
}
