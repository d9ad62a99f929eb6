//! Text formats for graphs.
//!
//! graph6 (bit-exact, n < 63 only): optional ">>graph6<<" header, one byte
//! `n + 63`, then the upper-triangle bits x(0,1), x(0,2), x(1,2), x(0,3), ...
//! packed six per byte most-significant-bit first, each byte offset by +63,
//! zero-padded to a byte boundary.
//!
//! DIMACS: `c` comment lines, one `p edge <n> <m>` line, then `m` lines
//! `e <u> <v>` with 1-based vertices.
//!
//! Edge list: first line `n <vertex-count>`, then one `u v` pair per line,
//! 0-based.

use super::{triangle_pairs, Graph};
use crate::error::{Error, Result};

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Parses a graph6 string (strict: canonical padding, no trailing bytes).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let (body, base) = match text.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (rest, GRAPH6_HEADER.len()),
        None => (text, 0),
    };
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse(base, "empty graph6 string"));
    }
    if bytes[0] == 126 {
        return Err(Error::parse(base, "n >= 63 is unsupported"));
    }
    if !(63..126).contains(&bytes[0]) {
        return Err(Error::parse(base, format!("invalid size byte {}", bytes[0])));
    }
    let n = (bytes[0] - 63) as usize;
    let bit_count = n * (n - 1) / 2;
    let byte_count = bit_count.div_ceil(6);
    if bytes.len() != 1 + byte_count {
        return Err(Error::parse(
            base + bytes.len().min(1 + byte_count),
            format!(
                "expected {} data bytes for n={}, found {}",
                byte_count,
                n,
                bytes.len() - 1
            ),
        ));
    }
    let mut bits = Vec::with_capacity(byte_count * 6);
    for (k, &b) in bytes[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(base + 1 + k, format!("invalid data byte {b}")));
        }
        let v = b - 63;
        for shift in (0..6).rev() {
            bits.push(v >> shift & 1 == 1);
        }
    }
    for (t, &bit) in bits.iter().enumerate().skip(bit_count) {
        if bit {
            return Err(Error::parse(
                base + 1 + t / 6,
                "nonzero padding bits (non-canonical graph6)",
            ));
        }
    }
    let pairs = triangle_pairs(n);
    let edges: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .filter(|&(t, _)| bits[t])
        .map(|(_, &p)| p)
        .collect();
    Graph::from_edge_list(n, &edges)
}

/// Emits the canonical (headerless) graph6 string. Requires n < 63.
pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n >= 63 {
        return Err(Error::invalid(format!("graph6 output requires n < 63, got {n}")));
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let pairs = triangle_pairs(n);
    let mut acc = 0u8;
    let mut filled = 0;
    for (i, j) in pairs {
        acc = acc << 1 | u8::from(g.has_edge(i, j));
        filled += 1;
        if filled == 6 {
            out.push((acc + 63) as char);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        acc <<= 6 - filled;
        out.push((acc + 63) as char);
    }
    Ok(out)
}

/// Parses DIMACS ("p edge" header, `e u v` lines, 1-based vertices).
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let line_start = offset;
        offset += line.len();
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(Error::parse(line_start, "duplicate problem line"));
                }
                if fields.len() != 4 || fields[1] != "edge" {
                    return Err(Error::parse(line_start, "expected 'p edge <n> <m>'"));
                }
                let n = fields[2]
                    .parse::<usize>()
                    .map_err(|_| Error::parse(line_start, "invalid vertex count"))?;
                let m = fields[3]
                    .parse::<usize>()
                    .map_err(|_| Error::parse(line_start, "invalid edge count"))?;
                header = Some((n, m));
            }
            "e" => {
                let (n, _) = header
                    .ok_or_else(|| Error::parse(line_start, "edge before problem line"))?;
                if fields.len() != 3 {
                    return Err(Error::parse(line_start, "expected 'e <u> <v>'"));
                }
                let u = fields[1]
                    .parse::<usize>()
                    .map_err(|_| Error::parse(line_start, "invalid endpoint"))?;
                let v = fields[2]
                    .parse::<usize>()
                    .map_err(|_| Error::parse(line_start, "invalid endpoint"))?;
                if u < 1 || v < 1 || u > n || v > n {
                    return Err(Error::parse(
                        line_start,
                        format!("endpoint out of range 1..={n}"),
                    ));
                }
                edges.push((u - 1, v - 1));
            }
            other => {
                return Err(Error::parse(
                    line_start,
                    format!("unknown line type '{other}'"),
                ));
            }
        }
    }
    let (n, m) = header.ok_or_else(|| Error::parse(text.len(), "missing problem line"))?;
    if edges.len() != m {
        return Err(Error::parse(
            text.len(),
            format!("problem line declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edge_list(n, &edges)
}

/// Parses the plain edge-list format: first line `n <vertex-count>`, then
/// one 0-based `u v` pair per line.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let line_start = offset;
        offset += line.len();
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match n {
            None => {
                if fields.len() != 2 || fields[0] != "n" {
                    return Err(Error::parse(line_start, "expected header 'n <vertex-count>'"));
                }
                n = Some(
                    fields[1]
                        .parse::<usize>()
                        .map_err(|_| Error::parse(line_start, "invalid vertex count"))?,
                );
            }
            Some(count) => {
                if fields.len() != 2 {
                    return Err(Error::parse(line_start, "expected '<u> <v>'"));
                }
                let u = fields[0]
                    .parse::<usize>()
                    .map_err(|_| Error::parse(line_start, "invalid endpoint"))?;
                let v = fields[1]
                    .parse::<usize>()
                    .map_err(|_| Error::parse(line_start, "invalid endpoint"))?;
                if u >= count || v >= count {
                    return Err(Error::parse(
                        line_start,
                        format!("endpoint out of range 0..{count}"),
                    ));
                }
                edges.push((u, v));
            }
        }
    }
    let n = n.ok_or_else(|| Error::parse(text.len(), "missing 'n <vertex-count>' header"))?;
    Graph::from_edge_list(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::{complete, cycle, empty, path};

    #[test]
    fn graph6_triangle() {
        let g = parse_graph6("Bw").unwrap();
        assert_eq!(g, complete(3));
        assert_eq!(emit_graph6(&complete(3)).unwrap(), "Bw");
    }

    #[test]
    fn graph6_known_strings() {
        assert_eq!(emit_graph6(&complete(4)).unwrap(), "C~");
        assert_eq!(emit_graph6(&complete(5)).unwrap(), "D~{");
        assert_eq!(emit_graph6(&cycle(5)).unwrap(), "Dhc");
        assert_eq!(emit_graph6(&path(6)).unwrap(), "EhCG");
        assert_eq!(emit_graph6(&empty(5)).unwrap(), "D??");
        assert_eq!(parse_graph6("D~{").unwrap(), complete(5));
    }

    #[test]
    fn graph6_header_accepted() {
        assert_eq!(parse_graph6(">>graph6<<Bw").unwrap(), complete(3));
    }

    #[test]
    fn graph6_errors_carry_offsets() {
        match parse_graph6("~??") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 0),
            other => panic!("expected parse error, got {other:?}"),
        }
        // truncated body for n=5 (needs 2 data bytes)
        match parse_graph6("D?") {
            Err(Error::Parse { .. }) => {}
            other => panic!("expected parse error, got {other:?}"),
        }
        // 0x1f is below the printable graph6 range
        match parse_graph6("B\x1f") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
        // K3 with nonzero padding: 111111 instead of 111000
        match parse_graph6("B~") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn dimacs_path() {
        let g = parse_dimacs("c a comment\np edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(g, path(3));
    }

    #[test]
    fn dimacs_errors() {
        assert!(parse_dimacs("e 1 2\n").is_err());
        assert!(parse_dimacs("p edge 3 2\ne 1 2\n").is_err());
        assert!(parse_dimacs("p edge 3 1\ne 0 1\n").is_err());
        assert!(parse_dimacs("p edge 3 1\nq 1 2\n").is_err());
    }

    #[test]
    fn edge_list_format() {
        let g = parse_edge_list("n 6\n0 1\n1 2\n2 3\n3 4\n4 5\n").unwrap();
        assert_eq!(g, path(6));
        assert!(parse_edge_list("0 1\n").is_err());
        assert!(parse_edge_list("n 2\n0 2\n").is_err());
    }
}
