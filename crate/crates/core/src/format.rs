//! Text formats: the line-based MEG format for mixed graphs and graph6 for
//! plain graphs.
//!
//! MEG:
//!
//! ```text
//! # a bichromatic 2K2
//! meg 4
//! 0 1 R
//! 2 3 B
//! ```
//!
//! The first non-comment line is `meg <n>`; each further line is one edge
//! `<u> <v> <R|B|F>` with 0-based endpoints in either order. `#` starts a
//! comment and blank lines are ignored. A pair listed twice is an error.
//! [`write_meg`] emits `u < v` in lexicographic order, so output is
//! canonical for a given graph.

use thiserror::Error;

use crate::graph::{EdgeKind, GraphError, MixedGraph, SimpleGraph, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Meg { line: usize, message: String },
    #[error("missing `meg <n>` header")]
    MissingHeader,
    #[error("graph6: {0}")]
    Graph6(String),
}

fn meg_err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Meg {
        line,
        message: message.into(),
    }
}

pub fn parse_meg(text: &str) -> Result<MixedGraph, ParseError> {
    let mut graph: Option<MixedGraph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let Some(g) = graph.as_mut() else {
            if fields.len() != 2 || fields[0] != "meg" {
                return Err(meg_err(
                    line_no,
                    format!("expected `meg <n>`, found `{content}`"),
                ));
            }
            let n: usize = fields[1]
                .parse()
                .map_err(|_| meg_err(line_no, format!("bad vertex count `{}`", fields[1])))?;
            if n > MAX_VERTICES {
                return Err(meg_err(
                    line_no,
                    format!("{n} vertices exceeds the {MAX_VERTICES}-vertex limit"),
                ));
            }
            graph = Some(MixedGraph::new(n));
            continue;
        };
        if fields.len() != 3 {
            return Err(meg_err(
                line_no,
                format!("expected `<u> <v> <R|B|F>`, found `{content}`"),
            ));
        }
        let endpoint = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| meg_err(line_no, format!("bad vertex `{s}`")))
        };
        let (u, v) = (endpoint(fields[0])?, endpoint(fields[1])?);
        let mut kind_chars = fields[2].chars();
        let kind = match (kind_chars.next(), kind_chars.next()) {
            (Some(c), None) => EdgeKind::from_letter(c),
            _ => None,
        }
        .ok_or_else(|| {
            meg_err(
                line_no,
                format!("bad edge kind `{}` (want R, B or F)", fields[2]),
            )
        })?;
        g.add_edge(u, v, kind).map_err(|e| match e {
            GraphError::AlreadyAdjacent(a, b) => {
                meg_err(line_no, format!("duplicate pair {a} {b}"))
            }
            other => meg_err(line_no, other.to_string()),
        })?;
    }
    graph.ok_or(ParseError::MissingHeader)
}

pub fn write_meg(g: &MixedGraph) -> String {
    let mut out = format!("meg {}\n", g.n());
    for (u, v, k) in g.edges() {
        out.push_str(&format!("{u} {v} {}\n", k.letter()));
    }
    out
}

/// graph6 encoding (no `>>graph6<<` header, no trailing newline).
pub fn to_graph6(g: &SimpleGraph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

pub fn parse_graph6(text: &str) -> Result<SimpleGraph, ParseError> {
    let err = |m: String| ParseError::Graph6(m);
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(err(format!("invalid character {:?}", b as char)));
    }
    let (n, body) = match bytes {
        [] => return Err(err("empty input".into())),
        [126, 126, ..] => {
            return Err(err("graphs beyond 258047 vertices are not supported".into()))
        }
        [126, a, b, c, rest @ ..] => (
            ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63),
            rest,
        ),
        [126, ..] => return Err(err("truncated vertex count".into())),
        [first, rest @ ..] => (*first as usize - 63, rest),
    };
    if n > MAX_VERTICES {
        return Err(err(format!(
            "{n} vertices exceeds the {MAX_VERTICES}-vertex limit"
        )));
    }
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if body.len() != needed {
        return Err(err(format!(
            "expected {needed} data bytes for n={n}, found {}",
            body.len()
        )));
    }
    let mut g = SimpleGraph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j).expect("in range");
            }
            k += 1;
        }
    }
    Ok(g)
}

/// graph6 input as a mixed graph with every edge flexible.
pub fn parse_graph6_mixed(text: &str) -> Result<MixedGraph, ParseError> {
    parse_graph6(text).map(|g| MixedGraph::from_simple(&g, EdgeKind::Flexible))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn meg_round_trip_is_canonical() {
        let text = "# 2K2\nmeg 4\n3 2 B   # reversed on purpose\n\n0 1 R\n";
        let g = parse_meg(text).unwrap();
        assert_eq!(g, two_k2());
        assert_eq!(write_meg(&g), "meg 4\n0 1 R\n2 3 B\n");
        assert_eq!(parse_meg(&write_meg(&g)).unwrap(), g);
    }

    #[test]
    fn meg_errors_name_the_line() {
        assert_eq!(parse_meg("# nothing\n"), Err(ParseError::MissingHeader));
        let dup = parse_meg("meg 3\n0 1 R\n1 0 B\n").unwrap_err();
        assert_eq!(dup, meg_err(3, "duplicate pair 0 1"));
        let bad_kind = parse_meg("meg 3\n0 1 X\n").unwrap_err();
        assert!(bad_kind
            .to_string()
            .starts_with("line 2: bad edge kind `X`"));
        let range = parse_meg("meg 2\n0 2 R\n").unwrap_err();
        assert!(
            range.to_string().contains("vertex 2 out of range"),
            "{range}"
        );
        let header = parse_meg("graph 2\n").unwrap_err();
        assert!(header.to_string().contains("expected `meg <n>`"));
        assert!(parse_meg("meg 2\n1 1 F\n")
            .unwrap_err()
            .to_string()
            .contains("loop"));
    }

    #[test]
    fn graph6_known_strings() {
        assert_eq!(to_graph6(&path(4)), "Ch");
        assert_eq!(to_graph6(&SimpleGraph::complete(4)), "C~");
        assert_eq!(to_graph6(&SimpleGraph::new(1)), "@");
        assert_eq!(to_graph6(&SimpleGraph::new(0)), "?");
        assert_eq!(to_graph6(&cycle(5)), "Dhc");
        assert_eq!(
            parse_graph6(">>graph6<<C~\n").unwrap(),
            SimpleGraph::complete(4)
        );
    }

    #[test]
    fn graph6_rejects_garbage() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("C~~").is_err());
        assert!(parse_graph6("C ").is_err());
    }

    #[test]
    fn graph6_mixed_is_all_flexible() {
        let g = parse_graph6_mixed("C~").unwrap();
        assert_eq!(g.count_kind(EdgeKind::Flexible), 6);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn graph6_round_trip(n in 0usize..=64, seed in any::<u64>()) {
                let mut g = SimpleGraph::new(n);
                let mut s = seed | 1;
                for u in 0..n {
                    for v in u + 1..n {
                        s ^= s << 13; s ^= s >> 7; s ^= s << 17;
                        if s & 1 == 1 { g.add_edge(u, v).unwrap(); }
                    }
                }
                prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
            }
        }
    }
}
