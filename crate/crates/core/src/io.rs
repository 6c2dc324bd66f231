//! Edge-list text and graph6 readers/writers.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parses whitespace-separated `u v` lines. `#` starts a comment; blank lines
/// are skipped. An optional first data line `n <count>` fixes the vertex count,
/// otherwise it is one more than the largest id seen.
pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut max_id: Option<usize> = None;
    let mut seen_data = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let err = |msg: String| Error::Parse { line: line_no, msg };

        if !seen_data && toks[0] == "n" {
            if toks.len() != 2 {
                return Err(err("expected `n <count>`".into()));
            }
            let count = toks[1]
                .parse::<usize>()
                .map_err(|_| err(format!("invalid vertex count {:?}", toks[1])))?;
            declared = Some(count);
            seen_data = true;
            continue;
        }
        seen_data = true;
        if toks.len() != 2 {
            return Err(err(format!("expected two vertex ids, found {}", toks.len())));
        }
        let parse = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| err(format!("invalid vertex id {t:?}")))
        };
        let (u, v) = (parse(toks[0])?, parse(toks[1])?);
        if u == v {
            return Err(err(format!("self-loop at vertex {u}")));
        }
        max_id = max_id.max(Some(u.max(v)));
        edges.push((u, v));
    }

    let n = match (declared, max_id) {
        (Some(n), Some(max)) if max >= n => {
            return Err(Error::Parse {
                line: 1,
                msg: format!("declared n={n} but vertex {max} appears"),
            })
        }
        (Some(n), _) => n,
        (None, Some(max)) => max + 1,
        (None, None) => 0,
    };
    if n > crate::graph::DEFAULT_VERTEX_CAP {
        return Err(Error::range(format!("{n} vertices exceeds the vertex cap")));
    }
    Graph::from_edges(n, edges)
}

/// Writes `n <count>` followed by one `u v` line per edge (`u < v`).
pub fn write_edgelist(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

const GRAPH6_HEADER: &[u8] = b">>graph6<<";

/// Decodes a single graph6 record. A `>>graph6<<` prefix and trailing
/// whitespace are tolerated.
pub fn parse_graph6(bytes: &[u8]) -> Result<Graph> {
    let bytes = bytes.strip_prefix(GRAPH6_HEADER).unwrap_or(bytes);
    let end = bytes
        .iter()
        .rposition(|b| !b.is_ascii_whitespace())
        .map_or(0, |p| p + 1);
    let bytes = &bytes[..end];
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!(
            "byte {} at offset {pos} outside 63..=126",
            bytes[pos]
        )));
    }

    let (n, body) = decode_n(bytes)?;
    if n >= 1 << 18 {
        return Err(Error::Graph6(format!("n={n} exceeds 2^18 - 1")));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() < need {
        return Err(Error::Graph6(format!(
            "truncated: need {need} data bytes, found {}",
            body.len()
        )));
    }
    if body.len() > need {
        return Err(Error::Graph6(format!(
            "{} trailing bytes after graph data",
            body.len() - need
        )));
    }

    let mut edges = Vec::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

fn decode_n(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let chunk = |s: &[u8]| s.iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
    match bytes {
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Graph6("truncated size header".into()));
            }
            Ok((chunk(&rest[..6]), &rest[6..]))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated size header".into()));
            }
            Ok((chunk(&rest[..3]), &rest[3..]))
        }
        [b, rest @ ..] => Ok(((b - 63) as usize, rest)),
        [] => Err(Error::Graph6("empty input".into())),
    }
}

/// Encodes `g` in graph6 (no header, no trailing newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
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
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes one graph per non-empty line.
pub fn parse_graph6_corpus(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| parse_graph6(l.as_bytes()))
        .collect()
}
