//! Text formats: graph6 (read/write), a plain edge list (read/write) and
//! Graphviz DOT (write only).

use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("graph6: {kind} at byte {offset}")]
    Graph6 { offset: usize, kind: Graph6ErrorKind },
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6ErrorKind {
    #[error("empty input")]
    Empty,
    #[error("byte 0x{0:02x} is outside the graph6 alphabet")]
    InvalidByte(u8),
    #[error("truncated order header")]
    TruncatedHeader,
    #[error("order {0} is too large")]
    OrderTooLarge(u64),
    #[error("expected {expected} body bytes, found {found}")]
    BodyLength { expected: usize, found: usize },
    #[error("padding bits in the final byte are not zero")]
    NonzeroPadding,
}

const GRAPH6_HEADER: &str = ">>graph6<<";

fn g6_err(offset: usize, kind: Graph6ErrorKind) -> FormatError {
    FormatError::Graph6 { offset, kind }
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    let n = n as u64;
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
}

/// Encodes `g` as a single graph6 line (no trailing newline).
///
/// Bits run over the upper triangle column by column, `(0,1), (0,2), (1,2),
/// (0,3), ...`, packed six to a byte with the first bit most significant.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_order(n, &mut out);
    let (mut chunk, mut filled) = (0u8, 0);
    for j in 1..n {
        let col = g.neighbors(j);
        for i in 0..j {
            chunk = chunk << 1 | col.contains(i) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                (chunk, filled) = (0, 0);
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses one graph6 line. A leading `>>graph6<<` header and trailing line
/// terminators are accepted.
pub fn parse_graph6(line: &str) -> Result<Graph, FormatError> {
    let mut start = 0;
    let mut bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.starts_with(GRAPH6_HEADER.as_bytes()) {
        start = GRAPH6_HEADER.len();
        bytes = &bytes[start..];
    }
    if bytes.is_empty() {
        return Err(g6_err(start, Graph6ErrorKind::Empty));
    }
    if let Some(i) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(g6_err(start + i, Graph6ErrorKind::InvalidByte(bytes[i])));
    }
    let digits = |from: usize, count: usize| -> Result<u64, FormatError> {
        let chunk = bytes
            .get(from..from + count)
            .ok_or_else(|| g6_err(start + bytes.len(), Graph6ErrorKind::TruncatedHeader))?;
        Ok(chunk.iter().fold(0u64, |acc, b| acc << 6 | (b - 63) as u64))
    };
    let (n, body_at) = match bytes {
        [126, 126, ..] => (digits(2, 6)?, 8),
        [126, ..] => (digits(1, 3)?, 4),
        [b, ..] => ((b - 63) as u64, 1),
        [] => unreachable!(),
    };
    if n > MAX_ORDER as u64 {
        return Err(g6_err(start, Graph6ErrorKind::OrderTooLarge(n)));
    }
    let n = n as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let body = &bytes[body_at..];
    if body.len() != expected {
        return Err(g6_err(
            start + body_at + body.len().min(expected),
            Graph6ErrorKind::BodyLength { expected, found: body.len() },
        ));
    }
    let pad = expected * 6 - bits;
    if pad > 0 && (body[expected - 1] - 63) & ((1 << pad) - 1) != 0 {
        return Err(g6_err(start + body_at + expected - 1, Graph6ErrorKind::NonzeroPadding));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::new(n, edges)?)
}

/// Writes the plain edge list: a header line `n m`, then one `u v` line per
/// edge with `u < v`, sorted.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Original token for each vertex index of a relabeled edge list. Indices
/// that never appear in an edge have no label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabelTable {
    pub labels: Vec<Option<String>>,
}

/// Significant lines: blank lines and `#` comments are skipped. Line numbers
/// are 1-based.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn edge_list_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::EdgeList { line, message: message.into() }
}

fn parse_edge_list_with<F>(text: &str, mut endpoint: F) -> Result<Graph, FormatError>
where
    F: FnMut(&str, usize, usize) -> Result<usize, FormatError>,
{
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| edge_list_err(1, "missing `n m` header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [n, m] = fields[..] else {
        return Err(edge_list_err(hline, format!("header needs exactly two fields, found {}", fields.len())));
    };
    let n: usize = n.parse().map_err(|_| edge_list_err(hline, format!("bad vertex count `{n}`")))?;
    let m: usize = m.parse().map_err(|_| edge_list_err(hline, format!("bad edge count `{m}`")))?;
    if n > MAX_ORDER {
        return Err(GraphError::Capacity { requested: n, max: MAX_ORDER }.into());
    }
    let mut edges = Vec::with_capacity(m.min(1 << 16));
    let mut last_line = hline;
    for (line, body) in lines {
        last_line = line;
        if edges.len() == m {
            return Err(edge_list_err(line, format!("more than the {m} edges declared in the header")));
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        let [u, v] = fields[..] else {
            return Err(edge_list_err(line, format!("expected `u v`, found {} fields", fields.len())));
        };
        let (u, v) = (endpoint(u, n, line)?, endpoint(v, n, line)?);
        if u == v {
            return Err(edge_list_err(line, format!("self-loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(edge_list_err(last_line, format!("header declares {m} edges, found {}", edges.len())));
    }
    Ok(Graph::new(n, edges)?)
}

/// Parses the plain edge list with 0-based integer endpoints.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    parse_edge_list_with(text, |tok, n, line| {
        let v: usize = tok.parse().map_err(|_| edge_list_err(line, format!("bad vertex `{tok}`")))?;
        if v >= n {
            return Err(edge_list_err(line, format!("vertex {v} is outside [0, {n})")));
        }
        Ok(v)
    })
}

/// Parses an edge list whose endpoints are arbitrary tokens. Tokens get
/// indices in order of first appearance.
pub fn parse_labeled_edge_list(text: &str) -> Result<(Graph, LabelTable), FormatError> {
    let mut labels: Vec<String> = Vec::new();
    let g = parse_edge_list_with(text, |tok, n, line| {
        if let Some(i) = labels.iter().position(|l| l == tok) {
            return Ok(i);
        }
        if labels.len() == n {
            return Err(edge_list_err(line, format!("label `{tok}` exceeds the {n} declared vertices")));
        }
        labels.push(tok.to_owned());
        Ok(labels.len() - 1)
    })?;
    let mut table: Vec<Option<String>> = labels.into_iter().map(Some).collect();
    table.resize(g.order(), None);
    Ok((g, LabelTable { labels: table }))
}

/// How DOT output names vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DotLabels {
    /// `v0, v1, ...`
    Plain,
    /// The graph is a splitting graph over a base of this order: vertex
    /// `base + v` is the copy `v'` and is drawn as a dashed box.
    Split { base_order: usize },
}

pub fn write_dot(g: &Graph, labels: DotLabels) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.order() {
        match labels {
            DotLabels::Split { base_order } if v >= base_order => {
                let _ = writeln!(out, "  {v} [label=\"v{}'\", shape=box, style=dashed];", v - base_order);
            }
            _ => {
                let _ = writeln!(out, "  {v} [label=\"v{v}\"];");
            }
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
