//! Text formats: graph6 and a plain edge list.
//!
//! graph6 packs the upper triangle column by column (`x(0,1), x(0,2),
//! x(1,2), x(0,3), …`) into 6-bit groups offset by 63, after a size header.
//!
//! The edge list is a header line `n <count>` followed by one `u v` pair per
//! line; `#` starts a comment. If every token is an integer below `count`,
//! tokens are vertex indices. Otherwise tokens are labels assigned dense
//! indices in first-seen order, a line with a single token declares an
//! isolated vertex, and exactly `count` distinct labels must appear.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("line {line}: {message}")]
    EdgeList { line: usize, message: String },
}

fn g6err(message: impl Into<String>) -> FormatError {
    FormatError::Graph6(message.into())
}

fn line_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::EdgeList {
        line,
        message: message.into(),
    }
}

/// Largest order graph6 can describe.
pub const GRAPH6_MAX_ORDER: usize = (1 << 36) - 1;

fn push_order(n: usize, out: &mut Vec<u8>) {
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258048 {
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

pub fn write_graph6(graph: &Graph) -> String {
    let n = graph.order();
    let mut out = Vec::with_capacity(8 + n * n / 12);
    push_order(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(graph.has_edge(i, j));
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

pub fn parse_graph6(line: &str) -> Result<Graph, FormatError> {
    let text = line.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(g6err(format!("byte {b} outside 63..=126")));
    }
    let values: Vec<usize> = bytes.iter().map(|&b| usize::from(b - 63)).collect();
    let (n, body) = match values.as_slice() {
        [] => return Err(g6err("empty input")),
        [63, 63, rest @ ..] => {
            if rest.len() < 6 {
                return Err(g6err("truncated size header"));
            }
            let n = rest[..6].iter().fold(0, |acc, &v| (acc << 6) | v);
            if n < 258048 {
                return Err(g6err("non-minimal size header"));
            }
            (n, &rest[6..])
        }
        [63, rest @ ..] => {
            if rest.len() < 3 {
                return Err(g6err("truncated size header"));
            }
            let n = rest[..3].iter().fold(0, |acc, &v| (acc << 6) | v);
            if n < 63 {
                return Err(g6err("non-minimal size header"));
            }
            (n, &rest[3..])
        }
        [n, rest @ ..] => (*n, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(g6err(format!(
            "{n} vertices need {expected} data bytes, found {}",
            body.len()
        )));
    }
    if bits % 6 != 0 {
        let pad = 6 - bits % 6;
        if body[expected - 1] & ((1 << pad) - 1) != 0 {
            return Err(g6err("nonzero padding bits"));
        }
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (body[k / 6] >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::new(n, edges).expect("graph6 bits describe a simple graph"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SourceFormat {
    EdgeList,
    Graph6,
}

/// A parsed graph together with where it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub format: SourceFormat,
    pub graph: Graph,
    /// External names for vertices `0..n`, if the source used names.
    pub labels: Option<Vec<String>>,
}

impl GraphDocument {
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

pub fn parse_edge_list(text: &str) -> Result<GraphDocument, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l)))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or_else(|| line_err(1, "missing `n <count>` header"))?;
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|_| line_err(header_line, format!("bad vertex count {count:?}")))?,
        _ => return Err(line_err(header_line, "expected header `n <count>`")),
    };

    let mut rows: Vec<(usize, Vec<&str>)> = Vec::new();
    for (line, content) in lines {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.len() > 2 {
            return Err(line_err(line, format!("expected `u v`, found {} tokens", tokens.len())));
        }
        rows.push((line, tokens));
    }

    let indexed = rows
        .iter()
        .flat_map(|(_, t)| t.iter())
        .all(|t| t.parse::<usize>().is_ok_and(|v| v < n));

    let mut edges = Vec::new();
    let labels = if indexed {
        for (line, tokens) in &rows {
            let ids: Vec<usize> = tokens.iter().map(|t| t.parse().expect("checked above")).collect();
            if let [u, v] = ids[..] {
                if u == v {
                    return Err(line_err(*line, format!("loop at vertex {u}")));
                }
                edges.push((u, v));
            }
        }
        None
    } else {
        let mut index: HashMap<&str, usize> = HashMap::new();
        let mut names: Vec<String> = Vec::new();
        for (line, tokens) in &rows {
            let mut ids = Vec::with_capacity(2);
            for &t in tokens {
                let next = names.len();
                let id = *index.entry(t).or_insert(next);
                if id == next {
                    if next == n {
                        return Err(line_err(*line, format!("more than {n} distinct vertex labels")));
                    }
                    names.push(t.to_string());
                }
                ids.push(id);
            }
            if let [u, v] = ids[..] {
                if u == v {
                    return Err(line_err(*line, format!("loop at vertex {:?}", tokens[0])));
                }
                edges.push((u, v));
            }
        }
        if names.len() != n {
            return Err(line_err(
                header_line,
                format!(
                    "header declares {n} vertices but {} labels appear; list isolated vertices on their own line",
                    names.len()
                ),
            ));
        }
        Some(names)
    };

    let graph = Graph::new(n, edges).map_err(|e| match e {
        GraphError::Loop(v) | GraphError::VertexOutOfRange { vertex: v, .. } => {
            line_err(header_line, format!("invalid vertex {v}"))
        }
    })?;
    Ok(GraphDocument {
        format: SourceFormat::EdgeList,
        graph,
        labels,
    })
}

pub fn write_edge_list(graph: &Graph, labels: Option<&[String]>) -> String {
    let name = |v: usize| labels.map_or_else(|| v.to_string(), |l| l[v].clone());
    let mut out = format!("n {}\n", graph.order());
    for (u, v) in graph.edges() {
        let _ = writeln!(out, "{} {}", name(u), name(v));
    }
    if labels.is_some() {
        for v in (0..graph.order()).filter(|&v| graph.is_isolated(v)) {
            let _ = writeln!(out, "{}", name(v));
        }
    }
    out
}

/// Parses either format, treating text that starts with an `n` header as an edge list.
pub fn parse_document(text: &str) -> Result<GraphDocument, FormatError> {
    let first = text.lines().map(strip_comment).find(|l| !l.is_empty());
    match first {
        Some(l) if l.starts_with("n ") || l == "n" => parse_edge_list(text),
        Some(l) => Ok(GraphDocument {
            format: SourceFormat::Graph6,
            graph: parse_graph6(l)?,
            labels: None,
        }),
        None => Err(line_err(1, "empty input")),
    }
}
