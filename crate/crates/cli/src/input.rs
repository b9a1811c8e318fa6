use std::fmt;
use std::io::Read;
use std::path::Path;

use nestchroma::formats::{parse_edge_list, parse_graph6, GraphDocument, SourceFormat};

/// Input that could not be parsed; maps to exit code 2.
#[derive(Debug)]
pub struct ParseFailure(pub String);

impl fmt::Display for ParseFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ParseFailure {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum InputFormat {
    Auto,
    EdgeList,
    Graph6,
}

/// Reads a path, or standard input for `-`.
pub fn read_source(path: &str) -> anyhow::Result<String> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| ParseFailure(format!("{path}: {e}")))?;
    }
    Ok(text)
}

fn first_content_line(text: &str) -> Option<&str> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
}

/// One edge-list document, or one document per non-empty graph6 line.
pub fn parse_documents(text: &str, format: InputFormat, origin: &str) -> Result<Vec<GraphDocument>, ParseFailure> {
    let edge_list = match format {
        InputFormat::EdgeList => true,
        InputFormat::Graph6 => false,
        InputFormat::Auto => first_content_line(text).is_some_and(|l| l == "n" || l.starts_with("n ")),
    };
    if edge_list {
        return parse_edge_list(text)
            .map(|doc| vec![doc])
            .map_err(|e| ParseFailure(format!("{origin}: {e}")));
    }
    let docs: Result<Vec<_>, _> = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph6(l.trim())
                .map(|graph| GraphDocument {
                    format: SourceFormat::Graph6,
                    graph,
                    labels: None,
                })
                .map_err(|e| ParseFailure(format!("{origin}: line {}: {e}", i + 1)))
        })
        .collect();
    let docs = docs?;
    if docs.is_empty() {
        return Err(ParseFailure(format!("{origin}: no graph found")));
    }
    Ok(docs)
}

pub fn read_documents(path: &str, format: InputFormat) -> anyhow::Result<Vec<GraphDocument>> {
    let text = read_source(path)?;
    Ok(parse_documents(&text, format, path)?)
}

/// A graph given on the command line: a readable file, or a literal graph6 string.
pub fn graph_argument(value: &str) -> anyhow::Result<GraphDocument> {
    let docs = if Path::new(value).is_file() {
        read_documents(value, InputFormat::Auto)?
    } else {
        parse_documents(value, InputFormat::Graph6, "argument")?
    };
    match <[_; 1]>::try_from(docs) {
        Ok([doc]) => Ok(doc),
        Err(docs) => Err(ParseFailure(format!("{value}: expected one graph, found {}", docs.len())).into()),
    }
}
