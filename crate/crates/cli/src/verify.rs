use std::collections::HashMap;

use clap::Args;
use serde_json::json;

use nestchroma::formats::GraphDocument;
use nestchroma::nested::{verify_nested_coloring, Verdict};

use crate::input::{graph_argument, read_source, ParseFailure};

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// One colour class per line, vertices separated by whitespace; `#` starts a comment.
    pub partition: String,
    /// The graph: a file (edge list or graph6) or a graph6 string.
    #[arg(long)]
    pub graph: String,
    #[arg(long)]
    pub json: bool,
}

/// The partition is valid but not a nested colouring; maps to exit code 1.
#[derive(Debug)]
pub struct NotNested(pub String);

impl std::fmt::Display for NotNested {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for NotNested {}

pub fn parse_partition(text: &str, doc: &GraphDocument) -> Result<Vec<Vec<usize>>, ParseFailure> {
    let index: Option<HashMap<&str, usize>> = doc
        .labels
        .as_ref()
        .map(|labels| labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect());
    let n = doc.graph.order();
    let mut classes = Vec::new();
    for (line, content) in text.lines().enumerate() {
        let content = content.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let class = content
            .split_whitespace()
            .map(|token| {
                let v = match &index {
                    Some(index) => index.get(token).copied(),
                    None => token.parse::<usize>().ok().filter(|&v| v < n),
                };
                v.ok_or_else(|| ParseFailure(format!("line {}: unknown vertex {token:?}", line + 1)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        classes.push(class);
    }
    Ok(classes)
}

pub fn run(args: &VerifyArgs) -> anyhow::Result<()> {
    let doc = graph_argument(&args.graph)?;
    let text = read_source(&args.partition)?;
    let partition = parse_partition(&text, &doc)?;
    let verdict = verify_nested_coloring(&doc.graph, &partition)
        .map_err(|e| ParseFailure(format!("{}: {e}", args.partition)))?;
    let name = |v: usize| doc.label(v);
    let (nested, message) = match &verdict {
        Verdict::Nested(coloring) => (true, format!("nested colouring with {} classes", coloring.len())),
        Verdict::NotIndependent { class, edge: (u, v) } => (
            false,
            format!("class {} is not independent: edge {} {}", class + 1, name(*u), name(*v)),
        ),
        Verdict::NotNested { class, witness: (u, v) } => (
            false,
            format!(
                "class {} is not nested: neighbourhoods of {} and {} are incomparable",
                class + 1,
                name(*u),
                name(*v)
            ),
        ),
    };
    if args.json {
        println!("{}", json!({"nested": nested, "classes": partition.len(), "message": message}));
    } else {
        println!("{message}");
    }
    if nested {
        Ok(())
    } else {
        Err(NotNested(message).into())
    }
}
