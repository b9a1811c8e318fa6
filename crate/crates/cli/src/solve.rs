use std::fmt;
use std::fmt::Write as _;
use std::time::Instant;

use clap::Args;
use serde_json::{json, Value};

use nestchroma::formats::GraphDocument;
use nestchroma::nested::{solve, ORACLE_DEFAULT_CAP};
use nestchroma::{brute_force_nested_chromatic, chromatic_number};

use crate::input::{read_documents, InputFormat};

/// The solver disagreed with the brute-force oracle; maps to exit code 3.
#[derive(Debug)]
pub struct OracleMismatch {
    pub solver: usize,
    pub oracle: usize,
}

impl fmt::Display for OracleMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "oracle mismatch: solver chi_N = {}, brute force = {}", self.solver, self.oracle)
    }
}

impl std::error::Error for OracleMismatch {}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Graph file (edge list or graph6, one graph per line); `-` reads standard input.
    #[arg(default_value = "-")]
    pub input: String,
    #[arg(long, value_enum, default_value = "auto")]
    pub format: InputFormat,
    /// Print an optimal nested colouring, each class in neighbourhood order.
    #[arg(long)]
    pub coloring: bool,
    /// Print the duplicate classes.
    #[arg(long)]
    pub dedup: bool,
    /// Print the Hasse diagram of the weak-duplicate poset in DOT.
    #[arg(long)]
    pub poset_dot: bool,
    /// Cross-check against brute force over all set partitions.
    #[arg(long)]
    pub oracle: bool,
    #[arg(long, default_value_t = ORACLE_DEFAULT_CAP)]
    pub oracle_cap: usize,
    /// Also compute the chromatic number.
    #[arg(long)]
    pub chi: bool,
    /// One JSON object per graph instead of text.
    #[arg(long)]
    pub json: bool,
}

fn ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn label_value(doc: &GraphDocument, v: usize) -> Value {
    match &doc.labels {
        Some(labels) => Value::String(labels[v].clone()),
        None => Value::from(v),
    }
}

enum OracleOutcome {
    Agree,
    Skipped,
}

pub fn run(args: &SolveArgs) -> anyhow::Result<()> {
    let docs = read_documents(&args.input, args.format)?;
    for doc in &docs {
        let report = solve_one(args, doc)?;
        print!("{report}");
    }
    Ok(())
}

fn solve_one(args: &SolveArgs, doc: &GraphDocument) -> anyhow::Result<String> {
    let graph = &doc.graph;
    let n = graph.order();

    let start = Instant::now();
    let solution = solve(graph);
    let solve_ms = ms(start);
    let chi_nested = solution.chi_nested();

    let chi = args.chi.then(|| {
        let start = Instant::now();
        (chromatic_number(graph), ms(start))
    });

    let oracle = if args.oracle {
        let start = Instant::now();
        let outcome = match brute_force_nested_chromatic(graph, args.oracle_cap) {
            Ok(value) if value == chi_nested => OracleOutcome::Agree,
            Ok(value) => {
                return Err(OracleMismatch {
                    solver: chi_nested,
                    oracle: value,
                }
                .into())
            }
            Err(_) => OracleOutcome::Skipped,
        };
        Some((outcome, ms(start)))
    } else {
        None
    };

    let classes = &solution.coloring.classes;
    let duplicates: Vec<&Vec<usize>> = solution.mapping.classes().iter().filter(|c| c.len() > 1).collect();
    let dot = args.poset_dot.then(|| {
        solution.poset.to_dot(|p| {
            let class = &solution.mapping.classes()[solution.poset_classes[p]];
            class.iter().map(|&v| doc.label(v)).collect::<Vec<_>>().join(",")
        })
    });

    if args.json {
        let labels = |vs: &[usize]| Value::Array(vs.iter().map(|&v| label_value(doc, v)).collect());
        let mut timings = json!({ "solve": solve_ms });
        let mut out = json!({
            "n": n,
            "chi_nested": chi_nested,
            "classes": classes.iter().map(|c| labels(c)).collect::<Vec<_>>(),
            "duplicate_classes": duplicates.iter().map(|c| labels(c)).collect::<Vec<_>>(),
        });
        if let Some((value, t)) = chi {
            out["chi"] = json!(value);
            timings["chi"] = json!(t);
        }
        if let Some((outcome, t)) = &oracle {
            out["oracle"] = json!(match outcome {
                OracleOutcome::Agree => "agree",
                OracleOutcome::Skipped => "skipped",
            });
            timings["oracle"] = json!(t);
        }
        if let Some(dot) = &dot {
            out["poset_dot"] = json!(dot);
        }
        out["timings_ms"] = timings;
        return Ok(format!("{out}\n"));
    }

    let mut text = String::new();
    writeln!(text, "n = {n}")?;
    writeln!(text, "chi_N = {chi_nested}")?;
    if let Some((value, _)) = chi {
        writeln!(text, "chi = {value}")?;
    }
    if args.coloring {
        writeln!(text, "coloring:")?;
        for (i, class) in classes.iter().enumerate() {
            let chain: Vec<String> = class.iter().map(|&v| doc.label(v)).collect();
            writeln!(text, "  colour {}: {}", i + 1, chain.join(" >= "))?;
        }
    }
    if args.dedup {
        writeln!(text, "duplicate classes: {}", duplicates.len())?;
        for class in &duplicates {
            let names: Vec<String> = class.iter().map(|&v| doc.label(v)).collect();
            writeln!(text, "  {{{}}}", names.join(", "))?;
        }
    }
    if let Some(dot) = &dot {
        text.push_str(dot);
    }
    match &oracle {
        Some((OracleOutcome::Agree, _)) => writeln!(text, "oracle: agree")?,
        Some((OracleOutcome::Skipped, _)) => {
            writeln!(text, "oracle: skipped (n = {n} exceeds cap {})", args.oracle_cap)?
        }
        None => {}
    }
    Ok(text)
}
