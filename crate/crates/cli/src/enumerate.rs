use std::collections::BTreeMap;

use anyhow::{bail, ensure};
use clap::{Args, ValueEnum};
use serde_json::json;

use nestchroma::enumeration::{
    classify_graphs, complement_scan_graphs, count_colour_nested_bipartite, generate_graphs, planar_sweep,
    poset_realizability, theorem_excludes, theorem_gaps, GraphClassFilter, TripleReport,
};
use nestchroma::formats::write_graph6;
use nestchroma::{Graph, Poset};

use crate::input::{read_documents, InputFormat, ParseFailure};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Experiment {
    /// Print the graphs themselves.
    List,
    /// Realized and missing (χ, χ_N) pairs per order.
    Triples,
    /// Minimum of χ_N(G) + χ_N(Ḡ) − n per order.
    Conjecture,
    /// Connected colour-nested bipartite graphs, counted two ways.
    BipartiteCount,
    /// Connected planar witnesses for every χ_N = k.
    Planar,
    /// Search for a graph whose weak-duplicate poset matches `--poset`.
    Realizability,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Csv,
    Json,
    /// One graph6 line per graph (list only).
    Graph6,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    /// Largest vertex count.
    #[arg(long)]
    pub n: usize,
    /// Smallest vertex count; defaults to `--n`.
    #[arg(long)]
    pub min_n: Option<usize>,
    #[arg(long)]
    pub connected: bool,
    #[arg(long)]
    pub bipartite: bool,
    #[arg(long, value_enum, default_value = "list")]
    pub experiment: Experiment,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: ReportFormat,
    /// Read graphs from a graph6 file instead of generating them.
    #[arg(long)]
    pub input: Option<String>,
    /// Strict relations `p<q`, comma separated, e.g. `0<1,0<2,0<3`.
    #[arg(long)]
    pub poset: Option<String>,
    /// Number of poset elements; defaults to one more than the largest index.
    #[arg(long)]
    pub poset_size: Option<usize>,
}

impl EnumerateArgs {
    fn min_n(&self) -> usize {
        self.min_n.unwrap_or(self.n)
    }
}

fn graphs(args: &EnumerateArgs) -> anyhow::Result<Vec<Graph>> {
    let (min, max) = (args.min_n(), args.n);
    ensure!(min <= max, "--min-n {min} exceeds --n {max}");
    match &args.input {
        Some(path) => Ok(read_documents(path, InputFormat::Graph6)?
            .into_iter()
            .map(|d| d.graph)
            .filter(|g| (min..=max).contains(&g.order()))
            .filter(|g| !args.connected || g.is_connected())
            .filter(|g| !args.bipartite || g.is_bipartite())
            .collect()),
        None => {
            let mut filter = GraphClassFilter::orders(min, max);
            filter.connected_only = args.connected;
            filter.bipartite_only = args.bipartite;
            Ok(generate_graphs(&filter)?)
        }
    }
}

fn by_order(graphs: Vec<Graph>) -> BTreeMap<usize, Vec<Graph>> {
    let mut groups: BTreeMap<usize, Vec<Graph>> = BTreeMap::new();
    for g in graphs {
        groups.entry(g.order()).or_default().push(g);
    }
    groups
}

pub fn parse_poset(text: &str, size: Option<usize>) -> Result<Poset, ParseFailure> {
    let mut relations = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (p, q) = item
            .split_once('<')
            .ok_or_else(|| ParseFailure(format!("poset relation {item:?} is not of the form p<q")))?;
        let parse = |s: &str| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| ParseFailure(format!("poset element {s:?} is not an index")))
        };
        relations.push((parse(p)?, parse(q)?));
    }
    let inferred = relations.iter().map(|&(p, q)| p.max(q) + 1).max().unwrap_or(0);
    let m = size.unwrap_or(inferred);
    Poset::from_relations(m, relations).map_err(|e| ParseFailure(format!("poset: {e}")))
}

pub fn run(args: &EnumerateArgs) -> anyhow::Result<()> {
    if args.format == ReportFormat::Graph6 && args.experiment != Experiment::List {
        bail!("--format graph6 only applies to --experiment list");
    }
    match args.experiment {
        Experiment::List => list(args),
        Experiment::Triples => triples(args),
        Experiment::Conjecture => conjecture(args),
        Experiment::BipartiteCount => bipartite_count(args),
        Experiment::Planar => planar(args),
        Experiment::Realizability => realizability(args),
    }
}

fn list(args: &EnumerateArgs) -> anyhow::Result<()> {
    let graphs = graphs(args)?;
    match args.format {
        ReportFormat::Graph6 => {
            for g in &graphs {
                println!("{}", write_graph6(g));
            }
        }
        ReportFormat::Csv => {
            println!("n,edges,graph6");
            for g in &graphs {
                println!("{},{},{}", g.order(), g.edge_count(), write_graph6(g));
            }
        }
        ReportFormat::Json => {
            let rows: Vec<_> = graphs
                .iter()
                .map(|g| json!({"n": g.order(), "edges": g.edge_count(), "graph6": write_graph6(g)}))
                .collect();
            println!("{}", serde_json::to_string_pretty(&rows)?);
        }
    }
    Ok(())
}

fn triples(args: &EnumerateArgs) -> anyhow::Result<()> {
    let reports: Vec<TripleReport> = by_order(graphs(args)?)
        .into_iter()
        .map(|(n, gs)| classify_graphs(n, &gs))
        .collect();
    match args.format {
        ReportFormat::Json => {
            let rows: Vec<_> = reports
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "graphs": r.graphs,
                        "realized": r.realized,
                        "gaps": r.gaps,
                        "theorem_gaps": theorem_gaps(r.n),
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&rows)?);
        }
        _ => {
            println!("n,chi,chi_n,status,theorem,graphs,witness,connected_witness");
            for r in &reports {
                let mut rows: Vec<(usize, usize, &str, usize, &str, &str)> = r
                    .realized
                    .iter()
                    .map(|t| {
                        let witness = t.witness.as_deref().unwrap_or("");
                        let connected = t.connected_witness.as_deref().unwrap_or("");
                        (t.chi, t.chi_n, "realized", t.graphs, witness, connected)
                    })
                    .chain(r.gaps.iter().map(|&(c, s)| (c, s, "gap", 0, "", "")))
                    .collect();
                rows.sort();
                for (c, s, status, count, witness, connected) in rows {
                    let theorem = if theorem_excludes(r.n, c, s) { "excluded" } else { "allowed" };
                    println!("{},{c},{s},{status},{theorem},{count},{witness},{connected}", r.n);
                }
            }
        }
    }
    Ok(())
}

fn conjecture(args: &EnumerateArgs) -> anyhow::Result<()> {
    let rows = complement_scan_graphs(&graphs(args)?);
    let statement = "chi_N(G) + chi_N(complement of G) >= n (conjecture; scan result, not a proof)";
    match args.format {
        ReportFormat::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({"statement": statement, "rows": rows}))?
            );
        }
        _ => {
            eprintln!("{statement}");
            println!("n,graphs,min_slack,negative,witness");
            for r in &rows {
                println!("{},{},{},{},{}", r.n, r.graphs, r.min_slack, r.negative, r.witness);
            }
        }
    }
    Ok(())
}

fn bipartite_count(args: &EnumerateArgs) -> anyhow::Result<()> {
    ensure!(args.input.is_none(), "bipartite-count generates its own graphs; --input is not supported");
    let counts = (args.min_n()..=args.n)
        .map(count_colour_nested_bipartite)
        .collect::<Result<Vec<_>, _>>()?;
    let expected = |n: usize| (n >= 3 && n % 2 == 1).then(|| 1usize << (n - 3));
    match args.format {
        ReportFormat::Json => {
            let rows: Vec<_> = counts
                .iter()
                .map(|c| {
                    let mut v = serde_json::to_value(c).expect("plain struct");
                    v["odd_formula"] = json!(expected(c.n));
                    v
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&rows)?);
        }
        _ => {
            println!("n,by_sequences,by_generation,duplicate_free,odd_formula");
            for c in &counts {
                let formula = expected(c.n).map_or(String::new(), |e| e.to_string());
                println!("{},{},{},{},{formula}", c.n, c.by_sequences, c.by_generation, c.duplicate_free);
            }
        }
    }
    Ok(())
}

fn planar(args: &EnumerateArgs) -> anyhow::Result<()> {
    let mut rows = Vec::new();
    for n in args.min_n().max(2)..=args.n {
        for w in planar_sweep(n)? {
            rows.push((n, w.k, w.chi_nested, write_graph6(&w.graph)));
        }
    }
    match args.format {
        ReportFormat::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|(n, k, c, g6)| json!({"n": n, "k": k, "chi_nested": c, "graph6": g6}))
                .collect();
            println!("{}", serde_json::to_string_pretty(&rows)?);
        }
        _ => {
            println!("n,k,chi_nested,graph6");
            for (n, k, c, g6) in rows {
                println!("{n},{k},{c},{g6}");
            }
        }
    }
    Ok(())
}

fn realizability(args: &EnumerateArgs) -> anyhow::Result<()> {
    let text = args
        .poset
        .as_deref()
        .ok_or_else(|| anyhow::anyhow!("--experiment realizability needs --poset"))?;
    let poset = parse_poset(text, args.poset_size)?;
    let witness = poset_realizability(&poset, args.n)?;
    let g6 = witness.as_ref().map(write_graph6);
    match args.format {
        ReportFormat::Json => {
            let out = json!({
                "elements": poset.len(),
                "max_n": args.n,
                "realizable": witness.is_some(),
                "witness": g6,
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
        _ => {
            println!("elements,max_n,realizable,witness");
            println!(
                "{},{},{},{}",
                poset.len(),
                args.n,
                witness.is_some(),
                g6.unwrap_or_default()
            );
        }
    }
    Ok(())
}
