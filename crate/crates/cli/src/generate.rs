use clap::{Args, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use nestchroma::constructions::{self as family, Product};
use nestchroma::formats::{write_edge_list, write_graph6};
use nestchroma::Graph;

use crate::input::graph_argument;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Graph6,
    EdgeList,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[command(subcommand)]
    pub family: Family,
    #[arg(long, value_enum, default_value = "graph6", global = true)]
    pub output: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProductKind {
    Direct,
    Cartesian,
    Strong,
    Composition,
}

/// Graphs given as graph6 strings or file paths.
#[derive(Debug, Subcommand)]
pub enum Family {
    Complete {
        #[arg(long)]
        n: usize,
    },
    /// Complete multipartite graph, e.g. `--parts 2,3,3`.
    CompleteMultipartite {
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<usize>,
    },
    Turan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    Cycle {
        #[arg(long)]
        n: usize,
    },
    Anticycle {
        #[arg(long)]
        n: usize,
    },
    Path {
        #[arg(long)]
        n: usize,
    },
    /// `K_{1,n}`.
    Star {
        #[arg(long)]
        n: usize,
    },
    /// `C_n` plus a hub.
    Wheel {
        #[arg(long)]
        n: usize,
    },
    /// `n` copies of `K_k` joined to one hub.
    Windmill {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    Petersen,
    Kneser {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    Cube {
        #[arg(long)]
        n: usize,
    },
    /// `K_{n,n}` minus a perfect matching.
    Crown {
        #[arg(long)]
        n: usize,
    },
    /// `G_{a₁..a_r;s}`, e.g. `--a 4,3,3,1 --s 5`.
    NestedBipartite {
        #[arg(long, value_delimiter = ',', required = true)]
        a: Vec<usize>,
        #[arg(long)]
        s: usize,
    },
    /// Threshold graph from a script of `i` (isolated) and `d` (dominating) steps.
    Threshold {
        #[arg(long)]
        script: String,
    },
    /// Iterated Mycielskian of `--of` (default `K_2`), or `M_k` with `--k`.
    Mycielski {
        #[arg(long, conflicts_with = "k")]
        of: Option<String>,
        #[arg(long, default_value_t = 1, conflicts_with = "k")]
        times: usize,
        #[arg(long)]
        k: Option<usize>,
    },
    Product {
        #[arg(long, value_enum)]
        kind: ProductKind,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    Join {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    Union {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    Complement {
        #[arg(long)]
        of: String,
    },
    /// Connected planar graph on `n` vertices with `χ_N = k`.
    Planar {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Erdős–Rényi `G(n, p)`.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn arg_graph(value: &str) -> anyhow::Result<Graph> {
    Ok(graph_argument(value)?.graph)
}

pub fn build(family: &Family) -> anyhow::Result<Graph> {
    let graph = match family {
        Family::Complete { n } => family::complete(*n),
        Family::CompleteMultipartite { parts } => family::complete_multipartite(parts)?,
        Family::Turan { n, r } => family::turan(*n, *r)?,
        Family::Cycle { n } => family::cycle(*n)?,
        Family::Anticycle { n } => family::anticycle(*n)?,
        Family::Path { n } => family::path(*n)?,
        Family::Star { n } => family::star(*n)?,
        Family::Wheel { n } => family::wheel(*n)?,
        Family::Windmill { k, n } => family::windmill(*k, *n)?,
        Family::Petersen => family::petersen(),
        Family::Kneser { n, k } => family::kneser(*n, *k)?,
        Family::Cube { n } => family::cube(*n)?,
        Family::Crown { n } => family::crown(*n)?,
        Family::NestedBipartite { a, s } => family::nested_bipartite(a, *s)?,
        Family::Threshold { script } => family::threshold(&family::parse_threshold_script(script)?)?,
        Family::Mycielski { of, times, k } => match k {
            Some(k) => family::mycielski_graph(*k)?,
            None => {
                let mut g = match of {
                    Some(text) => arg_graph(text)?,
                    None => family::complete(2),
                };
                for _ in 0..*times {
                    g = family::mycielski(&g);
                }
                g
            }
        },
        Family::Product { kind, left, right } => {
            let kind = match kind {
                ProductKind::Direct => Product::Direct,
                ProductKind::Cartesian => Product::Cartesian,
                ProductKind::Strong => Product::Strong,
                ProductKind::Composition => Product::Composition,
            };
            family::product(kind, &arg_graph(left)?, &arg_graph(right)?)
        }
        Family::Join { left, right } => family::join(&arg_graph(left)?, &arg_graph(right)?),
        Family::Union { left, right } => family::disjoint_union(&arg_graph(left)?, &arg_graph(right)?),
        Family::Complement { of } => arg_graph(of)?.complement(),
        Family::Planar { n, k } => family::planar_witness(*n, *k)?,
        Family::Random { n, p, seed } => {
            anyhow::ensure!((0.0..=1.0).contains(p), "random: p must lie in [0, 1], got {p}");
            family::erdos_renyi(*n, *p, &mut ChaCha8Rng::seed_from_u64(*seed))
        }
    };
    Ok(graph)
}

pub fn run(args: &GenerateArgs) -> anyhow::Result<()> {
    let graph = build(&args.family)?;
    match args.output {
        OutputFormat::Graph6 => println!("{}", write_graph6(&graph)),
        OutputFormat::EdgeList => print!("{}", write_edge_list(&graph, None)),
    }
    Ok(())
}
