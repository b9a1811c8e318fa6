//! Isomorph-free generation of small graphs and the exhaustive experiments
//! built on it.
//!
//! Graphs on `n` vertices are produced from the representatives on `n − 1`
//! vertices by adding a vertex adjacent to every possible subset and keeping
//! one child per canonical code. Results are sorted by canonical code, so
//! output order does not depend on the number of worker threads.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::canon::{canonical_masks, decode, CanonicalCode};
use crate::chromatic::chromatic_number;
use crate::constructions::{planar_witness, ConstructionError};
use crate::formats::write_graph6;
use crate::graph::Graph;
use crate::nested::nested_chromatic_number;
use crate::poset::{weak_duplicate_poset, Poset};

/// Largest order [`generate_graphs`] accepts.
pub const GENERATION_CAP: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("n = {n} exceeds the generation cap of {cap}")]
    AboveCap { n: usize, cap: usize },
    #[error("empty order range {min}..={max}")]
    InvalidBounds { min: usize, max: usize },
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

pub type Result<T> = std::result::Result<T, EnumerationError>;

/// Which graphs to generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphClassFilter {
    pub connected_only: bool,
    pub bipartite_only: bool,
    pub min_order: usize,
    pub max_order: usize,
}

impl GraphClassFilter {
    /// All graphs on exactly `n` vertices.
    pub fn order(n: usize) -> Self {
        Self::orders(n, n)
    }

    /// All graphs with between `min` and `max` vertices.
    pub fn orders(min: usize, max: usize) -> Self {
        GraphClassFilter {
            connected_only: false,
            bipartite_only: false,
            min_order: min,
            max_order: max,
        }
    }

    pub fn connected(mut self) -> Self {
        self.connected_only = true;
        self
    }

    pub fn bipartite(mut self) -> Self {
        self.bipartite_only = true;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.min_order > self.max_order {
            return Err(EnumerationError::InvalidBounds {
                min: self.min_order,
                max: self.max_order,
            });
        }
        if self.max_order > GENERATION_CAP {
            return Err(EnumerationError::AboveCap {
                n: self.max_order,
                cap: GENERATION_CAP,
            });
        }
        Ok(())
    }
}

fn masks_bipartite(adj: &[u16]) -> bool {
    let n = adj.len();
    let mut side = vec![u8::MAX; n];
    for root in 0..n {
        if side[root] != u8::MAX {
            continue;
        }
        side[root] = 0;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            let mut m = adj[v];
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                m &= m - 1;
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    stack.push(w);
                } else if side[w] == side[v] {
                    return false;
                }
            }
        }
    }
    true
}

fn masks_connected(adj: &[u16]) -> bool {
    let n = adj.len();
    if n <= 1 {
        return true;
    }
    let full = ((1u32 << n) - 1) as u16;
    let mut seen = 1u16;
    let mut frontier = 1u16;
    while frontier != 0 {
        let mut next = 0u16;
        let mut m = frontier;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            next |= adj[v];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == full
}

/// Canonical codes of the next level: every one-vertex extension of `parents`.
fn extend_level(n: usize, parents: &[u128], bipartite_only: bool) -> Vec<u128> {
    let codes: HashSet<u128> = parents
        .par_iter()
        .fold(HashSet::new, |mut acc, &parent| {
            let mut adj = decode(n - 1, parent);
            adj.push(0);
            for subset in 0u16..1 << (n - 1) {
                for (v, row) in adj[..n - 1].iter_mut().enumerate() {
                    *row = (*row & !(1 << (n - 1))) | ((subset >> v & 1) << (n - 1));
                }
                adj[n - 1] = subset;
                if bipartite_only && !masks_bipartite(&adj) {
                    continue;
                }
                acc.insert(canonical_masks(&adj).0.bits());
            }
            acc
        })
        .reduce(HashSet::new, |mut a, b| {
            if a.len() < b.len() {
                return b.into_iter().chain(a).collect();
            }
            a.extend(b);
            a
        });
    let mut codes: Vec<u128> = codes.into_iter().collect();
    codes.sort_unstable();
    codes
}

/// Canonical codes of every graph matching `filter`, by order then code.
pub fn generate_codes(filter: &GraphClassFilter) -> Result<Vec<CanonicalCode>> {
    filter.validate()?;
    let mut out = Vec::new();
    let mut level: Vec<u128> = vec![0];
    for n in 0..=filter.max_order {
        if n > 0 {
            level = extend_level(n, &level, filter.bipartite_only);
        }
        if n < filter.min_order {
            continue;
        }
        for &bits in &level {
            let code = CanonicalCode::from_parts(n, bits);
            if !filter.connected_only || masks_connected(&decode(n, bits)) {
                out.push(code);
            }
        }
    }
    Ok(out)
}

/// One representative per isomorphism class matching `filter`, each in its
/// canonical labelling, ordered by vertex count and then canonical code.
pub fn generate_graphs(filter: &GraphClassFilter) -> Result<Vec<Graph>> {
    Ok(generate_codes(filter)?.iter().map(CanonicalCode::to_graph).collect())
}

/// The triple `(#V(G), χ(G), χ_N(G))` with one witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripleRecord {
    pub n: usize,
    pub chi: usize,
    pub chi_n: usize,
    /// graph6 of the first graph (in input order) attaining the pair.
    pub witness: Option<String>,
    /// graph6 of the first connected graph attaining the pair.
    pub connected_witness: Option<String>,
    /// How many input graphs attain the pair.
    pub graphs: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripleReport {
    pub n: usize,
    pub graphs: usize,
    /// Realized pairs sorted by `(chi, chi_n)`.
    pub realized: Vec<TripleRecord>,
    /// Pairs `1 ≤ chi ≤ chi_n ≤ n` with no witness among the input graphs.
    pub gaps: Vec<(usize, usize)>,
}

/// Whether the classification theorem rules out a graph on `n` vertices with
/// `χ = c` and `χ_N = s`, for `1 ≤ c ≤ s ≤ n`.
pub fn theorem_excludes(n: usize, c: usize, s: usize) -> bool {
    (c == 1 && s > 1)
        || (c == 2 && s == 3)
        || (c == 2 && matches!((n, s), (4, 4) | (5, 5) | (6, 5) | (7, 7)))
        || (c + 1 == n && s == n)
}

/// Pairs `1 ≤ c ≤ s ≤ n` excluded by [`theorem_excludes`].
pub fn theorem_gaps(n: usize) -> Vec<(usize, usize)> {
    (1..=n)
        .flat_map(|c| (c..=n).map(move |s| (c, s)))
        .filter(|&(c, s)| theorem_excludes(n, c, s))
        .collect()
}

/// Tallies `(χ, χ_N)` over graphs that all have `n` vertices.
pub fn classify_graphs(n: usize, graphs: &[Graph]) -> TripleReport {
    let pairs: Vec<(usize, usize)> = graphs
        .par_iter()
        .map(|g| {
            debug_assert_eq!(g.order(), n);
            (chromatic_number(g), nested_chromatic_number(g).0)
        })
        .collect();
    let mut table: Vec<Vec<Option<TripleRecord>>> = vec![vec![None; n + 1]; n + 1];
    for (g, &(chi, chi_n)) in graphs.iter().zip(&pairs) {
        let rec = table[chi][chi_n].get_or_insert_with(|| TripleRecord {
            n,
            chi,
            chi_n,
            witness: Some(write_graph6(g)),
            connected_witness: None,
            graphs: 0,
        });
        rec.graphs += 1;
        if rec.connected_witness.is_none() && g.is_connected() {
            rec.connected_witness = Some(write_graph6(g));
        }
    }
    let realized: Vec<TripleRecord> = table.iter().flatten().flatten().cloned().collect();
    let gaps = (1..=n)
        .flat_map(|c| (c..=n).map(move |s| (c, s)))
        .filter(|&(c, s)| table[c][s].is_none())
        .collect();
    TripleReport {
        n,
        graphs: graphs.len(),
        realized,
        gaps,
    }
}

/// Realized `(χ, χ_N)` pairs over all graphs on `n` vertices.
pub fn classify_triples(n: usize) -> Result<TripleReport> {
    let graphs = generate_graphs(&GraphClassFilter::order(n))?;
    Ok(classify_graphs(n, &graphs))
}

/// A duplicate-free graph on `P.len()` vertices whose weak-duplicate poset is
/// isomorphic to `P`, if one exists on at most `max_n` vertices.
///
/// Every vertex of a duplicate-free graph is an element of its poset, so only
/// graphs on exactly `P.len()` vertices are searched; `None` is an exhaustive
/// negative.
pub fn poset_realizability(poset: &Poset, max_n: usize) -> Result<Option<Graph>> {
    let m = poset.len();
    if m > max_n {
        return Ok(None);
    }
    let graphs = generate_graphs(&GraphClassFilter::order(m))?;
    Ok(graphs.into_iter().find(|g| {
        g.is_duplicate_free()
            && weak_duplicate_poset(g).is_ok_and(|p| p.is_isomorphic(poset))
    }))
}

/// Per-order summary of `χ_N(G) + χ_N(Ḡ) − #V(G)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplementRow {
    pub n: usize,
    pub graphs: usize,
    pub min_slack: i64,
    /// graph6 of the first graph attaining `min_slack`.
    pub witness: String,
    /// Graphs with negative slack.
    pub negative: usize,
}

/// Complement slack statistics over `graphs`, grouped by order.
pub fn complement_scan_graphs(graphs: &[Graph]) -> Vec<ComplementRow> {
    let slacks: Vec<i64> = graphs
        .par_iter()
        .map(|g| {
            let a = nested_chromatic_number(g).0 as i64;
            let b = nested_chromatic_number(&g.complement()).0 as i64;
            a + b - g.order() as i64
        })
        .collect();
    let mut rows: Vec<ComplementRow> = Vec::new();
    for (g, &slack) in graphs.iter().zip(&slacks) {
        let n = g.order();
        let row = match rows.iter_mut().find(|r| r.n == n) {
            Some(row) => row,
            None => {
                rows.push(ComplementRow {
                    n,
                    graphs: 0,
                    min_slack: slack,
                    witness: write_graph6(g),
                    negative: 0,
                });
                rows.last_mut().expect("just pushed")
            }
        };
        row.graphs += 1;
        if slack < row.min_slack {
            row.min_slack = slack;
            row.witness = write_graph6(g);
        }
        row.negative += usize::from(slack < 0);
    }
    rows.sort_by_key(|r| r.n);
    rows
}

/// Complement slack over every graph with `1..=max_n` vertices.
pub fn complement_conjecture_scan(max_n: usize) -> Result<Vec<ComplementRow>> {
    let graphs = generate_graphs(&GraphClassFilter::orders(1.min(max_n), max_n))?;
    Ok(complement_scan_graphs(&graphs))
}

/// Sequences `a₁ ≥ … ≥ a_r ≥ 1` with `a₁ = s` and `r + s = n`, returned as
/// `(a, s)`. Each describes a connected `G_{a₁..a_r;s}`.
pub fn connected_nested_sequences(n: usize) -> Vec<(Vec<usize>, usize)> {
    fn fill(prefix: &mut Vec<usize>, r: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == r {
            out.push(prefix.clone());
            return;
        }
        let top = *prefix.last().expect("prefix starts with s");
        for a in (1..=top).rev() {
            prefix.push(a);
            fill(prefix, r, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for r in 1..n {
        let s = n - r;
        let mut seqs = Vec::new();
        fill(&mut vec![s], r, &mut seqs);
        out.extend(seqs.into_iter().map(|a| (a, s)));
    }
    out
}

/// The sequence of the same graph with the two sides swapped:
/// `b_j = #{i : a_i ≥ j}` for `j = 1..=s`.
pub fn conjugate_sequence(a: &[usize], s: usize) -> Vec<usize> {
    (1..=s).map(|j| a.iter().filter(|&&x| x >= j).count()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BipartiteCount {
    pub n: usize,
    /// Sequences modulo swapping the sides.
    pub by_sequences: usize,
    /// Connected bipartite graphs with `χ_N = 2` among the generated graphs.
    pub by_generation: usize,
    /// Duplicate-free bipartite graphs with `χ_N = 2`, connected or not.
    pub duplicate_free: usize,
}

/// Connected colour-nested bipartite graphs on `n` vertices, counted two ways.
pub fn count_colour_nested_bipartite(n: usize) -> Result<BipartiteCount> {
    let seqs = connected_nested_sequences(n);
    let self_conjugate = seqs
        .iter()
        .filter(|(a, s)| a.len() == *s && conjugate_sequence(a, *s) == *a)
        .count();
    let by_sequences = (seqs.len() + self_conjugate) / 2;

    let graphs = generate_graphs(&GraphClassFilter::order(n).bipartite())?;
    let nested: Vec<&Graph> = graphs
        .par_iter()
        .filter(|g| nested_chromatic_number(g).0 == 2)
        .collect();
    Ok(BipartiteCount {
        n,
        by_sequences,
        by_generation: nested.iter().filter(|g| g.is_connected()).count(),
        duplicate_free: nested.iter().filter(|g| g.is_duplicate_free()).count(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarWitness {
    pub k: usize,
    pub graph: Graph,
    pub chi_nested: usize,
}

/// For each `2 ≤ k ≤ n`, the connected planar graph on `n` vertices with
/// `χ_N = k`: `K_k` (k ≤ 4) or `C_k` (k ≥ 5) with pendant vertices.
pub fn planar_sweep(n: usize) -> Result<Vec<PlanarWitness>> {
    (2..=n)
        .map(|k| {
            let graph = planar_witness(n, k)?;
            let chi_nested = nested_chromatic_number(&graph).0;
            Ok(PlanarWitness { k, graph, chi_nested })
        })
        .collect()
}
