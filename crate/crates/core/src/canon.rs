//! Canonical labelling of small graphs.
//!
//! The canonical code of a graph is the lexicographically smallest upper
//! triangle bit string, in graph6 column order, over the labellings reached by
//! an individualise-and-refine search. Refinement is the iterated
//! degree-partition (equitable) refinement; subtrees whose leaves are images of
//! already explored leaves under a known automorphism are skipped.

use crate::graph::Graph;

/// Largest order the `u128` code can hold.
pub const CANON_MAX_ORDER: usize = 16;

/// Canonical code of a graph. Orders first by vertex count, then by bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    n: u8,
    bits: u128,
}

impl CanonicalCode {
    pub(crate) fn from_parts(n: usize, bits: u128) -> Self {
        CanonicalCode { n: n as u8, bits }
    }

    pub fn order(&self) -> usize {
        usize::from(self.n)
    }

    /// Upper-triangle bits, first graph6 bit most significant.
    pub fn bits(&self) -> u128 {
        self.bits
    }

    /// The graph with this code in canonical labelling.
    pub fn to_graph(&self) -> Graph {
        let adj = decode(self.order(), self.bits);
        masks_to_graph(&adj)
    }
}

/// Adjacency rows as bitmasks.
pub(crate) type Masks = Vec<u16>;

pub(crate) fn graph_to_masks(graph: &Graph) -> Masks {
    assert!(
        graph.order() <= CANON_MAX_ORDER,
        "canonical labelling supports at most {CANON_MAX_ORDER} vertices"
    );
    (0..graph.order())
        .map(|v| graph.neighbours(v).iter().fold(0u16, |m, w| m | 1 << w))
        .collect()
}

pub(crate) fn masks_to_graph(adj: &[u16]) -> Graph {
    let n = adj.len();
    let edges = (0..n).flat_map(|u| (u + 1..n).filter(move |&v| adj[u] >> v & 1 == 1).map(move |v| (u, v)));
    Graph::new(n, edges).expect("masks describe a simple graph")
}

fn triangle_len(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn encode(adj: &[u16], order: &[usize]) -> u128 {
    let n = order.len();
    let mut bits = 0u128;
    for j in 1..n {
        let row = adj[order[j]];
        for &oi in &order[..j] {
            bits = bits << 1 | u128::from(row >> oi & 1);
        }
    }
    bits
}

pub(crate) fn decode(n: usize, bits: u128) -> Masks {
    let mut adj = vec![0u16; n];
    let mut k = triangle_len(n);
    for j in 1..n {
        for i in 0..j {
            k -= 1;
            if bits >> k & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

fn members(mask: u16) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

/// Splits cells by neighbour counts into each cell until the ordered
/// partition is equitable.
fn refine(adj: &[u16], cells: &mut Vec<u16>) {
    let n = adj.len();
    let mut next = Vec::with_capacity(n);
    loop {
        let mut changed = false;
        let mut si = 0;
        while si < cells.len() && cells.len() < n {
            let splitter = cells[si];
            next.clear();
            for &cell in cells.iter() {
                if cell.count_ones() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut groups = [0u16; CANON_MAX_ORDER + 1];
                for v in members(cell) {
                    groups[(adj[v] & splitter).count_ones() as usize] |= 1 << v;
                }
                let before = next.len();
                next.extend(groups.iter().copied().filter(|&g| g != 0));
                changed |= next.len() - before > 1;
            }
            std::mem::swap(cells, &mut next);
            si += 1;
        }
        if !changed || cells.len() == n {
            return;
        }
    }
}

struct Search<'a> {
    adj: &'a [u16],
    best: Option<(u128, Vec<usize>)>,
    // Each generator maps v to gens[k][v].
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn orbit(&self, start: usize, fixed: &[usize]) -> u16 {
        let active: Vec<&Vec<usize>> = self
            .generators
            .iter()
            .filter(|g| fixed.iter().all(|&p| g[p] == p))
            .collect();
        let mut orbit = 1u16 << start;
        let mut frontier = orbit;
        while frontier != 0 {
            let mut grown = 0u16;
            for v in members(frontier) {
                for g in &active {
                    grown |= 1 << g[v];
                }
            }
            frontier = grown & !orbit;
            orbit |= grown;
        }
        orbit
    }

    fn run(&mut self, mut cells: Vec<u16>, prefix: &mut Vec<usize>) {
        refine(self.adj, &mut cells);
        let n = self.adj.len();
        if cells.len() == n {
            let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
            let code = encode(self.adj, &order);
            match &self.best {
                Some((best, _)) if code > *best => {}
                Some((best, best_order)) if code == *best => {
                    let mut g = vec![0; n];
                    for (&from, &to) in best_order.iter().zip(&order) {
                        g[from] = to;
                    }
                    if g.iter().enumerate().any(|(i, &x)| i != x) {
                        self.generators.push(g);
                    }
                }
                _ => self.best = Some((code, order)),
            }
            return;
        }
        let target = cells
            .iter()
            .position(|c| c.count_ones() > 1)
            .expect("a non-discrete partition has a non-singleton cell");
        let cell = cells[target];
        let mut explored = 0u16;
        for v in members(cell) {
            if self.orbit(v, prefix) & explored != 0 {
                continue;
            }
            explored |= 1 << v;
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1 << v);
            child.push(cell & !(1 << v));
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(v);
            self.run(child, prefix);
            prefix.pop();
        }
    }
}

/// Returns the canonical code and `order`, where `order[i]` is the vertex
/// receiving canonical label `i`.
pub(crate) fn canonical_masks(adj: &[u16]) -> (CanonicalCode, Vec<usize>) {
    let n = adj.len();
    assert!(n <= CANON_MAX_ORDER);
    // Transposing two twins is always an automorphism.
    let mut generators = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let strip = !(1u16 << u | 1u16 << v);
            if adj[u] & strip == adj[v] & strip {
                let mut g: Vec<usize> = (0..n).collect();
                g.swap(u, v);
                generators.push(g);
            }
        }
    }
    let mut search = Search {
        adj,
        best: None,
        generators,
    };
    let all = if n == 0 { vec![] } else { vec![(((1u32 << n) - 1) as u16)] };
    search.run(all, &mut Vec::new());
    let (bits, order) = search.best.unwrap_or((0, Vec::new()));
    (CanonicalCode { n: n as u8, bits }, order)
}

/// Canonical code of `graph`.
///
/// # Panics
/// If the graph has more than [`CANON_MAX_ORDER`] vertices.
pub fn canonical_code(graph: &Graph) -> CanonicalCode {
    canonical_masks(&graph_to_masks(graph)).0
}

/// `graph` relabelled canonically, with `order[i]` the original vertex now
/// labelled `i`.
pub fn canonical_form(graph: &Graph) -> (Graph, Vec<usize>) {
    let (_, order) = canonical_masks(&graph_to_masks(graph));
    (graph.permuted(&order), order)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order() && g.edge_count() == h.edge_count() && canonical_code(g) == canonical_code(h)
}
