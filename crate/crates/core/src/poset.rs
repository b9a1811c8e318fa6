//! Finite posets, the weak-duplicate order of a graph, and Dilworth machinery.
//!
//! Width and minimum chain covers go through a maximum matching of the split
//! bipartite graph: every element `p` gets an out-copy and an in-copy, with
//! an edge `out(p) → in(q)` whenever `p < q`. A matching of size `k` glues
//! elements into `m − k` chains, and a König cover of that graph yields an
//! antichain of the same size.

use std::fmt::Write as _;

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::matching::{hopcroft_karp, konig_cover, Bipartite, Matching};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("element {element} out of range for a poset on {m} elements")]
    OutOfRange { element: usize, m: usize },
    #[error("relation is not a strict order: {0} < {0}")]
    Reflexive(usize),
    #[error("relation is not a strict order: {0} and {1} are mutually related")]
    Cycle(usize, usize),
    #[error("relation is not transitive: {0} < {1} < {2} but not {0} < {2}")]
    NotTransitive(usize, usize, usize),
    #[error("graph has duplicate vertices {0} and {1}; de-duplicate it first")]
    DuplicatePair(usize, usize),
}

/// A finite strict partial order on `0..m`; row `p` holds every `q` with `p < q`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    lt: Vec<VertexSet>,
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Poset")
            .field("m", &self.len())
            .field("covers", &self.cover_relations())
            .finish()
    }
}

/// A partition of the elements into chains, each listed in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainCover {
    pub chains: Vec<Vec<usize>>,
}

impl ChainCover {
    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }
}

impl Poset {
    /// Validates a strict order matrix (irreflexive, antisymmetric, transitive).
    pub fn from_matrix(lt: Vec<VertexSet>) -> Result<Self, PosetError> {
        let m = lt.len();
        for (p, row) in lt.iter().enumerate() {
            if let Some(element) = row.iter().find(|&q| q >= m) {
                return Err(PosetError::OutOfRange { element, m });
            }
            if row.contains(p) {
                return Err(PosetError::Reflexive(p));
            }
            for q in row.iter() {
                if lt[q].contains(p) {
                    return Err(PosetError::Cycle(p, q));
                }
                if let Some(r) = lt[q].iter().find(|&r| !row.contains(r)) {
                    return Err(PosetError::NotTransitive(p, q, r));
                }
            }
        }
        Ok(Poset { lt })
    }

    /// The transitive closure of the given relations `p < q`.
    pub fn from_relations<I>(m: usize, relations: I) -> Result<Self, PosetError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut lt: Vec<VertexSet> = (0..m).map(|_| VertexSet::new(m)).collect();
        for (p, q) in relations {
            for element in [p, q] {
                if element >= m {
                    return Err(PosetError::OutOfRange { element, m });
                }
            }
            lt[p].insert(q);
        }
        let closed = transitive_closure(lt);
        if let Some(p) = (0..m).find(|&p| closed[p].contains(p)) {
            let q = closed[p]
                .iter()
                .find(|&q| q != p && closed[q].contains(p))
                .unwrap_or(p);
            return if p == q {
                Err(PosetError::Reflexive(p))
            } else {
                Err(PosetError::Cycle(p, q))
            };
        }
        Ok(Poset { lt: closed })
    }

    pub fn antichain(m: usize) -> Self {
        Poset {
            lt: (0..m).map(|_| VertexSet::new(m)).collect(),
        }
    }

    /// The total order `0 < 1 < … < m−1`.
    pub fn chain(m: usize) -> Self {
        Poset {
            lt: (0..m)
                .map(|p| VertexSet::from_iter_with_capacity(m, p + 1..m))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.lt.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lt.is_empty()
    }

    #[inline]
    pub fn less_than(&self, p: usize, q: usize) -> bool {
        self.lt[p].contains(q)
    }

    pub fn comparable(&self, p: usize, q: usize) -> bool {
        self.less_than(p, q) || self.less_than(q, p)
    }

    /// Elements strictly above `p`.
    pub fn above(&self, p: usize) -> &VertexSet {
        &self.lt[p]
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.lt
    }

    /// The order with every relation reversed.
    pub fn dual(&self) -> Poset {
        let m = self.len();
        let mut lt: Vec<VertexSet> = (0..m).map(|_| VertexSet::new(m)).collect();
        for p in 0..m {
            for q in self.lt[p].iter() {
                lt[q].insert(p);
            }
        }
        Poset { lt }
    }

    /// Cover relations `p ⋖ q` (the Hasse diagram), sorted.
    pub fn cover_relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for p in 0..self.len() {
            let mut covers = self.lt[p].clone();
            for r in self.lt[p].iter() {
                covers.difference_with(&self.lt[r]);
            }
            out.extend(covers.iter().map(|q| (p, q)));
        }
        out
    }

    /// Graphviz rendering of the Hasse diagram, edges pointing upward.
    pub fn to_dot<F>(&self, label: F) -> String
    where
        F: Fn(usize) -> String,
    {
        let mut dot = String::from("digraph hasse {\n  rankdir=BT;\n");
        for p in 0..self.len() {
            let _ = writeln!(dot, "  {p} [label=\"{}\"];", label(p).replace('"', "\\\""));
        }
        for (p, q) in self.cover_relations() {
            let _ = writeln!(dot, "  {p} -> {q};");
        }
        dot.push_str("}\n");
        dot
    }

    /// The split bipartite graph: left `p` joined to right `q` iff `p < q`.
    pub fn split_graph(&self) -> Bipartite {
        Bipartite::new(self.len(), self.lt.iter().map(VertexSet::to_vec).collect())
    }

    pub fn max_matching(&self) -> Matching {
        hopcroft_karp(&self.split_graph())
    }

    /// A chain cover of minimum size, read off a maximum split matching.
    ///
    /// Each chain starts at an element whose in-copy is unmatched and follows
    /// matched `out → in` pairs. Chains come out ordered by their first element.
    pub fn min_chain_cover(&self) -> ChainCover {
        chains_from_matching(&self.max_matching())
    }

    /// The width together with a maximum antichain certificate.
    pub fn width(&self) -> (usize, Vec<usize>) {
        let split = self.split_graph();
        let matching = hopcroft_karp(&split);
        let (cover_out, cover_in) = konig_cover(&split, &matching);
        let antichain: Vec<usize> = (0..self.len())
            .filter(|&p| !cover_out[p] && !cover_in[p])
            .collect();
        debug_assert_eq!(antichain.len(), self.len() - matching.len());
        (self.len() - matching.len(), antichain)
    }

    /// Length (in relations) of a longest chain; `0` for antichains and the empty poset.
    pub fn height(&self) -> usize {
        // Ordering by the number of elements below is a linear extension.
        let m = self.len();
        let mut below = vec![0usize; m];
        for row in &self.lt {
            for q in row.iter() {
                below[q] += 1;
            }
        }
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&p| below[p]);
        let mut longest = vec![0usize; m];
        for &p in &order {
            for q in self.lt[p].iter() {
                longest[q] = longest[q].max(longest[p] + 1);
            }
        }
        longest.into_iter().max().unwrap_or(0)
    }

    pub fn is_antichain(&self, elements: &[usize]) -> bool {
        elements.iter().enumerate().all(|(i, &p)| {
            elements[i + 1..].iter().all(|&q| p != q && !self.comparable(p, q))
        })
    }

    pub fn is_chain_cover(&self, cover: &ChainCover) -> bool {
        let mut seen = vec![false; self.len()];
        for chain in &cover.chains {
            for (i, &p) in chain.iter().enumerate() {
                if p >= self.len() || seen[p] {
                    return false;
                }
                seen[p] = true;
                if i > 0 && !self.less_than(chain[i - 1], p) {
                    return false;
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Order isomorphism by backtracking over elements with matching
    /// up/down counts. Meant for small posets.
    pub fn is_isomorphic(&self, other: &Poset) -> bool {
        let m = self.len();
        if m != other.len() {
            return false;
        }
        let signature = |p: &Poset| -> Vec<(usize, usize)> {
            (0..m)
                .map(|x| (p.lt[x].len(), (0..m).filter(|&y| p.less_than(y, x)).count()))
                .collect()
        };
        let (sa, sb) = (signature(self), signature(other));
        let (mut a, mut b) = (sa.clone(), sb.clone());
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return false;
        }
        let mut image = vec![usize::MAX; m];
        let mut used = vec![false; m];
        self.extend_isomorphism(other, &sa, &sb, 0, &mut image, &mut used)
    }

    fn extend_isomorphism(
        &self,
        other: &Poset,
        sa: &[(usize, usize)],
        sb: &[(usize, usize)],
        x: usize,
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if x == self.len() {
            return true;
        }
        for y in 0..other.len() {
            if used[y] || sa[x] != sb[y] {
                continue;
            }
            let consistent = (0..x).all(|w| {
                self.less_than(w, x) == other.less_than(image[w], y)
                    && self.less_than(x, w) == other.less_than(y, image[w])
            });
            if !consistent {
                continue;
            }
            image[x] = y;
            used[y] = true;
            if self.extend_isomorphism(other, sa, sb, x + 1, image, used) {
                return true;
            }
            used[y] = false;
        }
        false
    }
}

fn chains_from_matching(matching: &Matching) -> ChainCover {
    let mut chains = Vec::new();
    for start in 0..matching.left_len() {
        if matching.mate_of_right(start).is_some() {
            continue;
        }
        let mut chain = vec![start];
        let mut p = start;
        while let Some(q) = matching.mate_of_left(p) {
            chain.push(q);
            p = q;
        }
        chains.push(chain);
    }
    ChainCover { chains }
}

/// Closes `lt` under transitivity (Warshall on bitset rows).
pub fn transitive_closure(mut lt: Vec<VertexSet>) -> Vec<VertexSet> {
    let m = lt.len();
    for k in 0..m {
        let row_k = lt[k].clone();
        for row in lt.iter_mut() {
            if row.contains(k) {
                row.union_with(&row_k);
            }
        }
    }
    lt
}

/// The weak-duplicate order `P_G` of a duplicate-free graph.
///
/// `p < q` iff `N(q) ⊊ N(p)`: the larger neighbourhood sits lower.
pub fn weak_duplicate_poset(graph: &Graph) -> Result<Poset, PosetError> {
    let n = graph.order();
    let mut lt: Vec<VertexSet> = (0..n).map(|_| VertexSet::new(n)).collect();
    for p in 0..n {
        for q in p + 1..n {
            let q_in_p = graph.is_weak_duplicate(q, p);
            let p_in_q = graph.is_weak_duplicate(p, q);
            match (q_in_p, p_in_q) {
                (true, true) => return Err(PosetError::DuplicatePair(p, q)),
                (true, false) => lt[p].insert(q),
                (false, true) => lt[q].insert(p),
                (false, false) => {}
            }
        }
    }
    Ok(Poset { lt })
}
