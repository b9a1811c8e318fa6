//! Finite simple graphs stored as neighbour bitsets.

use std::collections::VecDeque;

use thiserror::Error;

use crate::bitset::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
}

/// An immutable finite simple graph on the vertices `0..n`.
///
/// Rows are symmetric and irreflexive; every constructor checks or
/// guarantees both.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Mutable edge accumulator used by constructors that already know their
/// edges are valid.
pub(crate) struct GraphBuilder {
    adj: Vec<VertexSet>,
}

impl GraphBuilder {
    pub(crate) fn new(n: usize) -> Self {
        GraphBuilder {
            adj: (0..n).map(|_| VertexSet::new(n)).collect(),
        }
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v, "loop at {u}");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub(crate) fn build(self) -> Graph {
        Graph {
            n: self.adj.len(),
            adj: self.adj,
        }
    }
}

impl Graph {
    /// Builds a graph from an edge list. Repeated pairs collapse to one edge.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut builder = GraphBuilder::new(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            builder.add_edge(u, v);
        }
        Ok(builder.build())
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        GraphBuilder::new(n).build()
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// The open neighbourhood `N(v)`.
    #[inline]
    pub fn neighbours(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn open_neighbourhood(&self, v: usize) -> VertexSet {
        self.adj[v].clone()
    }

    /// The closed neighbourhood `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighbourhood(&self, v: usize) -> VertexSet {
        let mut set = self.adj[v].clone();
        set.insert(v);
        set
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.adj[v].is_empty()
    }

    pub fn has_isolated_vertices(&self) -> bool {
        (0..self.n).any(|v| self.is_isolated(v))
    }

    /// `u` is a weak duplicate of `v` when `N(u) ⊆ N(v)`.
    #[inline]
    pub fn is_weak_duplicate(&self, u: usize, v: usize) -> bool {
        self.adj[u].is_subset(&self.adj[v])
    }

    #[inline]
    pub fn are_duplicates(&self, u: usize, v: usize) -> bool {
        self.adj[u] == self.adj[v]
    }

    pub fn is_duplicate_free(&self) -> bool {
        let mut seen = std::collections::HashSet::with_capacity(self.n);
        self.adj.iter().all(|row| seen.insert(row))
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    pub fn complement(&self) -> Graph {
        let mut builder = GraphBuilder::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    builder.add_edge(u, v);
                }
            }
        }
        builder.build()
    }

    /// The subgraph induced on `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        if let Some(&vertex) = vertices.iter().find(|&&v| v >= self.n) {
            return Err(GraphError::VertexOutOfRange { vertex, n: self.n });
        }
        let mut builder = GraphBuilder::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if u == v {
                    return Err(GraphError::Loop(u));
                }
                if self.has_edge(u, v) {
                    builder.add_edge(i, j);
                }
            }
        }
        Ok(builder.build())
    }

    /// `G − v`, with the vertices above `v` shifted down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Relabels so that old vertex `order[i]` becomes vertex `i`.
    pub fn permuted(&self, order: &[usize]) -> Graph {
        assert_eq!(order.len(), self.n, "permutation length mismatch");
        self.induced_subgraph(order).expect("order is a permutation")
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for w in self.adj[u].iter() {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The graph on zero vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Degree-1 vertices.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// `ℓ′(G)`: the number of duplicate classes that contain a leaf.
    pub fn leaf_classes(&self) -> usize {
        // Two leaves are duplicates exactly when they hang off the same vertex.
        let mut anchors: Vec<usize> = self
            .leaves()
            .into_iter()
            .map(|v| self.adj[v].first().expect("leaf has a neighbour"))
            .collect();
        anchors.sort_unstable();
        anchors.dedup();
        anchors.len()
    }

    /// `Some(d)` when every vertex has degree `d`. `None` for the empty graph.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    /// Length of a shortest cycle; `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for root in 0..self.n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                    break;
                }
                for w in self.adj[u].iter() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// A proper 2-colouring (`false`/`true` per vertex) when one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let s = side[u].expect("queued vertices are coloured");
                for w in self.adj[u].iter() {
                    match side[w] {
                        None => {
                            side[w] = Some(!s);
                            queue.push_back(w);
                        }
                        Some(t) if t == s => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.expect("all visited")).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// No induced diamond and no induced `C₄`.
    ///
    /// Uses the common-neighbour characterisation: every nonadjacent pair has
    /// at most one common neighbour. Adjacent pairs are also scanned for two
    /// nonadjacent common neighbours, which is the diamond seen from its
    /// central edge.
    pub fn is_diamond_c4_free(&self) -> bool {
        for u in 0..self.n {
            for v in u + 1..self.n {
                let mut common = self.adj[u].clone();
                common.intersect_with(&self.adj[v]);
                if !self.has_edge(u, v) {
                    if common.len() > 1 {
                        return false;
                    }
                } else {
                    let members = common.to_vec();
                    for (i, &a) in members.iter().enumerate() {
                        if members[i + 1..].iter().any(|&b| !self.has_edge(a, b)) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}
