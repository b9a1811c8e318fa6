//! Quotient of a graph by the duplicate relation.

use std::collections::HashMap;

use crate::graph::{Graph, GraphBuilder};

/// The surjection `V(G) → V(G⋆)` together with `G⋆` itself.
///
/// Classes are numbered by their smallest member, and each class's
/// representative is that smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DedupMapping {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    image: Graph,
}

impl DedupMapping {
    /// Duplicate classes, each sorted ascending.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// The class index of vertex `v`.
    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn representative(&self, class: usize) -> usize {
        self.classes[class][0]
    }

    /// The de-duplicate graph `G⋆`; vertex `i` stands for `classes()[i]`.
    pub fn image(&self) -> &Graph {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }
}

/// Computes the duplicate classes of `graph` and the de-duplicate graph.
pub fn dedup(graph: &Graph) -> DedupMapping {
    let n = graph.order();
    let mut index = HashMap::with_capacity(n);
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = Vec::with_capacity(n);
    for v in 0..n {
        let next = classes.len();
        let c = *index.entry(graph.neighbours(v)).or_insert(next);
        if c == next {
            classes.push(Vec::new());
        }
        classes[c].push(v);
        class_of.push(c);
    }
    let mut builder = GraphBuilder::new(classes.len());
    for (i, ci) in classes.iter().enumerate() {
        for (j, cj) in classes.iter().enumerate().skip(i + 1) {
            if graph.has_edge(ci[0], cj[0]) {
                builder.add_edge(i, j);
            }
        }
    }
    DedupMapping {
        classes,
        class_of,
        image: builder.build(),
    }
}
