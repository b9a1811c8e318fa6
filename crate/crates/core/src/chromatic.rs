//! Exact chromatic number by branch and bound.

use crate::graph::Graph;

/// `χ(G)`.
///
/// Vertices are coloured in order of descending degree, trying colours in
/// ascending index. A greedy colouring in the same order gives the initial
/// upper bound and a greedily grown clique the lower bound; the search stops
/// as soon as the two meet. Practical up to a few dozen vertices.
pub fn chromatic_number(graph: &Graph) -> usize {
    let n = graph.order();
    if n == 0 {
        return 0;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| graph.degree(b).cmp(&graph.degree(a)).then(a.cmp(&b)));

    let lower = greedy_clique(graph, &order);
    let mut best = greedy_colouring(graph, &order);
    if best == lower {
        return best;
    }

    let mut colour = vec![usize::MAX; n];
    let mut search = Search {
        graph,
        order: &order,
        colour: &mut colour,
        best: &mut best,
        lower,
    };
    search.run(0, 0);
    best
}

fn greedy_colouring(graph: &Graph, order: &[usize]) -> usize {
    let n = graph.order();
    let mut colour = vec![usize::MAX; n];
    let mut used = 0;
    for &v in order {
        let c = (0..)
            .find(|&c| graph.neighbours(v).iter().all(|w| colour[w] != c))
            .expect("some colour is free");
        colour[v] = c;
        used = used.max(c + 1);
    }
    used
}

fn greedy_clique(graph: &Graph, order: &[usize]) -> usize {
    let mut best = 0;
    for &start in order {
        let mut clique = vec![start];
        for &v in order {
            if v != start && clique.iter().all(|&u| graph.has_edge(u, v)) {
                clique.push(v);
            }
        }
        best = best.max(clique.len());
    }
    best
}

struct Search<'a> {
    graph: &'a Graph,
    order: &'a [usize],
    colour: &'a mut [usize],
    best: &'a mut usize,
    lower: usize,
}

impl Search<'_> {
    /// Returns `true` once the lower bound is reached.
    fn run(&mut self, depth: usize, used: usize) -> bool {
        if used >= *self.best {
            return false;
        }
        if depth == self.order.len() {
            *self.best = used;
            return used == self.lower;
        }
        let v = self.order[depth];
        for c in 0..=used {
            if c + 1 >= *self.best {
                break;
            }
            if self.graph.neighbours(v).iter().any(|w| self.colour[w] == c) {
                continue;
            }
            self.colour[v] = c;
            let next_used = used.max(c + 1);
            if self.run(depth + 1, next_used) {
                return true;
            }
        }
        self.colour[v] = usize::MAX;
        false
    }
}
