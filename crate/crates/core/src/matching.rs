//! Maximum bipartite matching (Hopcroft–Karp) and König vertex covers.

use std::collections::VecDeque;

const UNMATCHED: usize = usize::MAX;
const INF: usize = usize::MAX;

/// A bipartite graph with `left` and `right` sides given by left adjacency lists.
#[derive(Debug, Clone)]
pub struct Bipartite {
    right: usize,
    adj: Vec<Vec<usize>>,
}

impl Bipartite {
    pub fn new(right: usize, adj: Vec<Vec<usize>>) -> Self {
        debug_assert!(adj.iter().flatten().all(|&r| r < right));
        Bipartite { right, adj }
    }

    pub fn left_len(&self) -> usize {
        self.adj.len()
    }

    pub fn right_len(&self) -> usize {
        self.right
    }
}

/// A matching given as partner arrays on both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    left_mate: Vec<Option<usize>>,
    right_mate: Vec<Option<usize>>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.left_mate.iter().flatten().count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn left_len(&self) -> usize {
        self.left_mate.len()
    }

    pub fn mate_of_left(&self, l: usize) -> Option<usize> {
        self.left_mate[l]
    }

    pub fn mate_of_right(&self, r: usize) -> Option<usize> {
        self.right_mate[r]
    }

    /// Matched pairs `(left, right)` ordered by left vertex.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.left_mate
            .iter()
            .enumerate()
            .filter_map(|(l, m)| m.map(|r| (l, r)))
            .collect()
    }
}

/// Maximum-cardinality matching by Hopcroft–Karp.
///
/// Phases alternate a layered BFS from free left vertices with DFS
/// augmentation along shortest paths. Vertices and adjacency lists are
/// scanned in index order, so the result depends only on the input.
pub fn hopcroft_karp(graph: &Bipartite) -> Matching {
    let left = graph.left_len();
    let mut left_mate = vec![UNMATCHED; left];
    let mut right_mate = vec![UNMATCHED; graph.right];
    let mut dist = vec![INF; left];
    let mut cursor = vec![0usize; left];

    loop {
        // Layer the left vertices by alternating distance from free ones.
        let mut queue = VecDeque::new();
        for l in 0..left {
            if left_mate[l] == UNMATCHED {
                dist[l] = 0;
                queue.push_back(l);
            } else {
                dist[l] = INF;
            }
        }
        let mut found_free = false;
        while let Some(l) = queue.pop_front() {
            for &r in &graph.adj[l] {
                let next = right_mate[r];
                if next == UNMATCHED {
                    found_free = true;
                } else if dist[next] == INF {
                    dist[next] = dist[l] + 1;
                    queue.push_back(next);
                }
            }
        }
        if !found_free {
            break;
        }

        cursor.fill(0);
        let mut augmented = false;
        for l in 0..left {
            if left_mate[l] == UNMATCHED
                && augment(graph, l, &mut left_mate, &mut right_mate, &mut dist, &mut cursor)
            {
                augmented = true;
            }
        }
        if !augmented {
            break;
        }
    }

    let wrap = |v: Vec<usize>| v.into_iter().map(|m| (m != UNMATCHED).then_some(m)).collect();
    Matching {
        left_mate: wrap(left_mate),
        right_mate: wrap(right_mate),
    }
}

/// Iterative DFS along the BFS layering; flips the path when it reaches a free
/// right vertex.
fn augment(
    graph: &Bipartite,
    root: usize,
    left_mate: &mut [usize],
    right_mate: &mut [usize],
    dist: &mut [usize],
    cursor: &mut [usize],
) -> bool {
    // Stack of (left vertex, right vertex used to reach the next level).
    let mut stack: Vec<usize> = vec![root];
    let mut via: Vec<usize> = Vec::new();
    while let Some(&l) = stack.last() {
        let edges = &graph.adj[l];
        let mut advanced = false;
        while cursor[l] < edges.len() {
            let r = edges[cursor[l]];
            cursor[l] += 1;
            let next = right_mate[r];
            if next == UNMATCHED {
                via.push(r);
                // Flip the alternating path.
                for (&lv, &rv) in stack.iter().zip(via.iter()) {
                    left_mate[lv] = rv;
                    right_mate[rv] = lv;
                }
                return true;
            }
            if dist[next] == dist[l] + 1 {
                via.push(r);
                stack.push(next);
                advanced = true;
                break;
            }
        }
        if !advanced {
            dist[l] = INF;
            stack.pop();
            via.pop();
        }
    }
    false
}

/// Minimum vertex cover from a maximum matching (König's theorem).
///
/// Returns `(left_in_cover, right_in_cover)`. The cover consists of left
/// vertices not reachable from free left vertices by alternating paths,
/// plus right vertices that are reachable.
pub fn konig_cover(graph: &Bipartite, matching: &Matching) -> (Vec<bool>, Vec<bool>) {
    let left = graph.left_len();
    let mut reach_left = vec![false; left];
    let mut reach_right = vec![false; graph.right];
    let mut queue: VecDeque<usize> = (0..left)
        .filter(|&l| matching.left_mate[l].is_none())
        .collect();
    for &l in &queue {
        reach_left[l] = true;
    }
    while let Some(l) = queue.pop_front() {
        for &r in &graph.adj[l] {
            if reach_right[r] || matching.left_mate[l] == Some(r) {
                continue;
            }
            reach_right[r] = true;
            if let Some(next) = matching.right_mate[r] {
                if !reach_left[next] {
                    reach_left[next] = true;
                    queue.push_back(next);
                }
            }
        }
    }
    (reach_left.iter().map(|&x| !x).collect(), reach_right)
}
