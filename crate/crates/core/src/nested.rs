//! Nested colourings and the nested chromatic number `χ_N`.
//!
//! A colour class is nested when it is independent and its vertices can be
//! listed so that every later vertex's neighbourhood is contained in every
//! earlier one's. `χ_N(G)` is the width of the weak-duplicate poset of the
//! de-duplicate graph, so the solver runs
//! `dedup → weak_duplicate_poset → min_chain_cover` and lifts the chains back.

use thiserror::Error;

use crate::chromatic::chromatic_number;
use crate::dedup::{dedup, DedupMapping};
use crate::graph::Graph;
use crate::partitions::{blocks, RestrictedGrowth};
use crate::poset::{weak_duplicate_poset, Poset};

/// Default vertex cap for [`brute_force_nested_chromatic`]; Bell(10) = 115975.
pub const ORACLE_DEFAULT_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} appears in more than one class")]
    Repeated(usize),
    #[error("vertex {0} is not covered by any class")]
    Uncovered(usize),
    #[error("class {0} is empty")]
    EmptyClass(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("brute force oracle refuses {n} vertices (cap {cap})")]
pub struct OracleCapExceeded {
    pub n: usize,
    pub cap: usize,
}

/// A nested colouring: each class lists its vertices with neighbourhoods
/// weakly decreasing along the list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NestedColoring {
    pub classes: Vec<Vec<usize>>,
}

impl NestedColoring {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// `colour[v]` = index of the class holding `v`.
    pub fn colour_map(&self, n: usize) -> Vec<usize> {
        let mut colour = vec![usize::MAX; n];
        for (c, class) in self.classes.iter().enumerate() {
            for &v in class {
                colour[v] = c;
            }
        }
        colour
    }
}

/// Outcome of checking a partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// Every class is nested; the classes are returned in chain order.
    Nested(NestedColoring),
    /// The class at this index is not independent.
    NotIndependent { class: usize, edge: (usize, usize) },
    /// The class at this index is independent but its neighbourhoods are not a chain.
    NotNested { class: usize, witness: (usize, usize) },
}

impl Verdict {
    pub fn is_nested(&self) -> bool {
        matches!(self, Verdict::Nested(_))
    }
}

/// Orders `set` by containment if it is nested independent.
///
/// Candidates are sorted by descending neighbourhood size (ties by index) and
/// each consecutive pair is checked for containment, which suffices because
/// containment is transitive.
pub fn nested_order(graph: &Graph, set: &[usize]) -> Option<Vec<usize>> {
    check_class(graph, set).ok()
}

pub fn is_nested_independent(graph: &Graph, set: &[usize]) -> bool {
    nested_order(graph, set).is_some()
}

enum ClassFault {
    Edge(usize, usize),
    Incomparable(usize, usize),
}

fn check_class(graph: &Graph, set: &[usize]) -> Result<Vec<usize>, ClassFault> {
    for (i, &u) in set.iter().enumerate() {
        if let Some(&v) = set[i + 1..].iter().find(|&&v| graph.has_edge(u, v)) {
            return Err(ClassFault::Edge(u.min(v), u.max(v)));
        }
    }
    let mut order = set.to_vec();
    order.sort_by(|&a, &b| graph.degree(b).cmp(&graph.degree(a)).then(a.cmp(&b)));
    for pair in order.windows(2) {
        if !graph.is_weak_duplicate(pair[1], pair[0]) {
            return Err(ClassFault::Incomparable(pair[0], pair[1]));
        }
    }
    Ok(order)
}

/// Edge-exchange form of nestedness: for consecutive `v` before `u`, every
/// edge `{u, w}` has a partner edge `{v, w}`.
fn satisfies_edge_exchange(graph: &Graph, order: &[usize]) -> bool {
    order.windows(2).all(|pair| {
        let (v, u) = (pair[0], pair[1]);
        graph.neighbours(u).iter().all(|w| w != v && graph.has_edge(v, w))
    })
}

/// Checks that `partition` covers `V(G)` exactly once and diagnoses the first
/// class that is not nested.
pub fn verify_nested_coloring(graph: &Graph, partition: &[Vec<usize>]) -> Result<Verdict, ColoringError> {
    let n = graph.order();
    let mut seen = vec![false; n];
    for (c, class) in partition.iter().enumerate() {
        if class.is_empty() {
            return Err(ColoringError::EmptyClass(c));
        }
        for &v in class {
            if v >= n {
                return Err(ColoringError::VertexOutOfRange { vertex: v, n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(ColoringError::Repeated(v));
            }
        }
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return Err(ColoringError::Uncovered(v));
    }

    let mut ordered = Vec::with_capacity(partition.len());
    for (c, class) in partition.iter().enumerate() {
        match check_class(graph, class) {
            Ok(order) => {
                debug_assert!(satisfies_edge_exchange(graph, &order));
                ordered.push(order);
            }
            Err(ClassFault::Edge(u, v)) => return Ok(Verdict::NotIndependent { class: c, edge: (u, v) }),
            Err(ClassFault::Incomparable(u, v)) => {
                return Ok(Verdict::NotNested { class: c, witness: (u, v) })
            }
        }
    }
    Ok(Verdict::Nested(NestedColoring { classes: ordered }))
}

pub fn is_nested_coloring(graph: &Graph, partition: &[Vec<usize>]) -> Result<bool, ColoringError> {
    Ok(verify_nested_coloring(graph, partition)?.is_nested())
}

/// Everything the solver derives on the way to `χ_N`.
#[derive(Debug, Clone)]
pub struct Solution {
    pub mapping: DedupMapping,
    /// `P_{G⋆}` restricted to the non-isolated classes.
    pub poset: Poset,
    /// Class index in `mapping` for each poset element.
    pub poset_classes: Vec<usize>,
    pub coloring: NestedColoring,
}

impl Solution {
    pub fn chi_nested(&self) -> usize {
        self.coloring.len()
    }
}

/// Computes `χ_N(G)` with an optimal nested colouring.
///
/// Isolated vertices are left out of the poset and appended to the end of the
/// first class; duplicates inside a lifted chain appear in ascending order.
pub fn solve(graph: &Graph) -> Solution {
    let mapping = dedup(graph);
    let image = mapping.image();
    let poset_classes: Vec<usize> = (0..image.order()).filter(|&c| !image.is_isolated(c)).collect();
    let core = image
        .induced_subgraph(&poset_classes)
        .expect("classes are vertices of the image");
    let poset = weak_duplicate_poset(&core).expect("de-duplicated graphs are duplicate-free");

    let mut classes: Vec<Vec<usize>> = poset
        .min_chain_cover()
        .chains
        .iter()
        .map(|chain| {
            chain
                .iter()
                .flat_map(|&e| mapping.classes()[poset_classes[e]].iter().copied())
                .collect()
        })
        .collect();

    let isolated: Vec<usize> = (0..graph.order()).filter(|&v| graph.is_isolated(v)).collect();
    if !isolated.is_empty() {
        match classes.first_mut() {
            Some(first) => first.extend(isolated),
            None => classes.push(isolated),
        }
    }

    Solution {
        mapping,
        poset,
        poset_classes,
        coloring: NestedColoring { classes },
    }
}

/// `χ_N(G)` together with a witness colouring.
pub fn nested_chromatic_number(graph: &Graph) -> (usize, NestedColoring) {
    let coloring = solve(graph).coloring;
    (coloring.len(), coloring)
}

/// `χ_N(G)` straight from the definition: the fewest classes over all set
/// partitions of `V(G)` whose classes are independent with pairwise
/// comparable neighbourhoods.
pub fn brute_force_nested_chromatic(graph: &Graph, cap: usize) -> Result<usize, OracleCapExceeded> {
    let n = graph.order();
    if n > cap {
        return Err(OracleCapExceeded { n, cap });
    }
    let nested = |class: &[usize]| {
        class.iter().enumerate().all(|(i, &u)| {
            class[i + 1..].iter().all(|&v| {
                !graph.has_edge(u, v)
                    && (graph.neighbours(u).is_subset(graph.neighbours(v))
                        || graph.neighbours(v).is_subset(graph.neighbours(u)))
            })
        })
    };
    let best = RestrictedGrowth::new(n)
        .filter_map(|rgs| {
            let parts = blocks(&rgs);
            parts.iter().all(|c| nested(c)).then_some(parts.len())
        })
        .min()
        .expect("the singleton partition is always nested");
    Ok(best)
}

/// `χ(G) = χ_N(G)`.
pub fn is_colour_nested(graph: &Graph) -> bool {
    chromatic_number(graph) == nested_chromatic_number(graph).0
}

/// Vertices `v` with `χ(G − v) = χ(G) − 1`.
pub fn critical_vertices(graph: &Graph) -> Vec<usize> {
    let chi = chromatic_number(graph);
    (0..graph.order())
        .filter(|&v| {
            let minus = graph.delete_vertex(v).expect("v is in range");
            chromatic_number(&minus) + 1 == chi
        })
        .collect()
}

pub fn is_vertex_critical(graph: &Graph) -> bool {
    critical_vertices(graph).len() == graph.order()
}

/// Deleting any vertex lowers `χ_N`.
pub fn is_nested_critical(graph: &Graph) -> bool {
    let chi_n = nested_chromatic_number(graph).0;
    (0..graph.order()).all(|v| {
        let minus = graph.delete_vertex(v).expect("v is in range");
        nested_chromatic_number(&minus).0 < chi_n
    })
}

/// The open neighbourhoods form a Sperner family (no one contains another).
pub fn neighbourhoods_are_sperner(graph: &Graph) -> bool {
    let n = graph.order();
    (0..n).all(|u| (0..n).all(|v| u == v || !graph.is_weak_duplicate(u, v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> Graph {
        Graph::new(6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5)]).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn nested_independent_sets_of_example() {
        let g = example();
        // 1-indexed {1,4} and {3,5,6}.
        assert!(!is_nested_independent(&g, &[0, 3]));
        assert_eq!(nested_order(&g, &[5, 4, 2]), Some(vec![2, 4, 5]));
        for v in 0..6 {
            assert!(is_nested_independent(&g, &[v]));
        }
        assert!(!is_nested_independent(&g, &[0, 1]));
    }

    #[test]
    fn colourings_of_example() {
        let g = example();
        let three = vec![vec![0, 3], vec![1], vec![2, 4, 5]];
        assert_eq!(is_nested_coloring(&g, &three), Ok(false));
        assert_eq!(
            verify_nested_coloring(&g, &three),
            Ok(Verdict::NotNested { class: 0, witness: (3, 0) })
        );
        let four = vec![vec![0], vec![1], vec![2, 4, 5], vec![3]];
        assert_eq!(is_nested_coloring(&g, &four), Ok(true));
        let singletons: Vec<Vec<usize>> = (0..6).map(|v| vec![v]).collect();
        assert_eq!(is_nested_coloring(&g, &singletons), Ok(true));
    }

    #[test]
    fn rejects_non_partitions() {
        let g = example();
        assert_eq!(
            is_nested_coloring(&g, &[vec![0, 1, 2], vec![2, 3, 4, 5]]),
            Err(ColoringError::Repeated(2))
        );
        assert_eq!(is_nested_coloring(&g, &[vec![0, 1, 2]]), Err(ColoringError::Uncovered(3)));
        assert!(is_nested_coloring(&g, &[vec![0, 1, 2, 3, 4, 5, 6]]).is_err());
        assert_eq!(
            verify_nested_coloring(&g, &[vec![0, 1], vec![2, 3, 4, 5]]),
            Ok(Verdict::NotIndependent { class: 0, edge: (0, 1) })
        );
    }

    #[test]
    fn example_solution() {
        let g = example();
        let (k, colouring) = nested_chromatic_number(&g);
        assert_eq!(k, 4);
        assert_eq!(colouring.classes, vec![vec![0], vec![1], vec![2, 4, 5], vec![3]]);
        assert_eq!(is_nested_coloring(&g, &colouring.classes), Ok(true));
        assert_eq!(brute_force_nested_chromatic(&g, ORACLE_DEFAULT_CAP), Ok(4));
        assert_eq!(chromatic_number(&g), 3);
        assert!(!is_colour_nested(&g));
    }

    #[test]
    fn isolated_vertices_join_first_class() {
        let g = Graph::new(5, [(1, 2), (2, 3)]).unwrap();
        let (k, c) = nested_chromatic_number(&g);
        assert_eq!(k, 2);
        assert_eq!(c.classes[0].last(), Some(&4));
        assert!(c.classes[0].contains(&0));
        assert_eq!(is_nested_coloring(&g, &c.classes), Ok(true));

        let empty = Graph::empty(4);
        assert_eq!(nested_chromatic_number(&empty), (1, NestedColoring { classes: vec![vec![0, 1, 2, 3]] }));
        assert_eq!(brute_force_nested_chromatic(&empty, 10), Ok(1));
        assert_eq!(nested_chromatic_number(&Graph::empty(0)).0, 0);
        assert_eq!(brute_force_nested_chromatic(&Graph::empty(0), 10), Ok(0));
    }

    #[test]
    fn paths() {
        let expected = |n: usize| match n {
            2..=4 => 2,
            5 => 4,
            _ => n - 2,
        };
        for n in 2..=12 {
            assert_eq!(nested_chromatic_number(&path(n)).0, expected(n), "P_{n}");
        }
    }

    #[test]
    fn oracle_cap() {
        assert_eq!(
            brute_force_nested_chromatic(&Graph::empty(11), ORACLE_DEFAULT_CAP),
            Err(OracleCapExceeded { n: 11, cap: 10 })
        );
        assert_eq!(brute_force_nested_chromatic(&Graph::empty(11), 11), Ok(1));
    }

    #[test]
    fn criticality() {
        for n in 1..=5 {
            let k = complete(n);
            assert!(is_vertex_critical(&k));
            assert!(is_nested_critical(&k));
            assert!(is_colour_nested(&k));
        }
        let p7 = path(7);
        assert!(is_nested_critical(&p7));
        assert!(!is_vertex_critical(&p7));
        // χ(P7 − end) = 2 = χ(P7), so ends are not critical.
        assert!(critical_vertices(&p7).is_empty());
        assert!(!is_nested_critical(&path(6)));
    }

    #[test]
    fn sperner_iff_full() {
        let c5 = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert!(neighbourhoods_are_sperner(&c5));
        assert_eq!(nested_chromatic_number(&c5).0, 5);
        assert!(!neighbourhoods_are_sperner(&path(5)));
    }
}
