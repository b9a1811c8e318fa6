//! Graph families and graph operations.
//!
//! Product vertices `(g, h)` are numbered row-major as `g · |V(H)| + h`.

use rand::Rng;
use thiserror::Error;

use crate::graph::{Graph, GraphBuilder};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{family}: {reason}")]
    BadParameter { family: &'static str, reason: String },
}

fn bad(family: &'static str, reason: impl Into<String>) -> ConstructionError {
    ConstructionError::BadParameter {
        family,
        reason: reason.into(),
    }
}

pub type Result<T> = std::result::Result<T, ConstructionError>;

pub fn complete(n: usize) -> Graph {
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            b.add_edge(u, v);
        }
    }
    b.build()
}

/// `K_{n₁,…,n_r}`; parts are laid out consecutively.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.contains(&0) {
        return Err(bad("complete-multipartite", "parts must be non-empty"));
    }
    let n = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, size));
    }
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                b.add_edge(u, v);
            }
        }
    }
    Ok(b.build())
}

/// The Turán graph `T_{n,r}`: complete `r`-partite with part sizes differing by at most one.
pub fn turan(n: usize, r: usize) -> Result<Graph> {
    if r == 0 || r > n {
        return Err(bad("turan", format!("need 1 ≤ r ≤ n, got n = {n}, r = {r}")));
    }
    let parts: Vec<usize> = (0..r).map(|i| n / r + usize::from(i < n % r)).collect();
    complete_multipartite(&parts)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(bad("cycle", format!("need n ≥ 3, got {n}")));
    }
    let mut b = GraphBuilder::new(n);
    for i in 0..n {
        b.add_edge(i, (i + 1) % n);
    }
    Ok(b.build())
}

/// The complement of `C_n`.
pub fn anticycle(n: usize) -> Result<Graph> {
    Ok(cycle(n)?.complement())
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(bad("path", "need n ≥ 1"));
    }
    let mut b = GraphBuilder::new(n);
    for i in 1..n {
        b.add_edge(i - 1, i);
    }
    Ok(b.build())
}

/// `S_n`: `n` leaves on a centre. The centre is vertex `n`.
pub fn star(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(bad("star", "need n ≥ 1"));
    }
    Ok(join(&Graph::empty(n), &complete(1)))
}

/// `W_n`: `C_n` plus a dominating vertex `n`.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(bad("wheel", format!("need n ≥ 3, got {n}")));
    }
    Ok(join(&cycle(n)?, &complete(1)))
}

/// `Wd_{k,n}`: `n` copies of `K_k` sharing one dominating vertex (the last one).
pub fn windmill(k: usize, n: usize) -> Result<Graph> {
    if k < 2 || n == 0 {
        return Err(bad("windmill", format!("need k ≥ 2 and n ≥ 1, got k = {k}, n = {n}")));
    }
    let copies = (0..n).fold(Graph::empty(0), |acc, _| disjoint_union(&acc, &complete(k)));
    Ok(join(&copies, &complete(1)))
}

/// Outer 5-cycle `0..5`, spokes `i ~ i+5`, inner pentagram.
pub fn petersen() -> Graph {
    let mut b = GraphBuilder::new(10);
    for i in 0..5 {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i, i + 5);
        b.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    b.build()
}

/// All `k`-subsets of `{0, …, n−1}` in colex order, as bitmasks.
fn colex_subsets(n: usize, k: usize) -> Vec<u64> {
    let mut subsets: Vec<u64> = (0u64..1 << n).filter(|s| s.count_ones() as usize == k).collect();
    // Colex order on sets is numeric order on their bitmasks.
    subsets.sort_unstable();
    subsets
}

/// `KG_{n,k}`: `k`-subsets of an `n`-set, adjacent when disjoint. Vertices in colex order.
pub fn kneser(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || n < 2 * k {
        return Err(bad("kneser", format!("need n ≥ 2k ≥ 2, got n = {n}, k = {k}")));
    }
    if n > 30 {
        return Err(bad("kneser", "n > 30 is not supported"));
    }
    let subsets = colex_subsets(n, k);
    let mut b = GraphBuilder::new(subsets.len());
    for (i, a) in subsets.iter().enumerate() {
        for (j, c) in subsets.iter().enumerate().skip(i + 1) {
            if a & c == 0 {
                b.add_edge(i, j);
            }
        }
    }
    Ok(b.build())
}

/// `Q_n` with `Q_1 = K_2` and `Q_n = Q_{n−1} □ K_2`.
pub fn cube(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(bad("cube", "need n ≥ 1"));
    }
    let k2 = complete(2);
    Ok((1..n).fold(k2.clone(), |q, _| cartesian_product(&q, &k2)))
}

/// The crown graph `K_n × K_2` on `2n` vertices.
pub fn crown(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(bad("crown", format!("need n ≥ 2, got {n}")));
    }
    Ok(direct_product(&complete(n), &complete(2)))
}

/// `G_{a₁,…,a_r; s}` on `u_1..u_r` (vertices `0..r`) and `v_1..v_s`
/// (vertices `r..r+s`), with `u_i ~ v_j` iff `j ≤ a_i`.
pub fn nested_bipartite(a: &[usize], s: usize) -> Result<Graph> {
    const NAME: &str = "nested-bipartite";
    if a.is_empty() {
        return Err(bad(NAME, "sequence must be non-empty"));
    }
    if a.windows(2).any(|w| w[1] > w[0]) {
        return Err(bad(NAME, "sequence must be weakly decreasing"));
    }
    if a[a.len() - 1] == 0 {
        return Err(bad(NAME, "entries must be positive"));
    }
    if a[0] > s {
        return Err(bad(NAME, format!("a₁ = {} exceeds s = {s}", a[0])));
    }
    let r = a.len();
    let mut b = GraphBuilder::new(r + s);
    for (i, &ai) in a.iter().enumerate() {
        for j in 0..ai {
            b.add_edge(i, r + j);
        }
    }
    Ok(b.build())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThresholdStep {
    Isolated,
    Dominating,
}

/// A threshold graph grown from one vertex; step `i` adds vertex `i + 1`.
pub fn threshold(script: &[ThresholdStep]) -> Result<Graph> {
    if script.is_empty() {
        return Err(bad("threshold", "script must contain at least one step"));
    }
    let n = script.len() + 1;
    let mut b = GraphBuilder::new(n);
    for (i, step) in script.iter().enumerate() {
        if *step == ThresholdStep::Dominating {
            for u in 0..=i {
                b.add_edge(u, i + 1);
            }
        }
    }
    Ok(b.build())
}

/// Parses a script of `i`/`d` characters.
pub fn parse_threshold_script(text: &str) -> Result<Vec<ThresholdStep>> {
    text.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c.to_ascii_lowercase() {
            'i' => Ok(ThresholdStep::Isolated),
            'd' => Ok(ThresholdStep::Dominating),
            other => Err(bad("threshold", format!("unknown step {other:?}; use i or d"))),
        })
        .collect()
}

/// `μ(G)`: `u_i = i`, `v_i = n + i`, `w = 2n`.
pub fn mycielski(graph: &Graph) -> Graph {
    let n = graph.order();
    let mut b = GraphBuilder::new(2 * n + 1);
    for (i, j) in graph.edges() {
        b.add_edge(i, j);
        b.add_edge(i, n + j);
        b.add_edge(j, n + i);
    }
    for i in 0..n {
        b.add_edge(2 * n, n + i);
    }
    b.build()
}

/// `M_k` with `M_2 = K_2` and `M_{k+1} = μ(M_k)`.
pub fn mycielski_graph(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(bad("mycielski", format!("need k ≥ 2, got {k}")));
    }
    Ok((2..k).fold(complete(2), |g, _| mycielski(&g)))
}

/// `G ⊔ H`, with `H` shifted up by `|V(G)|`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let offset = g.order();
    let mut b = GraphBuilder::new(offset + h.order());
    for (u, v) in g.edges() {
        b.add_edge(u, v);
    }
    for (u, v) in h.edges() {
        b.add_edge(offset + u, offset + v);
    }
    b.build()
}

/// `G ∨ H`: the disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let offset = g.order();
    let mut b = GraphBuilder::new(offset + h.order());
    for (u, v) in g.edges() {
        b.add_edge(u, v);
    }
    for (u, v) in h.edges() {
        b.add_edge(offset + u, offset + v);
    }
    for u in 0..offset {
        for v in 0..h.order() {
            b.add_edge(u, offset + v);
        }
    }
    b.build()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Product {
    /// `G × H`: `N(g,h) = N(g) × N(h)`.
    Direct,
    /// `G □ H`: `N(g,h) = {g} × N(h) ⊔ N(g) × {h}`.
    Cartesian,
    /// `G ⊠ H`: `N(g,h) = N[g] × N[h] ∖ {(g,h)}`.
    Strong,
    /// `G[H]`: `N(g,h) = N(g) × V(H) ⊔ {g} × N(h)`.
    Composition,
}

pub fn product(kind: Product, g: &Graph, h: &Graph) -> Graph {
    let m = h.order();
    let idx = |a: usize, b: usize| a * m + b;
    let mut b = GraphBuilder::new(g.order() * m);
    for g1 in 0..g.order() {
        for h1 in 0..m {
            for g2 in 0..g.order() {
                for h2 in 0..m {
                    let (u, v) = (idx(g1, h1), idx(g2, h2));
                    if u >= v {
                        continue;
                    }
                    let ge = g.has_edge(g1, g2);
                    let he = h.has_edge(h1, h2);
                    let adjacent = match kind {
                        Product::Direct => ge && he,
                        Product::Cartesian => (g1 == g2 && he) || (h1 == h2 && ge),
                        Product::Strong => (g1 == g2 || ge) && (h1 == h2 || he),
                        Product::Composition => ge || (g1 == g2 && he),
                    };
                    if adjacent {
                        b.add_edge(u, v);
                    }
                }
            }
        }
    }
    b.build()
}

pub fn direct_product(g: &Graph, h: &Graph) -> Graph {
    product(Product::Direct, g, h)
}

pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    product(Product::Cartesian, g, h)
}

pub fn strong_product(g: &Graph, h: &Graph) -> Graph {
    product(Product::Strong, g, h)
}

pub fn composition(g: &Graph, h: &Graph) -> Graph {
    product(Product::Composition, g, h)
}

/// `G(n, p)`: each of the `C(n, 2)` pairs is an edge independently with probability `p`.
pub fn erdos_renyi<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let p = p.clamp(0.0, 1.0);
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                b.add_edge(u, v);
            }
        }
    }
    b.build()
}

/// The connected planar graph with `n` vertices and `χ_N = k`: `K_k` for
/// `k ≤ 4` or `C_k` for `k ≥ 5`, with `n − k` leaves hung on vertex `k − 2`.
pub fn planar_witness(n: usize, k: usize) -> Result<Graph> {
    if k < 2 || k > n {
        return Err(bad("planar", format!("need 2 ≤ k ≤ n, got n = {n}, k = {k}")));
    }
    let base = if k <= 4 { complete(k) } else { cycle(k)? };
    let mut b = GraphBuilder::new(n);
    for (u, v) in base.edges() {
        b.add_edge(u, v);
    }
    for leaf in k..n {
        b.add_edge(k - 2, leaf);
    }
    Ok(b.build())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nested::nested_chromatic_number;

    fn chi_n(g: &Graph) -> usize {
        nested_chromatic_number(g).0
    }

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn parameter_errors() {
        assert!(cycle(2).is_err());
        assert!(wheel(2).is_err());
        assert!(kneser(3, 2).is_err());
        assert!(kneser(4, 0).is_err());
        assert!(turan(3, 4).is_err());
        assert!(nested_bipartite(&[1, 2], 3).is_err());
        assert!(nested_bipartite(&[4], 3).is_err());
        assert!(nested_bipartite(&[2, 0], 3).is_err());
        assert!(threshold(&[]).is_err());
        assert!(windmill(1, 3).is_err());
        assert!(parse_threshold_script("idx").is_err());
        assert!(complete_multipartite(&[2, 0]).is_err());
    }

    #[test]
    fn small_families_have_expected_shape() {
        assert_eq!(petersen().regular_degree(), Some(3));
        assert_eq!(petersen().girth(), Some(5));
        assert_eq!(kneser(5, 2).unwrap().order(), 10);
        assert_eq!(kneser(5, 2).unwrap().regular_degree(), Some(3));
        assert_eq!(cube(3).unwrap().regular_degree(), Some(3));
        assert_eq!(cube(3).unwrap().order(), 8);
        assert_eq!(crown(4).unwrap().regular_degree(), Some(3));
        assert_eq!(turan(7, 3).unwrap().edge_count(), 16);
        assert_eq!(star(3).unwrap().leaves(), vec![0, 1, 2]);
        assert_eq!(wheel(5).unwrap().degree(5), 5);
        assert_eq!(windmill(3, 2).unwrap().order(), 7);
        let m = mycielski(&complete(1));
        assert_eq!(m.order(), 3);
        assert_eq!(m.edges().collect::<Vec<_>>(), vec![(1, 2)]);
        assert_eq!(mycielski_graph(3).unwrap(), mycielski(&complete(2)));
        assert_eq!(mycielski_graph(3).unwrap().girth(), Some(5));
        assert_eq!(anticycle(5).unwrap().regular_degree(), Some(2));
    }

    #[test]
    fn mycielski_edge_formula() {
        let g = Graph::new(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        let m = mycielski(&g);
        let n = 4;
        for a in 0..2 * n + 1 {
            for b in 0..2 * n + 1 {
                let expected = match (a < n, b < n) {
                    _ if a == b => false,
                    (true, true) => g.has_edge(a, b),
                    (true, false) if b < 2 * n => g.has_edge(a, b - n),
                    (false, true) if a < 2 * n => g.has_edge(b, a - n),
                    _ => (a == 2 * n && (n..2 * n).contains(&b)) || (b == 2 * n && (n..2 * n).contains(&a)),
                };
                assert_eq!(m.has_edge(a, b), expected, "({a},{b})");
            }
        }
    }

    #[test]
    fn closed_forms_on_families() {
        for (n, r) in [(5, 2), (7, 3), (9, 4), (6, 6)] {
            assert_eq!(chi_n(&turan(n, r).unwrap()), r);
        }
        assert_eq!(chi_n(&complete_multipartite(&[3, 1, 2, 2]).unwrap()), 4);
        for (n, k) in [(5, 2), (6, 2), (7, 2), (7, 3)] {
            assert_eq!(chi_n(&kneser(n, k).unwrap()), binom(n, k));
        }
        for n in 1..=6 {
            assert_eq!(chi_n(&star(n).unwrap()), 2);
        }
        for k in 2..=4 {
            for n in 1..=3 {
                assert_eq!(chi_n(&windmill(k, n).unwrap()), n * k + 1);
            }
        }
        assert_eq!(chi_n(&wheel(4).unwrap()), 3);
        for n in [3, 5, 6, 7, 8] {
            assert_eq!(chi_n(&wheel(n).unwrap()), n + 1);
        }
        assert_eq!(chi_n(&cube(2).unwrap()), 2);
        for n in [1, 3, 4, 5] {
            assert_eq!(chi_n(&cube(n).unwrap()), 1 << n);
        }
        for n in 2..=6 {
            assert_eq!(chi_n(&crown(n).unwrap()), 2 * n);
        }
        for k in 2..=6 {
            assert_eq!(chi_n(&mycielski_graph(k).unwrap()), 3 * (1 << (k - 2)) - 1);
        }
    }

    #[test]
    fn nested_bipartite_structure() {
        let g = nested_bipartite(&[4, 3, 3, 1], 5).unwrap();
        assert_eq!(g.order(), 9);
        assert_eq!(chi_n(&g), 2);
        assert!(!g.is_connected());
        assert!(nested_bipartite(&[5, 3, 3, 1], 5).unwrap().is_connected());
        let staircase = nested_bipartite(&[3, 2, 1], 3).unwrap();
        assert!(staircase.is_connected() && staircase.is_duplicate_free());
        assert!(!nested_bipartite(&[3, 3, 1], 3).unwrap().is_duplicate_free());
    }

    #[test]
    fn threshold_scripts() {
        use ThresholdStep::*;
        assert_eq!(threshold(&[Isolated; 4]).unwrap(), Graph::empty(5));
        assert_eq!(threshold(&[Dominating; 4]).unwrap(), complete(5));
        let g = threshold(&parse_threshold_script("i d i d d").unwrap()).unwrap();
        assert_eq!(chi_n(&g), 4);
    }

    #[test]
    fn planar_witnesses() {
        let g = planar_witness(6, 5).unwrap();
        // C5 plus one leaf on (1-indexed) vertex 4.
        assert_eq!(g.edge_count(), 6);
        assert!(g.has_edge(3, 5));
        assert_eq!(chi_n(&g), 5);
        assert_eq!(planar_witness(2, 2).unwrap(), complete(2));
        assert_eq!(planar_witness(4, 4).unwrap(), complete(4));
        assert_eq!(planar_witness(7, 7).unwrap(), cycle(7).unwrap());
        assert!(planar_witness(3, 1).is_err());
    }

    #[test]
    fn product_edge_sets_are_nested() {
        let g = path(3).unwrap();
        let h = Graph::new(4, [(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        let d = direct_product(&g, &h);
        let s = strong_product(&g, &h);
        let c = composition(&g, &h);
        for (u, v) in d.edges() {
            assert!(s.has_edge(u, v));
        }
        for (u, v) in s.edges() {
            assert!(c.has_edge(u, v));
        }
        assert_eq!(cartesian_product(&complete(2), &complete(2)), cycle(4).unwrap().permuted(&[0, 1, 3, 2]));
    }
}
