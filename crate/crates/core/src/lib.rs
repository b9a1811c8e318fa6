//! Exact nested chromatic number of finite simple graphs.
//!
//! A nested colouring is a proper colouring whose classes can each be ordered
//! so that neighbourhoods shrink along the order. Its minimum size `χ_N(G)`
//! equals the width of the weak-duplicate poset of the de-duplicate graph,
//! which [`nested::solve`] computes in polynomial time.

pub mod bitset;
pub mod canon;
pub mod chromatic;
pub mod constructions;
pub mod dedup;
pub mod enumeration;
pub mod formats;
pub mod graph;
pub mod matching;
pub mod nested;
pub mod partitions;
pub mod poset;

pub use bitset::VertexSet;
pub use canon::{are_isomorphic, canonical_code, canonical_form, CanonicalCode};
pub use chromatic::chromatic_number;
pub use dedup::{dedup, DedupMapping};
pub use formats::{parse_document, parse_edge_list, parse_graph6, write_edge_list, write_graph6, FormatError, GraphDocument};
pub use graph::{Graph, GraphError};
pub use nested::{
    brute_force_nested_chromatic, is_nested_coloring, is_nested_independent, nested_chromatic_number,
    NestedColoring,
};
pub use poset::{weak_duplicate_poset, ChainCover, Poset, PosetError};
