//! Ranked enumeration of the spanning trees of a weighted undirected graph.
//!
//! Trees come out cheapest first, in `(weight, sorted edge ids)` order. The
//! enumerator walks single-edge exchanges read off each tree's difference
//! weighted circuit matrix (see [`dwcm`]), keeping a pool of discovered but
//! unemitted trees. The [`oracle`] module supplies an independent exhaustive
//! listing and a matrix-tree count for checking results on small graphs.
//!
//! The algorithms are generic over the edge weight type (see [`Weight`]);
//! the aliases at the crate root fix it to `i64`, which is what the text
//! format and the CLI use.
//!
//! ```
//! use spantree::{enumerate_k, parse_graph, Limit};
//!
//! let g = parse_graph("3 3\n0 1 1\n1 2 2\n0 2 3\n").unwrap();
//! let weights: Vec<i64> = enumerate_k(&g, Limit::All)
//!     .unwrap()
//!     .iter()
//!     .map(|r| r.tree.weight())
//!     .collect();
//! assert_eq!(weights, [3, 4, 5]);
//! ```

pub mod cli;
pub mod corpus;
pub mod cycle;
pub mod dwcm;
pub mod enumerator;
pub mod error;
pub mod graph;
pub mod mst;
pub mod oracle;
pub mod parse;
pub mod union_find;
pub mod weight;

pub use cycle::fundamental_cycle;
pub use dwcm::{apply_exchange, build_dwcm, Cell};
pub use enumerator::{canonical_key, enumerate_k, Limit};
pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use graph::{CanonicalKey, EdgeId, VertexId};
pub use mst::kruskal_mst;
pub use oracle::{all_spanning_trees, kirchhoff_count, sorted_reference};
pub use parse::{format_graph, parse_graph};
pub use weight::Weight;

pub type Graph = graph::Graph<i64>;
pub type Edge = graph::Edge<i64>;
pub type SpanningTree = graph::SpanningTree<i64>;
pub type Dwcm = dwcm::Dwcm<i64>;
pub type Exchange = dwcm::Exchange<i64>;
pub type RankedTree = enumerator::RankedTree<i64>;
pub type EnumState<'g> = enumerator::EnumState<'g, i64>;
pub type OracleResult = oracle::OracleResult<i64>;
