//! All-path convexity on undirected graphs.
//!
//! In the all-path convexity the interval `I(S)` of a vertex set `S` holds
//! every vertex lying on some path (any simple path, not just a shortest
//! one) between two distinct members of `S`. This crate answers the convex
//! set test, interval, hull, convexity number, interval number, hull number
//! and geodetic iteration number in linear time from the block-cut tree, and
//! ships an exhaustive brute-force [`oracle`] to check those answers on small
//! graphs.
//!
//! ```
//! use allpath::{AllPath, Graph};
//!
//! let g = Graph::parse_edge_list("a b\nb c\nc a\nc d").unwrap();
//! let q = AllPath::new(&g);
//! let s = g.labeled_set(["a", "d"]).unwrap();
//! assert_eq!(q.interval(&s), g.labeled_set(["a", "b", "c", "d"]).unwrap());
//! assert_eq!(q.report().c, 3);
//! ```

pub mod blocks;
pub mod convexity;
pub mod generators;
pub mod graph;
pub mod oracle;

pub use blocks::{decompose, end_block_stats, is_two_connected, BlockCutTree, EndBlockStats, TreeNode};
pub use convexity::{
    compute_t_s, convexity_number, geodetic_iteration_number, hull, hull_number, interval, interval_number,
    is_convex, report, AllPath, ConvexityError, ConvexityReport, PrunedTree, Witnessed,
};
pub use generators::{enumerate_small, generate, Family, GenError, GenSpec, SplitMix64};
pub use graph::{delete_vertices, neighbors_into, Graph, GraphError, VertexSet};
pub use oracle::{OracleBudget, OracleError};
