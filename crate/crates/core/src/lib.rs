//! Exact counting of orientations in which every triangle is transitive,
//! together with the machinery to verify extremal claims about them by
//! exhaustion: extension counts between vertex sets, closed forms,
//! isomorph-free graph generation and an exact inequality auditor.

pub mod audit;
pub mod canon;
pub mod certify;
pub mod closed_forms;
pub mod count;
pub mod enumerate;
pub mod error;
pub mod extension;
pub mod graph;
pub mod graph6;
pub mod orientation;

pub use count::Count;
pub use error::{Error, Graph6Error, Result};
pub use graph::{EdgeSet, Graph, VertexSet};
pub use graph6::{emit_graph6, parse_graph6};
pub use orientation::{
    count_completions, count_orientations, enumerate_orientations, is_cyclic_triangle_free,
    oracle_count, propagate, EdgeState, Orientation, PartialOrientation, Propagation,
};
