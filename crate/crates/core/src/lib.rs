//! Approximation algorithms for minimum dominating set: greedy, LP-relaxation
//! threshold rounding, and a greedy/LP hybrid, together with the lower-bound
//! machinery, graph generators and file formats needed to evaluate them.

pub mod algorithms;
pub mod arboricity;
pub mod error;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod greedy;
pub mod hybrid;
pub mod ingest;
pub mod lp;
pub mod rounding;

pub use error::{Error, Result};
pub use graph::{build_graph, DominatingSetResult, Graph, Vertex, VertexSet};
