//! Weisfeiler–Leman refinement, equitable graph matrices and matrix-equation
//! certificates for comparing pairs of graphs.

pub mod error;
pub mod graph;
pub mod hom;
pub mod limits;
pub mod linalg;
pub mod report;
pub mod spectral;
pub mod wl;
pub mod wlkd;

pub use error::{Error, Result};
pub use graph::{disjoint_union, individualise, Graph, VertexColouredGraph};
pub use limits::Limits;
