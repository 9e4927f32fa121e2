//! Exact search and certificates for super edge-magic labelings and their
//! relatives: deficiency, strength, graceful, α-, harmonious and sequential
//! labelings, well-spread sets, and clique certificates for infinite
//! deficiency.

pub mod bounds;
pub mod canon;
pub mod clique;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod labeling;
pub mod search;
pub mod sidon;

pub use graph::{Graph, GraphError, GraphFamilyTag};
pub use graph6::{emit_graph6, parse_graph6, Graph6Error};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    Labeling(#[from] labeling::LabelingError),
    #[error(transparent)]
    Search(#[from] search::SearchError),
    #[error(transparent)]
    Bounds(#[from] bounds::BoundsError),
    #[error(transparent)]
    Sidon(#[from] sidon::SidonError),
}
