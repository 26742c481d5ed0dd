//! Graph representations, girth and the structural transforms.

mod general;
mod girth;
mod nodeset;
mod tanner;
mod transform;

pub use general::GeneralGraph;
pub use nodeset::NodeSet;
pub use tanner::TannerGraph;
pub use transform::{
    edge_vertex_incidence, gamma_augment, induced_subgraph, inverse_edge_vertex_incidence,
    reduced_graph, InverseIncidence, RootRule, Transformed,
};
