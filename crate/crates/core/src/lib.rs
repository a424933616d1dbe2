//! Maximal linklessly embeddable graphs: graph values and transformations,
//! minor testing against the Petersen family, clique-sum criteria, the
//! named constructions, and planar-embedding certificates.

pub mod bounds;
pub mod canon;
pub mod cliquesum;
pub mod connectivity;
pub mod embed;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod minor;

pub use error::{CliqueSumError, EmbedError, FamilyError, Graph6Error, GraphError, MinorError};
pub use graph::{edge, Edge, Graph, VertexSplit};
