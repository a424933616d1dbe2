//! Minor containment, the Petersen family, and the deciders built on them.

mod decide;
mod model;
mod petersen;
mod search;
mod subgraph;

pub use decide::{
    find_minor, has_k6_minor, is_intrinsically_linked, is_maximal_k6_minor_free, is_maxnil, Augmentation, Decider,
    K6Status, LinkingStatus, MaxnilStatus, VerificationReport, Witness,
};
pub use model::{verify_minor_model, EdgeWitness, MinorModel};
pub use petersen::{delta_wye_closure, petersen_family, petersen_name};
pub use search::{MinorSearcher, PatternSet, SearchConfig};
pub use subgraph::find_subgraph;
