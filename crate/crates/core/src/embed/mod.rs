//! Planar embeddings and the separating-cycle condition.

mod cycles;
mod planarity;

pub use cycles::{
    certify_nil_via_lemma21, cycle_sides, enumerate_cycles, lemma21_condition, lemma21_violation, CycleSide,
    DEFAULT_CYCLE_CAP,
};
pub use planarity::{is_apex, is_planar, planar_embedding, RotationSystem};
