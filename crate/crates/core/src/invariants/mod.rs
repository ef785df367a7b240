//! Thick and cohesive Betti numbers and their persistent versions.

mod cohesive;
mod thick;

pub use cohesive::{
    cohesive_betti, cohesive_betti_poset, cohesive_betti_subdivision, cohesive_map,
    cohesive_map_rank_poset, cohesive_relation_check, cohesive_report, gamma_dimension,
    persistent_cohesive_betti, CohesiveDegree, CohesiveReport,
};
pub use thick::{
    coskeletal_tower, isolated_vertices, thick_betti, thick_persistent_betti, thick_profile,
    thick_simplex_classes, ThickProfile,
};
