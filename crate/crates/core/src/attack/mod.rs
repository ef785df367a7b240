//! Attack cofiltrations and the ladders, six-packs and grids built on them.

mod cofiltration;
mod sixpack;

pub use cofiltration::{attack_random, attack_targeted, Cofiltration, TargetScore};
pub use sixpack::{
    attack_tower, cohesive_ladder, cohesive_sixpack, inclusion_ladder, thick_bigrid, thick_ladder,
    thick_sixpack, SixPack, SixPackMode,
};
