//! Independent ground truth for the decomposition results: Stanley depth by
//! exhaustive search and depth by Koszul homology.

mod betti;
mod poset;

pub use betti::{
    betti_numbers, depth_ideal, depth_quotient, is_prime, lcm_lattice, BettiEntry, BettiTable,
};
pub use poset::{
    characteristic_poset, sdepth_oracle, sdepth_search, CharacteristicPoset, IntervalPartition,
    SdepthResult,
};
