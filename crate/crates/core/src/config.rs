use serde::{Deserialize, Serialize};

/// Caps, budgets and the coefficient field shared by every pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Highest degree the lex ideal construction may reach before giving up.
    pub degree_ceiling: u32,
    /// Characteristic of the prime field used for homology ranks.
    pub prime: u64,
    /// Maximum number of interval placements in one Stanley depth search.
    pub node_budget: u64,
    /// Maximum number of points in a characteristic poset.
    pub poset_cap: usize,
    /// Maximum size of an lcm lattice.
    pub lcm_cap: usize,
    /// Largest exponent accepted from user input.
    pub exponent_cap: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            degree_ceiling: 256,
            prime: 32003,
            node_budget: 10_000_000,
            poset_cap: 5000,
            lcm_cap: 5000,
            exponent_cap: 64,
        }
    }
}
