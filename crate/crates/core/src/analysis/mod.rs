//! Verification tools: exact distance, distance lower bounds, recovering
//! sets and graphs, and the rank-(k-1) set search.

mod algorithms;
mod distance;
mod graph;

pub use algorithms::{
    algorithm1, algorithm2, check_gamma_columns, columns_independent, lowest_index, rank_of,
    RankSet, Step, StepCase,
};
pub use distance::{
    distance_lb_degree, distance_lb_gcd, distance_report, message_space_size,
    min_distance_exhaustive, DistanceReport, DEFAULT_CODEWORD_BUDGET, DEFAULT_SUBSET_BUDGET,
    EXTENDED_CODEWORD_BUDGET,
};
pub use graph::{
    closure, discover_recovering_sets, expansion_ratio, find_expanding_set,
    verify_recovering_sets, RecoveringGraph,
};
