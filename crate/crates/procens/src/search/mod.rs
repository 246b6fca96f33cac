//! Minimisers of the total cost over CS(n, m): a real-coded genetic
//! algorithm, an exhaustive-search oracle for small instances, and a
//! steepest-descent baseline.

mod enumerate;
mod exhaustive;
mod fitness;
mod ga;
mod local;

pub use enumerate::{enumerate_schemes, scheme_count, SchemeIter};
pub use exhaustive::{
    exhaustive_optimum, exhaustive_optimum_with_budget, DEFAULT_EXHAUSTIVE_BUDGET,
};
pub use ga::{
    blx_blend, blx_crossover, decode, ga_optimize, init_population, tournament_select,
    tournament_winner, uniform_mutation, Chromosome, GAConfig, OptimizationResult,
};
pub use local::local_search_baseline;
