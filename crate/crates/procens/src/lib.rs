//! Cost-optimal design of progressively Type-II censored Weibull life
//! tests.
//!
//! A life test places `n` units on test, observes `m` failures, and removes
//! `removals[i]` surviving units at the i-th failure. This crate scores a
//! candidate removal plan by the total experiment cost
//!
//! ```text
//! cost = k1 * m  +  k2 * E[test duration]  +  k3 * integrated Var[ln quantile]
//! ```
//!
//! and searches the feasible set CS(n, m) for a minimiser with a real-coded
//! genetic algorithm, backed by an exhaustive oracle on small spaces and a
//! steepest-descent baseline. The cost is scale invariant: measuring
//! lifetimes in different units (and rescaling the per-time coefficient)
//! changes neither the optimal scheme nor its cost.
//!
//! Modules:
//! - [`model`]: censored order-statistic distribution theory (mixture
//!   coefficients, densities, Fisher information, expected duration).
//! - [`cost`]: the total-cost utility and its scale transformation.
//! - [`search`]: genetic, exhaustive and local-search minimisers.
//! - [`analysis`]: sensitivity tables and the optimal choice of `m`.
//! - [`sim`]: Monte Carlo simulation of censored experiments.

pub mod analysis;
pub mod cost;
mod error;
pub mod model;
mod num;
pub mod search;
pub mod sim;

pub use cost::{scale_transform, total_cost, CostCoefficients};
pub use error::{Error, Result};
pub use model::{CensoringScheme, WeibullParams};
pub use search::{GAConfig, OptimizationResult};
