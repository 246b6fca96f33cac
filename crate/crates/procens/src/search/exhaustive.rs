use crate::cost::CostCoefficients;
use crate::error::{Error, Result};
use crate::model::{CensoringScheme, WeibullParams};
use crate::search::enumerate::{enumerate_schemes, scheme_count};
use crate::search::fitness::CostEvaluator;
use crate::search::ga::OptimizationResult;

/// Default cap on the number of schemes an exhaustive search will visit.
pub const DEFAULT_EXHAUSTIVE_BUDGET: u128 = 10_000_000;

/// Evaluates every scheme in CS(n, m) and returns the cheapest, ties broken
/// by the lexicographically smallest removal vector.
pub fn exhaustive_optimum(
    n: u32,
    m: u32,
    params: WeibullParams,
    coeffs: &CostCoefficients,
) -> Result<OptimizationResult> {
    exhaustive_optimum_with_budget(n, m, params, coeffs, DEFAULT_EXHAUSTIVE_BUDGET)
}

/// [`exhaustive_optimum`] with an explicit budget on the space size.
pub fn exhaustive_optimum_with_budget(
    n: u32,
    m: u32,
    params: WeibullParams,
    coeffs: &CostCoefficients,
    budget: u128,
) -> Result<OptimizationResult> {
    let schemes = scheme_count(n, m)?;
    if schemes > budget {
        return Err(Error::InstanceTooLarge { schemes, budget });
    }

    let mut eval = CostEvaluator::new(n, m, params, *coeffs);
    let mut best: Option<(CensoringScheme, f64)> = None;
    for scheme in enumerate_schemes(n, m)? {
        let cost = eval.eval(&scheme)?;
        // Enumeration descends lexicographically, so replacing on ties keeps
        // the lexicographically smallest minimiser.
        let replace = match &best {
            None => true,
            Some((_, c)) => cost <= *c,
        };
        if replace {
            best = Some((scheme, cost));
        }
    }
    let (best_scheme, best_cost) = best.expect("CS(n, m) is never empty");
    Ok(OptimizationResult {
        best_scheme,
        best_cost,
        generations_run: 0,
        history: vec![(0, best_cost)],
        evaluations: eval.evaluations(),
    })
}
