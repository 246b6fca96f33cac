use crate::cost::CostCoefficients;
use crate::error::Result;
use crate::model::{CensoringScheme, WeibullParams};
use crate::search::fitness::CostEvaluator;
use crate::search::ga::OptimizationResult;

/// Steepest-descent baseline over the "move one removal unit" neighbourhood:
/// from the current scheme, try every transfer of a single unit from
/// position i to position j and take the best strict improvement. Stops at
/// a local minimum or after `max_iters` moves.
pub fn local_search_baseline(
    n: u32,
    m: u32,
    params: WeibullParams,
    coeffs: &CostCoefficients,
    start: &CensoringScheme,
    max_iters: u32,
) -> Result<OptimizationResult> {
    debug_assert_eq!((start.n(), start.m()), (n, m));
    let mut eval = CostEvaluator::new(n, m, params, *coeffs);
    let mut current = start.clone();
    let mut current_cost = eval.eval(&current)?;
    let mut history = vec![(0u32, current_cost)];
    let mut iterations = 0u32;

    for iter in 1..=max_iters {
        let mut best_move: Option<(CensoringScheme, f64)> = None;
        let removals = current.removals().to_vec();
        for i in 0..m as usize {
            if removals[i] == 0 {
                continue;
            }
            for j in 0..m as usize {
                if i == j {
                    continue;
                }
                let mut candidate = removals.clone();
                candidate[i] -= 1;
                candidate[j] += 1;
                let candidate = CensoringScheme::new(n, m, candidate)?;
                let cost = eval.eval(&candidate)?;
                let better_than_found =
                    best_move.as_ref().map_or(true, |(_, c)| cost < *c);
                if cost < current_cost && better_than_found {
                    best_move = Some((candidate, cost));
                }
            }
        }
        match best_move {
            Some((scheme, cost)) => {
                current = scheme;
                current_cost = cost;
                history.push((iter, current_cost));
                iterations = iter;
            }
            None => break,
        }
    }

    Ok(OptimizationResult {
        best_scheme: current,
        best_cost: current_cost,
        generations_run: iterations,
        history,
        evaluations: eval.evaluations(),
    })
}
