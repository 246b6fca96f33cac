//! Sensitivity of the optimal design to misspecified shape or cost
//! coefficients, and the joint optimisation over the number of failures.

use std::ops::RangeInclusive;

use crate::cost::{total_cost, CostCoefficients};
use crate::error::{Error, Result};
use crate::model::{CensoringScheme, WeibullParams};
use crate::search::{
    exhaustive_optimum_with_budget, ga_optimize, scheme_count, GAConfig, OptimizationResult,
    DEFAULT_EXHAUSTIVE_BUDGET,
};

/// Which engine resolves each single-(n, m) optimisation.
#[derive(Clone, Debug)]
pub enum SearchMode {
    /// Exhaustive enumeration, failing on spaces above the budget.
    Exhaustive { budget: u128 },
    /// Genetic search with the given configuration. Independent cells run
    /// on derived seeds (`config.seed + cell index`).
    Ga(GAConfig),
    /// Exhaustive when the space fits the budget, genetic otherwise.
    Auto { budget: u128, ga: GAConfig },
}

impl SearchMode {
    pub fn exhaustive() -> Self {
        SearchMode::Exhaustive { budget: DEFAULT_EXHAUSTIVE_BUDGET }
    }

    fn run(&self, n: u32, m: u32, params: WeibullParams, coeffs: &CostCoefficients, cell: u64)
        -> Result<OptimizationResult>
    {
        match self {
            SearchMode::Exhaustive { budget } => {
                exhaustive_optimum_with_budget(n, m, params, coeffs, *budget)
            }
            SearchMode::Ga(config) => {
                let cfg = config.clone().with_seed(config.seed.wrapping_add(cell));
                ga_optimize(n, m, params, coeffs, &cfg)
            }
            SearchMode::Auto { budget, ga } => {
                if scheme_count(n, m)? <= *budget {
                    exhaustive_optimum_with_budget(n, m, params, coeffs, *budget)
                } else {
                    let cfg = ga.clone().with_seed(ga.seed.wrapping_add(cell));
                    ga_optimize(n, m, params, coeffs, &cfg)
                }
            }
        }
    }
}

/// The perturbed quantity of one sensitivity row.
#[derive(Clone, Debug, PartialEq)]
pub enum PerturbedValue {
    Shape(f64),
    Costs(CostCoefficients),
}

impl std::fmt::Display for PerturbedValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PerturbedValue::Shape(s) => write!(f, "{s}"),
            PerturbedValue::Costs(c) => write!(f, "({},{},{})", c.k1(), c.k2(), c.k3()),
        }
    }
}

/// One sensitivity-table row: the misspecified value, the scheme that is
/// optimal under it, and its relative efficiency at the truth.
#[derive(Clone, Debug)]
pub struct SensitivityRow {
    pub perturbed: PerturbedValue,
    pub scheme: CensoringScheme,
    pub relative_efficiency: f64,
}

/// Relative efficiency of designing under shape `phi` when the truth is
/// `phi0` (rate fixed at 1, justified by scale invariance):
/// `RE1 = cost(optimum under phi0) / cost under phi0 of the phi-optimum`.
pub fn sensitivity_to_shape(
    phi0: f64,
    phis: &[f64],
    n: u32,
    m: u32,
    coeffs: &CostCoefficients,
    mode: &SearchMode,
) -> Result<Vec<SensitivityRow>> {
    let truth = WeibullParams::new(phi0, 1.0)?;
    let reference = mode.run(n, m, truth, coeffs, 0)?;
    let mut rows = Vec::with_capacity(phis.len());
    for (cell, &phi) in phis.iter().enumerate() {
        let perturbed_params = WeibullParams::new(phi, 1.0)?;
        let under_phi = mode.run(n, m, perturbed_params, coeffs, cell as u64 + 1)?;
        let cost_at_truth = total_cost(&under_phi.best_scheme, truth, coeffs)?;
        rows.push(SensitivityRow {
            perturbed: PerturbedValue::Shape(phi),
            scheme: under_phi.best_scheme,
            relative_efficiency: reference.best_cost / cost_at_truth,
        });
    }
    Ok(rows)
}

/// Relative efficiency of designing under coefficients `c` when the truth
/// is `c0`, for fixed parameters.
pub fn sensitivity_to_costs(
    c0: &CostCoefficients,
    cs: &[CostCoefficients],
    n: u32,
    m: u32,
    params: WeibullParams,
    mode: &SearchMode,
) -> Result<Vec<SensitivityRow>> {
    let reference = mode.run(n, m, params, c0, 0)?;
    let mut rows = Vec::with_capacity(cs.len());
    for (cell, c) in cs.iter().enumerate() {
        let under_c = mode.run(n, m, params, c, cell as u64 + 1)?;
        let cost_at_truth = total_cost(&under_c.best_scheme, params, c0)?;
        rows.push(SensitivityRow {
            perturbed: PerturbedValue::Costs(*c),
            scheme: under_c.best_scheme,
            relative_efficiency: reference.best_cost / cost_at_truth,
        });
    }
    Ok(rows)
}

/// Minimises the cost jointly over the number of failures and the scheme.
/// Returns the best `(m, result)` pair; cost ties go to the smaller `m`.
pub fn optimal_m(
    n: u32,
    params: WeibullParams,
    coeffs: &CostCoefficients,
    mode: &SearchMode,
    m_range: Option<RangeInclusive<u32>>,
) -> Result<(u32, OptimizationResult)> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let range = m_range.unwrap_or(1..=n);
    let (lo, hi) = (*range.start(), *range.end());
    if lo == 0 || hi > n || lo > hi {
        return Err(Error::InvalidArgument(format!(
            "m range {lo}..={hi} outside 1..={n}"
        )));
    }

    let mut best: Option<(u32, OptimizationResult)> = None;
    for (cell, m) in (lo..=hi).enumerate() {
        let result = mode.run(n, m, params, coeffs, cell as u64)?;
        let better = best
            .as_ref()
            .map_or(true, |(_, b)| result.best_cost < b.best_cost);
        if better {
            best = Some((m, result));
        }
    }
    Ok(best.expect("m range is non-empty"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs() -> CostCoefficients {
        CostCoefficients::new(10.0, 50.0, 250.0).unwrap()
    }

    #[test]
    fn re_is_exactly_one_at_the_truth() {
        let rows =
            sensitivity_to_shape(2.0, &[2.0], 15, 5, &coeffs(), &SearchMode::exhaustive()).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].relative_efficiency, 1.0);
        assert!((rows[0].relative_efficiency - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn re_never_exceeds_one_under_exhaustive_search() {
        let rows = sensitivity_to_shape(
            2.0,
            &[1.6, 1.8, 2.0, 2.2, 2.4],
            15,
            5,
            &coeffs(),
            &SearchMode::exhaustive(),
        )
        .unwrap();
        for row in rows {
            assert!(row.relative_efficiency > 0.0);
            assert!(row.relative_efficiency <= 1.0 + 1e-12);
        }
    }

    #[test]
    fn cost_re_matches_the_identity_case() {
        let params = WeibullParams::new(1.0, 1.0).unwrap();
        let rows = sensitivity_to_costs(
            &coeffs(),
            &[coeffs()],
            15,
            5,
            params,
            &SearchMode::exhaustive(),
        )
        .unwrap();
        assert_eq!(rows[0].relative_efficiency, 1.0);
    }

    #[test]
    fn optimal_m_single_design_for_n_1() {
        let params = WeibullParams::new(2.0, 1.0).unwrap();
        let (m, result) = optimal_m(1, params, &coeffs(), &SearchMode::exhaustive(), None).unwrap();
        assert_eq!(m, 1);
        assert_eq!(result.best_scheme.removals(), &[0]);
    }

    #[test]
    fn optimal_m_with_pinned_range_matches_single_m() {
        let params = WeibullParams::new(2.0, 1.0).unwrap();
        let single = crate::search::exhaustive_optimum(10, 4, params, &coeffs()).unwrap();
        let (m, result) =
            optimal_m(10, params, &coeffs(), &SearchMode::exhaustive(), Some(4..=4)).unwrap();
        assert_eq!(m, 4);
        assert_eq!(result.best_scheme, single.best_scheme);
        assert_eq!(result.best_cost, single.best_cost);
    }

    #[test]
    fn rejects_bad_m_range() {
        let params = WeibullParams::new(2.0, 1.0).unwrap();
        assert!(optimal_m(10, params, &coeffs(), &SearchMode::exhaustive(), Some(0..=3)).is_err());
        assert!(optimal_m(10, params, &coeffs(), &SearchMode::exhaustive(), Some(4..=11)).is_err());
    }
}
