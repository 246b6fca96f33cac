use std::collections::HashMap;

use crate::cost::{total_cost, CostCoefficients};
use crate::error::{Error, Result};
use crate::model::{CensoringScheme, WeibullParams};

/// Cost evaluator with per-scheme memoisation. Decoding is many-to-one, so
/// a genetic run revisits the same scheme constantly; caching avoids
/// re-paying the Fisher assembly. `evaluations` counts cache misses, i.e.
/// actual cost computations.
pub(crate) struct CostEvaluator {
    n: u32,
    m: u32,
    params: WeibullParams,
    coeffs: CostCoefficients,
    cache: HashMap<Vec<u32>, f64>,
    evaluations: u64,
}

impl CostEvaluator {
    pub fn new(n: u32, m: u32, params: WeibullParams, coeffs: CostCoefficients) -> Self {
        CostEvaluator { n, m, params, coeffs, cache: HashMap::new(), evaluations: 0 }
    }

    /// Total cost of `scheme`, memoised. Numerically singular schemes come
    /// back as `Err(SingularInformation)`; other errors indicate bugs.
    pub fn eval(&mut self, scheme: &CensoringScheme) -> Result<f64> {
        debug_assert_eq!(scheme.n(), self.n);
        debug_assert_eq!(scheme.m(), self.m);
        debug_assert_eq!(
            scheme.removals().iter().sum::<u32>(),
            self.n - self.m,
            "evaluated scheme violates the removal-sum invariant"
        );
        if let Some(&c) = self.cache.get(scheme.removals()) {
            return Ok(c);
        }
        let c = total_cost(scheme, self.params, &self.coeffs)?;
        if !c.is_finite() {
            return Err(Error::SingularInformation);
        }
        self.evaluations += 1;
        self.cache.insert(scheme.removals().to_vec(), c);
        Ok(c)
    }

    pub fn evaluations(&self) -> u64 {
        self.evaluations
    }
}
