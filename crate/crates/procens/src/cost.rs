//! The total-cost utility of a life test and its scale transformation.
//!
//! `cost(R) = k1 m + k2 E[Y_{m:m:n}] + k3 int_0^1 Var[ln Y_p] dp`.
//!
//! Measuring lifetimes in different units (`Y* = w Y`, i.e. rate `rho/w`)
//! leaves the cost of every scheme unchanged once the per-time coefficient
//! is rescaled to `k2/w`, so minimisers can fix `rho = 1` without loss.

use crate::error::{Error, Result};
use crate::model::{
    camp_cramer_coefficients, expected_duration_with, integrated_quantile_log_variance_with,
    CensoringScheme, WeibullParams,
};

/// Cost coefficients: per observed failure, per unit of test time, and per
/// unit of estimator imprecision.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CostCoefficients {
    k1: f64,
    k2: f64,
    k3: f64,
}

impl CostCoefficients {
    pub fn new(k1: f64, k2: f64, k3: f64) -> Result<Self> {
        for (name, v) in [("k1", k1), ("k2", k2), ("k3", k3)] {
            if !(v.is_finite() && v >= 0.0) {
                return Err(Error::InvalidArgument(format!(
                    "{name} must be finite and non-negative, got {v}"
                )));
            }
        }
        if k1 == 0.0 && k2 == 0.0 && k3 == 0.0 {
            return Err(Error::InvalidArgument(
                "at least one cost coefficient must be positive".into(),
            ));
        }
        Ok(CostCoefficients { k1, k2, k3 })
    }

    pub fn k1(&self) -> f64 {
        self.k1
    }

    pub fn k2(&self) -> f64 {
        self.k2
    }

    pub fn k3(&self) -> f64 {
        self.k3
    }
}

/// Total cost of running `scheme` under `params` with coefficients `coeffs`.
pub fn total_cost(
    scheme: &CensoringScheme,
    params: WeibullParams,
    coeffs: &CostCoefficients,
) -> Result<f64> {
    let cc = camp_cramer_coefficients(scheme);
    let duration = expected_duration_with(&cc, params);
    let variance = integrated_quantile_log_variance_with(&cc, params)?;
    Ok(coeffs.k1 * scheme.m() as f64 + coeffs.k2 * duration + coeffs.k3 * variance)
}

/// Rescales the problem to lifetimes measured in `w`-times-larger units:
/// rate `rho/w` and time cost `k2/w`. Total cost is invariant under this
/// transformation for every scheme.
///
/// Panics if `w` is not a positive finite number.
pub fn scale_transform(
    params: WeibullParams,
    coeffs: &CostCoefficients,
    w: f64,
) -> (WeibullParams, CostCoefficients) {
    assert!(w.is_finite() && w > 0.0, "scale factor must be positive, got {w}");
    let params = WeibullParams::new(params.shape(), params.scale_rate() / w)
        .expect("positive rate stays positive under scaling");
    let coeffs = CostCoefficients::new(coeffs.k1, coeffs.k2 / w, coeffs.k3)
        .expect("coefficient signs are preserved under scaling");
    (params, coeffs)
}
