use crate::error::{Error, Result};
use crate::model::camp_cramer::CampCramerCoefficients;
use crate::model::params::WeibullParams;
use crate::num::dd::{self, Dd};

/// Density of the i-th censored order statistic (1-based `i`) at time `y`.
///
/// Evaluates `sigma_{i-1} sum_k a_{k,i} (1-F(y))^{gamma_k - 1} f(y)` with the
/// alternating sum materialised and accumulated in double-double, terms in
/// decreasing-gamma order.
pub fn censored_order_density(
    y: f64,
    i: usize,
    coeffs: &CampCramerCoefficients,
    params: WeibullParams,
) -> Result<f64> {
    if i == 0 || i > coeffs.m() {
        return Err(Error::InvalidArgument(format!(
            "order statistic index {i} outside 1..={}",
            coeffs.m()
        )));
    }
    if !(y.is_finite() && y > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "density requires a positive finite time, got {y}"
        )));
    }

    // u = (rho y)^zeta, so (1-F)^(g-1) = exp(-(g-1) u).
    let ry = params.scale_rate() * y;
    let u = (Dd::from_f64(ry).ln() * Dd::from_f64(params.shape())).exp();

    let mut mixture = dd::ZERO;
    let weights = coeffs.level_weights(i);
    for (k, &w) in weights.iter().enumerate() {
        let g = coeffs.gamma()[k] as f64;
        let survival_pow = (u * Dd::from_f64(-(g - 1.0))).exp();
        mixture = mixture + w * Dd::from_f64(g) * survival_pow;
    }

    let pdf = params.shape() * params.scale_rate() * ry.powf(params.shape() - 1.0)
        * (-u.to_f64()).exp();
    Ok((mixture.to_f64() * pdf).max(0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::camp_cramer::camp_cramer_coefficients;
    use crate::model::scheme::CensoringScheme;

    #[test]
    fn single_unit_reduces_to_exponential() {
        let scheme = CensoringScheme::new(1, 1, vec![0]).unwrap();
        let coeffs = camp_cramer_coefficients(&scheme);
        let params = WeibullParams::new(1.0, 1.0).unwrap();
        let d = censored_order_density(1.0, 1, &coeffs, params).unwrap();
        assert!((d - (-1.0f64).exp()).abs() < 1e-14);
    }

    #[test]
    fn first_order_statistic_is_minimum_of_n() {
        // i = 1 collapses to n (1-F)^(n-1) f.
        let scheme = CensoringScheme::new(15, 5, vec![3, 3, 0, 0, 4]).unwrap();
        let coeffs = camp_cramer_coefficients(&scheme);
        let params = WeibullParams::new(2.0, 1.0).unwrap();
        for y in [0.05, 0.2, 0.5, 1.0] {
            let d = censored_order_density(y, 1, &coeffs, params).unwrap();
            let expect = 15.0 * (1.0 - params.cdf(y)).powi(14) * params.pdf(y);
            assert!((d - expect).abs() <= 1e-12 * expect.max(1.0));
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let scheme = CensoringScheme::new(15, 5, vec![3, 3, 0, 0, 4]).unwrap();
        let coeffs = camp_cramer_coefficients(&scheme);
        let params = WeibullParams::new(2.0, 1.0).unwrap();
        assert!(censored_order_density(1.0, 0, &coeffs, params).is_err());
        assert!(censored_order_density(1.0, 6, &coeffs, params).is_err());
        assert!(censored_order_density(-1.0, 1, &coeffs, params).is_err());
        assert!(censored_order_density(0.0, 1, &coeffs, params).is_err());
    }
}
