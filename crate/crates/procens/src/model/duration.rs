use crate::model::camp_cramer::{camp_cramer_coefficients, CampCramerCoefficients};
use crate::model::params::WeibullParams;
use crate::num::dd::{self, Dd};
use crate::num::gamma::gamma;

/// Expected duration `E[Y_{m:m:n}]` of the experiment:
/// `Gamma(1 + 1/zeta) / rho * sigma_{m-1} sum_k a_{k,m} / gamma_k^(1 + 1/zeta)`.
pub fn expected_duration(scheme: &crate::model::CensoringScheme, params: WeibullParams) -> f64 {
    expected_duration_with(&camp_cramer_coefficients(scheme), params)
}

/// Same as [`expected_duration`] for precomputed coefficients.
pub fn expected_duration_with(coeffs: &CampCramerCoefficients, params: WeibullParams) -> f64 {
    let m = coeffs.m();
    let inv_shape = Dd::from_f64(-1.0 / params.shape());
    let weights = coeffs.level_weights(m);

    // w_k(m) already carries the 1/gamma_k factor, leaving gamma_k^(-1/zeta).
    let mut sum = dd::ZERO;
    for (k, &w) in weights.iter().enumerate() {
        let g = Dd::from_u32(coeffs.gamma()[k]);
        sum = sum + w * (g.ln() * inv_shape).exp();
    }

    let value = gamma(1.0 + 1.0 / params.shape()) / params.scale_rate() * sum.to_f64();
    debug_assert!(value > 0.0, "expected duration must be positive, got {value}");
    value
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::CensoringScheme;

    #[test]
    fn single_unit_means() {
        let scheme = CensoringScheme::new(1, 1, vec![0]).unwrap();
        let exp_mean = expected_duration(&scheme, WeibullParams::new(1.0, 1.0).unwrap());
        assert!((exp_mean - 1.0).abs() < 1e-13);
        let weib_mean = expected_duration(&scheme, WeibullParams::new(2.0, 1.0).unwrap());
        assert!((weib_mean - 0.886_226_925_452_758).abs() < 1e-13);
    }

    #[test]
    fn rate_rescales_duration() {
        let scheme = CensoringScheme::new(20, 5, vec![7, 6, 0, 0, 2]).unwrap();
        let p1 = WeibullParams::new(1.5, 1.0).unwrap();
        let p2 = WeibullParams::new(1.5, 2.0).unwrap();
        let d1 = expected_duration(&scheme, p1);
        let d2 = expected_duration(&scheme, p2);
        assert!((d1 - 2.0 * d2).abs() / d1 < 1e-14);
    }
}
