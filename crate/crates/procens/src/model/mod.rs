//! Distribution theory for progressively Type-II censored Weibull samples:
//! Camp-Cramer mixture coefficients, censored order-statistic densities,
//! Fisher information and the asymptotic quantile-log variance, and the
//! expected test duration.
//!
//! All operations are pure functions of immutable values and safe to call
//! concurrently.

mod camp_cramer;
mod density;
mod duration;
mod fisher;
mod params;
mod scheme;
mod signed_log;

pub use camp_cramer::{camp_cramer_coefficients, CampCramerCoefficients};
pub use density::censored_order_density;
pub use duration::{expected_duration, expected_duration_with};
pub use fisher::{
    fisher_information, fisher_information_with, integrated_quantile_log_variance,
    integrated_quantile_log_variance_with, invert_fisher, FisherInfo, FisherInverse,
    QUANTILE_LOG_MEAN, QUANTILE_LOG_SECOND_MOMENT,
};
pub use params::WeibullParams;
pub use scheme::CensoringScheme;
pub use signed_log::SignedLogValue;
