//! Numeric support: double-double arithmetic, compensated summation, special
//! functions and shared constants.

pub mod dd;
pub mod gamma;
pub mod kahan;

/// Euler-Mascheroni constant in double precision.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_86;

/// Euler-Mascheroni constant as a double-double.
pub const EULER_GAMMA_DD: dd::Dd = dd::Dd::new(0.577_215_664_901_532_9, -4.942_915_152_430_645e-18);

/// pi^2 / 6 as a double-double.
pub const PI2_OVER_6_DD: dd::Dd = dd::Dd::new(1.644_934_066_848_226_4, 3.040_672_350_398_476e-17);
