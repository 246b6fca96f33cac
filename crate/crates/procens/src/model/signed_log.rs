/// A real number carried as `sign * exp(log_magnitude)`.
///
/// The mixture coefficients of censored order statistics overflow `f64`
/// well before the sample sizes of interest (the level-`m` normaliser
/// reaches ~1e27 at n = 65, m = 15), so they are stored and combined in
/// log space and only materialised inside guarded summations.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SignedLogValue {
    sign: i8,
    log_magnitude: f64,
}

impl SignedLogValue {
    /// `sign` must be -1, 0 or +1; the magnitude is ignored for sign 0.
    pub fn new(sign: i8, log_magnitude: f64) -> Self {
        assert!(sign == -1 || sign == 0 || sign == 1, "sign must be in {{-1, 0, +1}}");
        if sign == 0 {
            SignedLogValue { sign: 0, log_magnitude: f64::NEG_INFINITY }
        } else {
            SignedLogValue { sign, log_magnitude }
        }
    }

    pub fn zero() -> Self {
        SignedLogValue { sign: 0, log_magnitude: f64::NEG_INFINITY }
    }

    pub fn from_value(v: f64) -> Self {
        if v == 0.0 {
            Self::zero()
        } else {
            SignedLogValue { sign: if v < 0.0 { -1 } else { 1 }, log_magnitude: v.abs().ln() }
        }
    }

    /// Materialise `sign * exp(log_magnitude)`.
    pub fn value(&self) -> f64 {
        match self.sign {
            0 => 0.0,
            s => s as f64 * self.log_magnitude.exp(),
        }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn log_magnitude(&self) -> f64 {
        self.log_magnitude
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn zero_and_unit() {
        assert_eq!(SignedLogValue::zero().value(), 0.0);
        assert_eq!(SignedLogValue::new(1, 0.0).value(), 1.0);
        assert_eq!(SignedLogValue::new(-1, 0.0).value(), -1.0);
        assert_eq!(SignedLogValue::from_value(0.0).sign(), 0);
    }

    proptest! {
        // Materialise-then-re-encode is stable. Bitwise idempotence is not
        // achievable (exp(ln(x)) drifts by up to |ln x| ulps), so the
        // round trip is pinned to that bound instead.
        #[test]
        fn round_trip_is_stable(v in -1e30f64..1e30) {
            let once = SignedLogValue::from_value(v).value();
            let twice = SignedLogValue::from_value(once).value();
            let tol = 1e-13 * once.abs().max(f64::MIN_POSITIVE);
            prop_assert!((twice - once).abs() <= tol);
        }
    }
}
