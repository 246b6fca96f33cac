use crate::error::{Error, Result};

/// Weibull lifetime parameters in the rate parameterisation
/// `F(y) = 1 - exp(-(rho * y)^zeta)`.
///
/// `scale_rate` is a rate (1/time). Callers working with the common scale
/// parameterisation `lambda` should pass `rho = 1 / lambda`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WeibullParams {
    shape: f64,
    scale_rate: f64,
}

impl WeibullParams {
    pub fn new(shape: f64, scale_rate: f64) -> Result<Self> {
        if !(shape.is_finite() && shape > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "shape must be finite and positive, got {shape}"
            )));
        }
        if !(scale_rate.is_finite() && scale_rate > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "scale_rate must be finite and positive, got {scale_rate}"
            )));
        }
        Ok(WeibullParams { shape, scale_rate })
    }

    pub fn shape(&self) -> f64 {
        self.shape
    }

    pub fn scale_rate(&self) -> f64 {
        self.scale_rate
    }

    /// Distribution function at `y >= 0`.
    pub fn cdf(&self, y: f64) -> f64 {
        1.0 - (-(self.scale_rate * y).powf(self.shape)).exp()
    }

    /// Density at `y > 0`.
    pub fn pdf(&self, y: f64) -> f64 {
        let u = (self.scale_rate * y).powf(self.shape);
        self.shape * self.scale_rate * (self.scale_rate * y).powf(self.shape - 1.0) * (-u).exp()
    }
}
