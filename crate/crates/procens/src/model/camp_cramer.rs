//! Camp-Cramer representation of progressively Type-II censored order
//! statistics.
//!
//! For a scheme with removal counts `R_1..R_m` define
//!
//! ```text
//! gamma_r   = m - r + 1 + sum_{i=r..m} R_i      (units still on test)
//! sigma_{r-1} = prod_{i=1..r} gamma_i
//! a_{k,i}   = prod_{j<=i, j!=k} 1 / (gamma_j - gamma_k)
//! ```
//!
//! The density of the i-th censored order statistic is then the signed
//! mixture `sigma_{i-1} sum_k a_{k,i} (1-F)^{gamma_k - 1} f`. Because the
//! gamma sequence is strictly decreasing, all denominators are non-zero and
//! the sign of `a_{k,i}` is `(-1)^(i-k)`.
//!
//! Every aggregate this module feeds (normalisation, Fisher entries,
//! expected duration) is a hugely cancelling alternating sum: at n = 65,
//! m = 15 the individual terms reach 1e17 while the total is O(1). The
//! aggregation path therefore forms each weight
//!
//! ```text
//! w_k(i) = sigma_{i-1} a_{k,i} / gamma_k
//!        = prod_{j<=i, j!=k} gamma_j / (gamma_j - gamma_k)
//! ```
//!
//! as a double-double product of exact integer ratios and accumulates in
//! double-double, which keeps the normalisation identity below 1e-12 even
//! for the worst clustered schemes. The `SignedLogValue` fields hold the
//! conventional log-space representation of `sigma` and `a` for inspection
//! and for the density path.

use crate::error::Result;
use crate::model::scheme::CensoringScheme;
use crate::model::signed_log::SignedLogValue;
use crate::num::dd::{self, Dd};
use crate::num::kahan::CompensatedSum;

/// Coefficients of the Camp-Cramer mixture for one censoring scheme.
#[derive(Clone, Debug)]
pub struct CampCramerCoefficients {
    gamma: Vec<u32>,
    sigma: Vec<SignedLogValue>,
    a: Vec<Vec<SignedLogValue>>,
}

/// Computes gamma, sigma and the triangular `a` array for a valid scheme.
pub fn camp_cramer_coefficients(scheme: &CensoringScheme) -> CampCramerCoefficients {
    let m = scheme.m() as usize;
    let removals = scheme.removals();

    // gamma_r = m - r + 1 + suffix removal sum, built back to front.
    let mut gamma = vec![0u32; m];
    let mut tail: u32 = 0;
    for r in (0..m).rev() {
        tail += removals[r];
        gamma[r] = (m - r) as u32 + tail;
    }
    debug_assert_eq!(gamma[0], scheme.n());
    debug_assert!(gamma.windows(2).all(|w| w[0] > w[1]));

    let mut log_sigma = 0.0;
    let mut sigma = Vec::with_capacity(m);
    for &g in &gamma {
        log_sigma += (g as f64).ln();
        sigma.push(SignedLogValue::new(1, log_sigma));
    }

    let mut a = Vec::with_capacity(m);
    for i in 1..=m {
        let mut row = Vec::with_capacity(i);
        for k in 1..=i {
            let mut log_abs = CompensatedSum::new();
            for j in 1..=i {
                if j != k {
                    let diff = gamma[j - 1] as f64 - gamma[k - 1] as f64;
                    log_abs.add(-diff.abs().ln());
                }
            }
            let sign = if (i - k) % 2 == 0 { 1 } else { -1 };
            row.push(SignedLogValue::new(sign, log_abs.value()));
        }
        a.push(row);
    }

    CampCramerCoefficients { gamma, sigma, a }
}

impl CampCramerCoefficients {
    pub fn m(&self) -> usize {
        self.gamma.len()
    }

    /// `gamma_1..gamma_m`, strictly decreasing with `gamma_1 = n`.
    pub fn gamma(&self) -> &[u32] {
        &self.gamma
    }

    /// `sigma_{r-1} = prod_{i=1..r} gamma_i` for `r` in `1..=m`.
    pub fn sigma(&self, r: usize) -> SignedLogValue {
        self.sigma[r - 1]
    }

    /// `a_{k,i}` for `1 <= k <= i <= m`.
    pub fn a(&self, k: usize, i: usize) -> SignedLogValue {
        self.a[i - 1][k - 1]
    }

    /// `sigma_{i-1} sum_k a_{k,i} / gamma_k`, which is exactly 1 for every
    /// level of a valid scheme. Exposed so callers can check how much of
    /// that identity survives the arithmetic.
    pub fn normalization(&self, i: usize) -> Result<f64> {
        self.check_level(i)?;
        let w = self.level_weights(i);
        let mut s = dd::ZERO;
        for &wk in &w {
            s = s + wk;
        }
        Ok(s.to_f64())
    }

    fn check_level(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.m() {
            return Err(crate::error::Error::InvalidArgument(format!(
                "order statistic index {i} outside 1..={}",
                self.m()
            )));
        }
        Ok(())
    }

    /// Mixture weights `w_k(i) = sigma_{i-1} a_{k,i} / gamma_k` for
    /// `k = 1..=i`, in decreasing-gamma order, as double-double products of
    /// exact integer ratios.
    pub(crate) fn level_weights(&self, i: usize) -> Vec<Dd> {
        debug_assert!(i >= 1 && i <= self.m());
        let mut w: Vec<Dd> = Vec::with_capacity(i);
        for level in 0..i {
            let gi = self.gamma[level] as f64;
            for (k, wk) in w.iter_mut().enumerate() {
                let gk = self.gamma[k] as f64;
                *wk = *wk * Dd::ratio(gi, gi - gk);
            }
            let mut fresh = dd::ONE;
            for j in 0..level {
                let gj = self.gamma[j] as f64;
                fresh = fresh * Dd::ratio(gj, gj - gi);
            }
            w.push(fresh);
        }
        w
    }

    /// Visits every level `i = 1..=m` with its weight vector, sharing the
    /// incremental products across levels.
    pub(crate) fn for_each_level(&self, mut visit: impl FnMut(usize, &[Dd])) {
        let m = self.m();
        let mut w: Vec<Dd> = Vec::with_capacity(m);
        for level in 0..m {
            let gi = self.gamma[level] as f64;
            for (k, wk) in w.iter_mut().enumerate() {
                let gk = self.gamma[k] as f64;
                *wk = *wk * Dd::ratio(gi, gi - gk);
            }
            let mut fresh = dd::ONE;
            for j in 0..level {
                let gj = self.gamma[j] as f64;
                fresh = fresh * Dd::ratio(gj, gj - gi);
            }
            w.push(fresh);
            visit(level + 1, &w);
        }
    }
}
