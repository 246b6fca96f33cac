//! Independent oracles and generators used by the procens test suites.
//!
//! Everything here recomputes its target quantity through a different route
//! than the library under test: quadrature instead of closed forms, exact
//! integer ratios instead of double-double products, Spouge instead of
//! Lanczos, recursive brute force instead of the lexicographic iterator.

pub mod quad;

use rand::Rng;

use procens::model::WeibullParams;
use procens::CensoringScheme;

/// `gamma_r = m - r + 1 + sum_{i >= r} R_i`, recomputed from the removal
/// vector without touching the library's coefficient machinery.
pub fn gammas(scheme: &CensoringScheme) -> Vec<i128> {
    let m = scheme.m() as usize;
    let r = scheme.removals();
    let mut out = vec![0i128; m];
    let mut tail: i128 = 0;
    for i in (0..m).rev() {
        tail += r[i] as i128;
        out[i] = (m - i) as i128 + tail;
    }
    out
}

/// Mixture weights `w_k(i) = prod_{j<=i, j!=k} gamma_j / (gamma_j - gamma_k)`
/// as exact i128 numerator/denominator pairs divided once at the end.
/// Exact while `prod gamma_j < 2^127`, i.e. comfortably for n <= 30, m <= 15.
pub fn exact_level_weights(gamma: &[i128], level: usize) -> Vec<f64> {
    (0..level)
        .map(|k| {
            let mut num: i128 = 1;
            let mut den: i128 = 1;
            for j in 0..level {
                if j != k {
                    num *= gamma[j];
                    den *= gamma[j] - gamma[k];
                }
            }
            num as f64 / den as f64
        })
        .collect()
}

/// Density of `V_i = (rho Y_i)^zeta` at `v` given precomputed level
/// weights: the hypoexponential mixture `sum_k gamma_k w_k exp(-gamma_k v)`,
/// Neumaier-compensated.
pub fn transformed_density(gamma: &[i128], weights: &[f64], v: f64) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for (k, &w) in weights.iter().enumerate() {
        let term = gamma[k] as f64 * w * (-(gamma[k] as f64) * v).exp();
        let t = sum + term;
        if sum.abs() >= term.abs() {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// Fisher information entries by adaptive quadrature over the transformed
/// time, an independent route around the closed-form exponential integrals.
pub fn fisher_by_quadrature(scheme: &CensoringScheme, params: WeibullParams) -> (f64, f64, f64) {
    let gamma = gammas(scheme);
    let m = gamma.len();
    let zeta = params.shape();
    let rho = params.scale_rate();
    let mut s0 = 0.0;
    let mut s1 = 0.0;
    let mut s2 = 0.0;
    for i in 1..=m {
        let w = exact_level_weights(&gamma, i);
        // Density evaluations carry noise of order eps times the summed
        // term magnitudes; tell the quadrature where that floor sits.
        let magnitude: f64 = w.iter().zip(&gamma).map(|(wk, &g)| (wk * g as f64).abs()).sum();
        let floor = 1e-15 * magnitude;
        s0 += quad::integrate_to_inf_with_floor(
            |v| transformed_density(&gamma, &w, v),
            0.0,
            1e-13,
            floor,
        );
        s1 += quad::integrate_to_inf_with_floor(
            |v| (1.0 + v.ln()) * transformed_density(&gamma, &w, v),
            0.0,
            1e-13,
            floor,
        );
        s2 += quad::integrate_to_inf_with_floor(
            |v| (1.0 + v.ln()).powi(2) * transformed_density(&gamma, &w, v),
            0.0,
            1e-13,
            floor,
        );
    }
    (s2 / (zeta * zeta), s1 / rho, (zeta / rho) * (zeta / rho) * s0)
}

/// Largest summed term magnitude of the mixture across levels, a proxy for
/// how much cancellation the scheme's aggregates carry.
pub fn mixture_condition(scheme: &CensoringScheme) -> f64 {
    let gamma = gammas(scheme);
    (1..=gamma.len())
        .map(|i| {
            exact_level_weights(&gamma, i)
                .iter()
                .zip(&gamma)
                .map(|(w, &g)| (w * g as f64).abs())
                .sum::<f64>()
        })
        .fold(0.0, f64::max)
}

/// `int_0^inf (1 + ln(z/g))^p e^{-z} dz` for p in {1, 2} by quadrature;
/// checks the closed forms `c - eg` and `(c - eg)^2 + pi^2/6`.
pub fn inner_integral_by_quadrature(g: f64, power: i32) -> f64 {
    quad::integrate_to_inf(move |z| (1.0 + (z / g).ln()).powi(power) * (-z).exp(), 0.0, 1e-13)
}

/// Uniform scheme over CS(n, m) through the stars-and-bars bijection.
pub fn random_scheme<R: Rng + ?Sized>(n: u32, m: u32, rng: &mut R) -> CensoringScheme {
    let s = n - m;
    if m == 1 {
        return CensoringScheme::new(n, m, vec![s]).unwrap();
    }
    // Choose m-1 distinct bar positions among s + m - 1 slots.
    let slots = (s + m - 1) as usize;
    let mut positions: Vec<usize> = (1..=slots).collect();
    for t in 0..(m - 1) as usize {
        let j = t + rng.gen_range(0..slots - t);
        positions.swap(t, j);
    }
    let mut bars: Vec<usize> = positions[..(m - 1) as usize].to_vec();
    bars.sort_unstable();

    let mut removals = Vec::with_capacity(m as usize);
    let mut prev = 0usize;
    for &b in &bars {
        removals.push((b - prev - 1) as u32);
        prev = b;
    }
    removals.push((slots - prev) as u32);
    CensoringScheme::new(n, m, removals).unwrap()
}

/// Brute-force minimiser by recursive enumeration, independent of the
/// library's composition iterator. Ties keep the first scheme found in
/// recursion order (descending first coordinate).
pub fn naive_exhaustive<F: FnMut(&CensoringScheme) -> f64>(
    n: u32,
    m: u32,
    mut eval: F,
) -> (CensoringScheme, f64) {
    fn recurse<F: FnMut(&CensoringScheme) -> f64>(
        n: u32,
        m: u32,
        prefix: &mut Vec<u32>,
        left: u32,
        eval: &mut F,
        best: &mut Option<(CensoringScheme, f64)>,
    ) {
        if prefix.len() == m as usize - 1 {
            prefix.push(left);
            let scheme = CensoringScheme::new(n, m, prefix.clone()).unwrap();
            let cost = eval(&scheme);
            if best.as_ref().map_or(true, |(_, c)| cost < *c) {
                *best = Some((scheme, cost));
            }
            prefix.pop();
            return;
        }
        for take in (0..=left).rev() {
            prefix.push(take);
            recurse(n, m, prefix, left - take, eval, best);
            prefix.pop();
        }
    }

    let mut best = None;
    if m == 1 {
        let scheme = CensoringScheme::new(n, m, vec![n - m]).unwrap();
        let cost = eval(&scheme);
        return (scheme, cost);
    }
    recurse(n, m, &mut Vec::new(), n - m, &mut eval, &mut best);
    best.expect("non-empty search space")
}

/// Gamma function by Spouge's approximation (a = 13), an algorithm
/// independent of the library's Lanczos evaluation.
pub fn spouge_gamma(z: f64) -> f64 {
    const A: usize = 13;
    let mut acc = (2.0 * std::f64::consts::PI).sqrt();
    let mut factorial = 1.0f64;
    for k in 1..A {
        let kf = k as f64;
        let c = (A as f64 - kf).powf(kf - 0.5) * (A as f64 - kf).exp()
            / (factorial * if k % 2 == 0 { -1.0 } else { 1.0 });
        acc += c / (z - 1.0 + kf);
        factorial *= kf;
    }
    let t = z - 1.0 + A as f64;
    acc * t.powf(z - 0.5) * (-t).exp()
}

/// Mean of the maximum of n i.i.d. Weibull lifetimes via the alternating
/// binomial identity; stable for small n.
pub fn weibull_max_mean(n: u32, params: WeibullParams) -> f64 {
    let zeta = params.shape();
    let rho = params.scale_rate();
    let mut sum = 0.0;
    let mut binom = 1.0f64;
    for k in 1..=n {
        binom = binom * (n - k + 1) as f64 / k as f64;
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        sum += sign * binom * (k as f64).powf(-1.0 / zeta);
    }
    spouge_gamma(1.0 + 1.0 / zeta) / rho * sum
}
