//! Monte Carlo oracle: simulates progressively Type-II censored Weibull
//! experiments through the exponential-spacings construction.
//!
//! With `gamma_j` units on test before the j-th failure, the transformed
//! times `V_i = (rho Y_i)^zeta` are partial sums of independent
//! `Exp(1)/gamma_j` spacings, so one experiment costs O(m) draws instead of
//! simulating all n lifetimes and removals.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::Exp1;

use crate::error::{Error, Result};
use crate::model::{camp_cramer_coefficients, CensoringScheme, WeibullParams};

/// One simulated experiment: the m ordered failure times.
#[derive(Clone, Debug)]
pub struct SimulatedExperiment {
    failure_times: Vec<f64>,
    scheme: CensoringScheme,
    seed: u64,
}

impl SimulatedExperiment {
    pub fn failure_times(&self) -> &[f64] {
        &self.failure_times
    }

    pub fn scheme(&self) -> &CensoringScheme {
        &self.scheme
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

/// Draws the m failure times of one experiment from an existing stream.
pub fn sample_failure_times<R: Rng + ?Sized>(
    scheme: &CensoringScheme,
    params: WeibullParams,
    rng: &mut R,
) -> Vec<f64> {
    let gamma = camp_cramer_coefficients(scheme).gamma().to_vec();
    let mut v = 0.0_f64;
    let mut times = Vec::with_capacity(gamma.len());
    for &g in &gamma {
        let z: f64 = rng.sample(Exp1);
        v += z / g as f64;
        times.push(v.powf(1.0 / params.shape()) / params.scale_rate());
    }
    debug_assert!(times.windows(2).all(|w| w[0] < w[1]), "ties in simulated times");
    times
}

/// Runs one seeded experiment and records the seed with the draw.
pub fn generate_experiment(
    scheme: &CensoringScheme,
    params: WeibullParams,
    seed: u64,
) -> SimulatedExperiment {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    SimulatedExperiment {
        failure_times: sample_failure_times(scheme, params, &mut rng),
        scheme: scheme.clone(),
        seed,
    }
}

/// Streaming mean and scatter (Welford), mergeable across workers.
#[derive(Clone, Copy, Debug, Default)]
struct RunningMoments {
    count: u64,
    mean: f64,
    m2: f64,
}

impl RunningMoments {
    fn push(&mut self, x: f64) {
        self.count += 1;
        let d = x - self.mean;
        self.mean += d / self.count as f64;
        self.m2 += d * (x - self.mean);
    }

    fn merge(self, other: RunningMoments) -> RunningMoments {
        if self.count == 0 {
            return other;
        }
        if other.count == 0 {
            return self;
        }
        let count = self.count + other.count;
        let d = other.mean - self.mean;
        RunningMoments {
            count,
            mean: self.mean + d * other.count as f64 / count as f64,
            m2: self.m2 + other.m2 + d * d * self.count as f64 * other.count as f64 / count as f64,
        }
    }

    fn standard_error(&self) -> f64 {
        (self.m2 / (self.count as f64 - 1.0) / self.count as f64).sqrt()
    }
}

/// Sample mean and standard error of the experiment duration `Y_{m:m:n}`
/// over seeded replications, on a single worker.
pub fn monte_carlo_duration(
    scheme: &CensoringScheme,
    params: WeibullParams,
    replications: u64,
    seed: u64,
) -> Result<(f64, f64)> {
    monte_carlo_duration_workers(scheme, params, replications, seed, 1)
}

/// Multi-worker variant: replications split into contiguous chunks, one
/// derived ChaCha stream per worker, partial moments merged in worker
/// order. Fixed `(seed, replications, workers)` is deterministic.
pub fn monte_carlo_duration_workers(
    scheme: &CensoringScheme,
    params: WeibullParams,
    replications: u64,
    seed: u64,
    workers: usize,
) -> Result<(f64, f64)> {
    if replications < 1_000 {
        return Err(Error::InvalidArgument(format!(
            "need at least 1000 replications, got {replications}"
        )));
    }
    if workers == 0 {
        return Err(Error::InvalidArgument("worker count must be positive".into()));
    }

    let gamma: Vec<f64> = camp_cramer_coefficients(scheme)
        .gamma()
        .iter()
        .map(|&g| g as f64)
        .collect();
    let inv_shape = 1.0 / params.shape();
    let rho = params.scale_rate();

    let simulate_chunk = |worker: u64, count: u64| -> RunningMoments {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(worker);
        let mut acc = RunningMoments::default();
        for _ in 0..count {
            let mut v = 0.0_f64;
            for &g in &gamma {
                let z: f64 = rng.sample(Exp1);
                v += z / g;
            }
            acc.push(v.powf(inv_shape) / rho);
        }
        acc
    };

    let workers = workers.min(replications as usize);
    let base = replications / workers as u64;
    let extra = replications % workers as u64;
    let chunk = |w: u64| base + u64::from(w < extra);

    let total = if workers == 1 {
        simulate_chunk(0, replications)
    } else {
        let partials: Vec<RunningMoments> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers as u64)
                .map(|w| scope.spawn(move || simulate_chunk(w, chunk(w))))
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        });
        partials.into_iter().fold(RunningMoments::default(), RunningMoments::merge)
    };

    Ok((total.mean, total.standard_error()))
}
