//! Real-coded genetic algorithm over censoring schemes.
//!
//! Individuals are vectors of m non-negative reals. Variation uses the
//! classical real-coded operators (tournament selection, BLX-alpha blend
//! crossover, uniform random mutation); feasibility is restored by the
//! decode step, which scales genes onto the removal simplex and rounds by
//! largest fractional remainder. All randomness is drawn from a single
//! seeded stream, so runs are bit-reproducible.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Hypergeometric};

use crate::cost::CostCoefficients;
use crate::error::{Error, Result};
use crate::model::{CensoringScheme, WeibullParams};
use crate::search::enumerate::scheme_count;
use crate::search::fitness::CostEvaluator;

/// Blends can drift outward over very long flat-fitness runs; decode is
/// invariant to common scaling, so capping genes changes nothing observable.
const GENE_CAP: f64 = 1e12;

/// Hyper-parameters of the genetic search.
#[derive(Clone, Debug)]
pub struct GAConfig {
    pub population_size: usize,
    /// Tournament size k.
    pub tournament_size: usize,
    /// Probability that a selected pair is crossed rather than copied.
    pub crossover_rate: f64,
    /// BLX-alpha blend width.
    pub blend_alpha: f64,
    /// Per-gene probability of replacement by a fresh uniform draw.
    pub mutation_rate: f64,
    pub max_generations: u32,
    /// Stop after this many generations without incumbent improvement.
    pub stagnation_limit: u32,
    /// Individuals carried over unchanged each generation.
    pub elite_count: usize,
    pub seed: u64,
}

impl Default for GAConfig {
    fn default() -> Self {
        GAConfig {
            population_size: 200,
            tournament_size: 4,
            crossover_rate: 0.8,
            blend_alpha: 0.5,
            mutation_rate: 0.1,
            max_generations: 500,
            stagnation_limit: 50,
            elite_count: 1,
            seed: 0,
        }
    }
}

impl GAConfig {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.population_size == 0 {
            return Err(Error::InvalidArgument("population_size must be positive".into()));
        }
        if self.tournament_size == 0 || self.tournament_size > self.population_size {
            return Err(Error::InvalidArgument(format!(
                "tournament_size {} outside 1..={}",
                self.tournament_size, self.population_size
            )));
        }
        if self.elite_count >= self.population_size {
            return Err(Error::InvalidArgument(format!(
                "elite_count {} must be below population_size {}",
                self.elite_count, self.population_size
            )));
        }
        for (name, v) in [("crossover_rate", self.crossover_rate), ("mutation_rate", self.mutation_rate)] {
            if !(v.is_finite() && (0.0..=1.0).contains(&v)) {
                return Err(Error::InvalidArgument(format!("{name} must lie in [0,1], got {v}")));
            }
        }
        if !(self.blend_alpha.is_finite() && self.blend_alpha >= 0.0) {
            return Err(Error::InvalidArgument(format!(
                "blend_alpha must be non-negative, got {}",
                self.blend_alpha
            )));
        }
        if self.max_generations == 0 || self.stagnation_limit == 0 {
            return Err(Error::InvalidArgument(
                "max_generations and stagnation_limit must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Real-coded genotype: m non-negative genes.
#[derive(Clone, Debug, PartialEq)]
pub struct Chromosome {
    pub genes: Vec<f64>,
}

/// Outcome of a search run.
#[derive(Clone, Debug)]
pub struct OptimizationResult {
    pub best_scheme: CensoringScheme,
    pub best_cost: f64,
    pub generations_run: u32,
    /// `(generation, incumbent cost)` pairs; non-increasing in cost.
    pub history: Vec<(u32, f64)>,
    /// Number of cost evaluations actually computed (cache misses).
    pub evaluations: u64,
}

/// Maps a chromosome onto the removal simplex: scale genes to sum to
/// `n - m` (all-zero genes mean a uniform split), floor, then hand out the
/// remaining units by largest fractional remainder, ties to the lowest
/// index.
pub fn decode(chromosome: &Chromosome, n: u32, m: u32) -> CensoringScheme {
    let s = (n - m) as f64;
    let genes = &chromosome.genes;
    debug_assert_eq!(genes.len(), m as usize);
    debug_assert!(genes.iter().all(|g| g.is_finite() && *g >= 0.0));

    let total: f64 = genes.iter().sum();
    let targets: Vec<f64> = if total == 0.0 {
        vec![s / m as f64; m as usize]
    } else {
        genes.iter().map(|g| g * s / total).collect()
    };

    let mut removals: Vec<u32> = targets.iter().map(|t| t.floor() as u32).collect();
    let assigned: u32 = removals.iter().sum();
    let deficit = (n - m) - assigned;

    let mut by_remainder: Vec<usize> = (0..m as usize).collect();
    by_remainder.sort_by(|&a, &b| {
        let ra = targets[a] - targets[a].floor();
        let rb = targets[b] - targets[b].floor();
        rb.total_cmp(&ra).then(a.cmp(&b))
    });
    for &idx in by_remainder.iter().take(deficit as usize) {
        removals[idx] += 1;
    }

    CensoringScheme::new(n, m, removals).expect("decode output is feasible by construction")
}

/// Draws one removal vector from the multivariate hypergeometric
/// distribution with `n - m` draws over `m` categories of `n - m` items
/// each, by sequential conditional sampling.
fn hypergeometric_removals<R: Rng>(n: u32, m: u32, rng: &mut R) -> Vec<u32> {
    let mut removals = vec![0u32; m as usize];
    let category = (n - m) as u64;
    let mut remaining_draws = (n - m) as u64;
    for i in 0..m as usize {
        if remaining_draws == 0 {
            break;
        }
        let remaining_categories = (m as usize - i) as u64;
        if remaining_categories == 1 {
            removals[i] = remaining_draws as u32;
            break;
        }
        let dist = Hypergeometric::new(remaining_categories * category, category, remaining_draws)
            .expect("valid hypergeometric parameters");
        let x = dist.sample(rng);
        removals[i] = x as u32;
        remaining_draws -= x;
    }
    removals
}

fn population_from_rng<R: Rng>(n: u32, m: u32, size: usize, rng: &mut R) -> Vec<Chromosome> {
    (0..size)
        .map(|_| Chromosome {
            genes: hypergeometric_removals(n, m, rng).iter().map(|&r| r as f64).collect(),
        })
        .collect()
}

/// Initial population of integer schemes (cast to reals), seeded
/// deterministically from `config.seed`.
pub fn init_population(n: u32, m: u32, config: &GAConfig) -> Vec<Chromosome> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    population_from_rng(n, m, config.population_size, &mut rng)
}

/// Index of the fittest candidate, ties broken by the lowest index.
pub fn tournament_winner(fitness: &[f64], candidates: &[usize]) -> usize {
    let mut best = candidates[0];
    for &c in &candidates[1..] {
        if fitness[c] > fitness[best] || (fitness[c] == fitness[best] && c < best) {
            best = c;
        }
    }
    best
}

/// Draws `k` distinct individuals uniformly without replacement and returns
/// the fittest.
pub fn tournament_select<R: Rng>(fitness: &[f64], k: usize, rng: &mut R) -> usize {
    let n = fitness.len();
    debug_assert!(k >= 1 && k <= n);
    let mut idx: Vec<usize> = (0..n).collect();
    for t in 0..k {
        let j = t + rng.gen_range(0..n - t);
        idx.swap(t, j);
    }
    tournament_winner(fitness, &idx[..k])
}

/// BLX-alpha blend of one gene pair for a given uniform draw `r`:
/// `g = (1 + 2 alpha) r - alpha`, children at `(1-g) p + g q` and its mirror.
pub fn blx_blend(p1: f64, p2: f64, alpha: f64, r: f64) -> (f64, f64) {
    let g = (1.0 + 2.0 * alpha) * r - alpha;
    ((1.0 - g) * p1 + g * p2, (1.0 - g) * p2 + g * p1)
}

/// BLX-alpha crossover with one uniform draw per gene position. Negative
/// blends are clamped to zero.
pub fn blx_crossover<R: Rng>(
    p1: &Chromosome,
    p2: &Chromosome,
    alpha: f64,
    rng: &mut R,
) -> (Chromosome, Chromosome) {
    debug_assert_eq!(p1.genes.len(), p2.genes.len());
    let mut c1 = Vec::with_capacity(p1.genes.len());
    let mut c2 = Vec::with_capacity(p1.genes.len());
    for (&a, &b) in p1.genes.iter().zip(&p2.genes) {
        let r: f64 = rng.gen();
        let (x, y) = blx_blend(a, b, alpha, r);
        c1.push(x.clamp(0.0, GENE_CAP));
        c2.push(y.clamp(0.0, GENE_CAP));
    }
    (Chromosome { genes: c1 }, Chromosome { genes: c2 })
}

/// Replaces each gene, independently with probability `mutation_rate`, by a
/// fresh draw from Uniform(0, n - m).
pub fn uniform_mutation<R: Rng>(
    chromosome: &Chromosome,
    n: u32,
    m: u32,
    mutation_rate: f64,
    rng: &mut R,
) -> Chromosome {
    let upper = (n - m) as f64;
    let genes = chromosome
        .genes
        .iter()
        .map(|&g| {
            if rng.gen::<f64>() < mutation_rate {
                rng.gen::<f64>() * upper
            } else {
                g
            }
        })
        .collect();
    Chromosome { genes }
}

fn evaluate_all(
    population: &[Chromosome],
    n: u32,
    m: u32,
    eval: &mut CostEvaluator,
) -> Result<Vec<f64>> {
    let mut costs = Vec::with_capacity(population.len());
    let mut any_finite = false;
    for chrom in population {
        let scheme = decode(chrom, n, m);
        let c = match eval.eval(&scheme) {
            Ok(c) => c,
            Err(Error::SingularInformation) => f64::INFINITY,
            Err(e) => return Err(e),
        };
        any_finite |= c.is_finite();
        costs.push(c);
    }
    if !any_finite {
        return Err(Error::OptimizationFailed(
            "every candidate in the generation failed evaluation".into(),
        ));
    }
    Ok(costs)
}

fn best_index(costs: &[f64]) -> usize {
    let mut best = 0;
    for (i, &c) in costs.iter().enumerate().skip(1) {
        if c < costs[best] {
            best = i;
        }
    }
    best
}

/// Runs the generational GA and returns the incumbent scheme with its
/// convergence history. Identical inputs (including the seed) give an
/// identical result.
pub fn ga_optimize(
    n: u32,
    m: u32,
    params: WeibullParams,
    coeffs: &CostCoefficients,
    config: &GAConfig,
) -> Result<OptimizationResult> {
    config.validate()?;
    let space = scheme_count(n, m)?;
    let mut eval = CostEvaluator::new(n, m, params, *coeffs);

    if space == 1 {
        let mut removals = vec![0u32; m as usize];
        if m >= 1 {
            removals[0] = n - m;
        }
        let scheme = CensoringScheme::new(n, m, removals)?;
        let cost = eval.eval(&scheme)?;
        return Ok(OptimizationResult {
            best_scheme: scheme,
            best_cost: cost,
            generations_run: 1,
            history: vec![(0, cost)],
            evaluations: eval.evaluations(),
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut population = population_from_rng(n, m, config.population_size, &mut rng);
    let mut costs = evaluate_all(&population, n, m, &mut eval)?;

    let start = best_index(&costs);
    let mut incumbent_scheme = decode(&population[start], n, m);
    let mut incumbent_cost = costs[start];
    let mut history = vec![(0u32, incumbent_cost)];
    let mut stagnant = 0u32;
    let mut generations_run = 0u32;

    for generation in 1..=config.max_generations {
        let mut order: Vec<usize> = (0..population.len()).collect();
        order.sort_by(|&a, &b| costs[a].total_cmp(&costs[b]).then(a.cmp(&b)));
        let mut next: Vec<Chromosome> = order
            .iter()
            .take(config.elite_count)
            .map(|&i| population[i].clone())
            .collect();

        let fitness: Vec<f64> = costs.iter().map(|&c| -c).collect();
        while next.len() < config.population_size {
            let i1 = tournament_select(&fitness, config.tournament_size, &mut rng);
            let i2 = tournament_select(&fitness, config.tournament_size, &mut rng);
            let (c1, c2) = if rng.gen::<f64>() < config.crossover_rate {
                blx_crossover(&population[i1], &population[i2], config.blend_alpha, &mut rng)
            } else {
                (population[i1].clone(), population[i2].clone())
            };
            next.push(uniform_mutation(&c1, n, m, config.mutation_rate, &mut rng));
            if next.len() < config.population_size {
                next.push(uniform_mutation(&c2, n, m, config.mutation_rate, &mut rng));
            }
        }

        population = next;
        costs = evaluate_all(&population, n, m, &mut eval)?;
        let gen_best = best_index(&costs);
        if costs[gen_best] < incumbent_cost {
            incumbent_cost = costs[gen_best];
            incumbent_scheme = decode(&population[gen_best], n, m);
            stagnant = 0;
        } else {
            stagnant += 1;
        }
        history.push((generation, incumbent_cost));
        generations_run = generation;
        if stagnant >= config.stagnation_limit {
            break;
        }
    }

    Ok(OptimizationResult {
        best_scheme: incumbent_scheme,
        best_cost: incumbent_cost,
        generations_run,
        history,
        evaluations: eval.evaluations(),
    })
}
