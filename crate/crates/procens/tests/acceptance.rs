//! Acceptance suite: one test per criterion clause, each printing a PASS
//! line with the measured numbers (run with `--nocapture` to see them).
//!
//! Criteria that compare against published reference tables are split in
//! two where the reference mixes self-consistent values with values that
//! are inconsistent with the cost functional itself (their printed costs
//! lie below the attainable minimum of the space they refer to, as the
//! exhaustive oracle here shows). The inconsistent clauses are asserted
//! verbatim anyway and fail with the measured values; the failure messages
//! state the attainable optimum alongside the reported target.

use std::time::Instant;

use procens::analysis::{optimal_m, sensitivity_to_costs, sensitivity_to_shape, SearchMode};
use procens::model::{
    expected_duration, fisher_information, QUANTILE_LOG_MEAN, QUANTILE_LOG_SECOND_MOMENT,
};
use procens::search::{
    blx_blend, exhaustive_optimum, ga_optimize, tournament_winner, uniform_mutation, Chromosome,
    GAConfig,
};
use procens::sim::monte_carlo_duration;
use procens::{
    scale_transform, total_cost, CensoringScheme, CostCoefficients, WeibullParams,
};
use procens_testkit::{fisher_by_quadrature, quad, random_scheme};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn coeffs() -> CostCoefficients {
    CostCoefficients::new(10.0, 50.0, 250.0).unwrap()
}

fn params(zeta: f64, rho: f64) -> WeibullParams {
    WeibullParams::new(zeta, rho).unwrap()
}

fn scheme(n: u32, m: u32, r: &[u32]) -> CensoringScheme {
    CensoringScheme::new(n, m, r.to_vec()).unwrap()
}

/// Slack for values printed with four decimals.
const PRINTED: f64 = 1e-4;

#[test]
fn criterion_01_cost_regression_consistent_reference_values() {
    let start = Instant::now();
    let cases = [
        (scheme(15, 5, &[0, 0, 0, 0, 10]), 2.0, 110.433),
        (scheme(15, 5, &[0, 7, 0, 0, 3]), 0.5, 476.177),
    ];
    for (s, zeta, target) in &cases {
        let cost = total_cost(s, params(*zeta, 1.0), &coeffs()).unwrap();
        assert!(
            (cost - target).abs() / target <= 5e-3,
            "scheme {:?} at shape {zeta}: cost {cost} vs reported {target}",
            s.removals()
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "criterion 1 took {elapsed:?}");
    println!("[criterion 1 / consistent rows] PASS: both reference costs within 0.5% in {elapsed:?}");
}

#[test]
fn criterion_01_cost_regression_inconsistent_reference_values() {
    // These two reported costs lie below the exhaustive minimum of CS(15,5)
    // for their parameter rows (110.4353 and 476.1992), so no cost
    // functional consistent with the passing rows can reproduce them.
    for (s, zeta, target) in [
        (scheme(15, 5, &[3, 3, 0, 0, 4]), 2.0, 107.0203),
        (scheme(15, 5, &[5, 4, 0, 0, 1]), 0.5, 438.9402),
    ] {
        let cost = total_cost(&s, params(zeta, 1.0), &coeffs()).unwrap();
        assert!(
            (cost - target).abs() / target <= 5e-3,
            "scheme {:?} at shape {zeta}: cost {cost} differs from reported {target} by {:.2}% \
             (tolerance 0.5%); the reported value is below the attainable minimum of this space",
            s.removals(),
            (cost - target).abs() / target * 100.0
        );
    }
    println!("[criterion 1 / inconsistent rows] PASS");
}

#[test]
fn criterion_02_exhaustive_runtime_and_ga_agreement() {
    let mut summaries = Vec::new();
    for (n, m) in [(15u32, 5u32), (20, 5)] {
        for zeta in [2.0, 1.0, 0.5] {
            let p = params(zeta, 1.0);
            let t = Instant::now();
            let exact = exhaustive_optimum(n, m, p, &coeffs()).unwrap();
            let elapsed = t.elapsed();
            assert!(
                elapsed.as_secs_f64() < 5.0,
                "exhaustive CS({n},{m}) took {elapsed:?}"
            );

            let mut hits = 0;
            for seed in 0..20u64 {
                let r = ga_optimize(n, m, p, &coeffs(), &GAConfig::default().with_seed(seed))
                    .unwrap();
                if (r.best_cost - exact.best_cost) / exact.best_cost <= 1e-3 {
                    hits += 1;
                }
            }
            assert!(
                hits >= 19,
                "CS({n},{m}) shape {zeta}: only {hits}/20 GA runs within 0.1% of {}",
                exact.best_cost
            );
            summaries.push(format!("CS({n},{m}) shape {zeta}: {hits}/20"));
        }
    }
    println!("[criterion 2 / runtime + GA agreement] PASS: {}", summaries.join(", "));
}

#[test]
fn criterion_02_exhaustive_minimum_vs_reported_ga_costs() {
    // The reported GA costs sit below the true minima of these spaces
    // (which instead coincide with the reported VNS values), so the bound
    // cannot hold; asserted as stated.
    let rows = [
        (15u32, 2.0, 107.0203),
        (15, 1.0, 173.5582),
        (15, 0.5, 438.9402),
        (20, 2.0, 106.4338),
        (20, 1.0, 171.006),
        (20, 0.5, 427.8285),
    ];
    for (n, zeta, reported) in rows {
        let exact = exhaustive_optimum(n, 5, params(zeta, 1.0), &coeffs()).unwrap();
        assert!(
            exact.best_cost <= reported + PRINTED,
            "CS({n},5) shape {zeta}: exhaustive minimum {} (scheme {:?}) exceeds the reported GA \
             cost {reported}; the reported cost is not attained by any scheme in the space",
            exact.best_cost,
            exact.best_scheme.removals()
        );
    }
    println!("[criterion 2 / reported GA costs] PASS");
}

#[test]
fn criterion_03_scale_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let dims = [(15u32, 5u32), (35, 10), (45, 15)];
    let zetas = [2.0, 1.0, 0.5];
    for i in 0..100 {
        let (n, m) = dims[i % 3];
        let s = random_scheme(n, m, &mut rng);
        let p = params(zetas[i % zetas.len()], 1.0);
        let before = total_cost(&s, p, &coeffs()).unwrap();
        for w in [0.5, 2.0, 10.0] {
            let (tp, tc) = scale_transform(p, &coeffs(), w);
            let after = total_cost(&s, tp, &tc).unwrap();
            assert!(
                (before - after).abs() <= 1e-10 * before.abs(),
                "scheme {:?}, w={w}: {before} vs {after}",
                s.removals()
            );
        }
    }

    let p = params(2.0, 1.0);
    let base = exhaustive_optimum(15, 5, p, &coeffs()).unwrap();
    let (tp, tc) = scale_transform(p, &coeffs(), 2.0);
    let transformed = exhaustive_optimum(15, 5, tp, &tc).unwrap();
    assert_eq!(
        base.best_scheme, transformed.best_scheme,
        "argmin moved under the scale transformation"
    );
    println!(
        "[criterion 3] PASS: 100 schemes x 3 scale factors invariant to 1e-10; argmin {:?} stable",
        base.best_scheme.removals()
    );
}

#[test]
fn criterion_04_normalization_suite() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let n = rng.gen_range(2..=65);
        let m = rng.gen_range(1..=n.min(15));
        let s = random_scheme(n, m, &mut rng);
        let cc = procens::model::camp_cramer_coefficients(&s);
        for i in 1..=m as usize {
            let norm = cc.normalization(i).unwrap();
            assert!(
                (norm - 1.0).abs() <= 1e-8,
                "scheme {:?} level {i}: |normalization - 1| = {:e}",
                s.removals(),
                (norm - 1.0).abs()
            );
        }

        let zeta = rng.gen_range(0.4..3.0);
        let rho = rng.gen_range(0.3..3.0);
        let info = fisher_information(&s, params(zeta, rho));
        let expect = m as f64 * zeta * zeta / (rho * rho);
        assert!(
            (info.i22 - expect).abs() / expect <= 1e-8,
            "scheme {:?}: i22 {} vs m zeta^2/rho^2 {expect}",
            s.removals(),
            info.i22
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "criterion 4 took {elapsed:?}");
    println!("[criterion 4] PASS: 200 schemes up to n=65, m=15 within 1e-8 in {elapsed:?}");
}

#[test]
fn criterion_05_closed_form_vs_quadrature() {
    // Quantile-log moments against p-space quadrature.
    let a1 = quad::integrate(|p| (-f64::ln_1p(-p)).ln(), 0.0, 1.0, 1e-12);
    let a2 = quad::integrate(|p| (-f64::ln_1p(-p)).ln().powi(2), 0.0, 1.0, 1e-12);
    assert!((a1 - QUANTILE_LOG_MEAN).abs() <= 1e-8 * QUANTILE_LOG_MEAN.abs());
    assert!((a2 - QUANTILE_LOG_SECOND_MOMENT).abs() <= 1e-8 * QUANTILE_LOG_SECOND_MOMENT);

    // Fisher entries on 20 random schemes with n <= 30.
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let n = rng.gen_range(6..=30);
        let m = rng.gen_range(2..=n.min(8));
        let s = random_scheme(n, m, &mut rng);
        let p = params(rng.gen_range(0.5..2.5), rng.gen_range(0.5..2.0));
        let info = fisher_information(&s, p);
        let (q11, q12, q22) = fisher_by_quadrature(&s, p);
        for (a, b) in [(info.i11, q11), (info.i12, q12), (info.i22, q22)] {
            let rel = (a - b).abs() / b.abs();
            worst = worst.max(rel);
            assert!(
                rel <= 1e-8,
                "scheme {:?}: closed form {a} vs quadrature {b} (rel {rel:e})",
                s.removals()
            );
        }
    }
    println!("[criterion 5] PASS: worst Fisher deviation {worst:.2e}; A1/A2 within 1e-8");
}

#[test]
fn criterion_06_monte_carlo_duration() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for trial in 0..10u64 {
        let n = rng.gen_range(4..=40);
        let m = rng.gen_range(2..=n.min(10));
        let s = random_scheme(n, m, &mut rng);
        let p = params(rng.gen_range(0.5..2.5), rng.gen_range(0.5..2.0));
        let analytic = expected_duration(&s, p);
        let (mc, se) = monte_carlo_duration(&s, p, 100_000, 1000 + trial).unwrap();
        assert!(
            (mc - analytic).abs() <= 3.0 * se,
            "scheme {:?}: Monte Carlo {mc} vs analytic {analytic} (3 SE = {})",
            s.removals(),
            3.0 * se
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "criterion 6 took {elapsed:?}");
    println!("[criterion 6] PASS: 10 schemes within 3 SE at 1e5 replications in {elapsed:?}");
}

#[test]
fn criterion_07_cost_sensitivity_efficiency_values() {
    let c0 = coeffs();
    let perturbations: Vec<CostCoefficients> = [7.0, 8.0, 9.0, 11.0, 12.0, 13.0]
        .iter()
        .map(|&k1| CostCoefficients::new(k1, 50.0, 250.0).unwrap())
        .chain(
            [47.0, 48.0, 49.0, 51.0, 52.0, 53.0]
                .iter()
                .map(|&k2| CostCoefficients::new(10.0, k2, 250.0).unwrap()),
        )
        .chain(
            [247.0, 248.0, 249.0, 251.0, 252.0, 253.0]
                .iter()
                .map(|&k3| CostCoefficients::new(10.0, 50.0, k3).unwrap()),
        )
        .collect();
    assert_eq!(perturbations.len(), 18);
    let rows = sensitivity_to_costs(
        &c0,
        &perturbations,
        20,
        5,
        params(1.0, 1.0),
        &SearchMode::exhaustive(),
    )
    .unwrap();
    for row in &rows {
        assert!(
            (row.relative_efficiency - 1.0).abs() <= 1e-4,
            "perturbation {}: RE2 = {} (expected 1.0000)",
            row.perturbed,
            row.relative_efficiency
        );
    }
    println!("[criterion 7 / RE2] PASS: all 18 coefficient perturbations give RE2 = 1.0000");
}

#[test]
fn criterion_07_shape_sensitivity_efficiency_values() {
    // Under the cost functional the optimal scheme is not constant over
    // these shape grids, so several rows fall below 1 - 1e-4; asserted as
    // stated.
    for (phi0, grid) in [
        (2.0, vec![1.85, 1.90, 1.95, 2.00, 2.05, 2.10, 2.15]),
        (0.5, vec![0.35, 0.40, 0.45, 0.50, 0.55, 0.60, 0.65]),
    ] {
        let rows =
            sensitivity_to_shape(phi0, &grid, 20, 5, &coeffs(), &SearchMode::exhaustive()).unwrap();
        for row in &rows {
            assert!(
                (row.relative_efficiency - 1.0).abs() <= 1e-4,
                "phi0={phi0}, phi={}: RE1 = {:.6} with scheme {:?} (expected 1.0000 +/- 1e-4)",
                row.perturbed,
                row.relative_efficiency,
                row.scheme.removals()
            );
        }
    }
    println!("[criterion 7 / RE1] PASS");
}

#[test]
fn criterion_07_reported_optimal_schemes() {
    // The reported schemes are not the argmins of the cost functional on
    // CS(20,5) (the true argmins coincide with the reported VNS schemes);
    // asserted as stated.
    let shape_rows =
        sensitivity_to_shape(2.0, &[2.0], 20, 5, &coeffs(), &SearchMode::exhaustive()).unwrap();
    assert_eq!(
        shape_rows[0].scheme.removals(),
        &[6, 6, 0, 0, 3],
        "true argmin at shape 2 is {:?}, not the reported (6,6,0,0,3)",
        shape_rows[0].scheme.removals()
    );
    let shape_rows =
        sensitivity_to_shape(0.5, &[0.5], 20, 5, &coeffs(), &SearchMode::exhaustive()).unwrap();
    assert_eq!(
        shape_rows[0].scheme.removals(),
        &[7, 7, 0, 0, 1],
        "true argmin at shape 0.5 is {:?}, not the reported (7,7,0,0,1)",
        shape_rows[0].scheme.removals()
    );
    let cost_rows = sensitivity_to_costs(
        &coeffs(),
        &[coeffs()],
        20,
        5,
        params(1.0, 1.0),
        &SearchMode::exhaustive(),
    )
    .unwrap();
    assert_eq!(
        cost_rows[0].scheme.removals(),
        &[7, 6, 0, 0, 2],
        "true argmin at shape 1 is {:?}, not the reported (7,6,0,0,2)",
        cost_rows[0].scheme.removals()
    );
    println!("[criterion 7 / reported schemes] PASS");
}

#[test]
fn criterion_08_optimal_m_star_values() {
    let start = Instant::now();
    let (m10, r10) = optimal_m(10, params(2.0, 1.0), &coeffs(), &SearchMode::exhaustive(), None)
        .unwrap();
    assert_eq!(m10, 3, "n=10 shape 2: m* = {m10}, scheme {:?}", r10.best_scheme.removals());
    let (m15, r15) = optimal_m(15, params(1.0, 1.0), &coeffs(), &SearchMode::exhaustive(), None)
        .unwrap();
    assert_eq!(m15, 6, "n=15 shape 1: m* = {m15}, scheme {:?}", r15.best_scheme.removals());
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "criterion 8 took {elapsed:?}");
    println!(
        "[criterion 8 / m*] PASS: n=10 -> m*=3 ({:?}, {:.4}); n=15 -> m*=6 ({:?}, {:.4}) in {elapsed:?}",
        r10.best_scheme.removals(),
        r10.best_cost,
        r15.best_scheme.removals(),
        r15.best_cost
    );
}

#[test]
fn criterion_08_optimal_m_reported_schemes_and_costs() {
    // The reported joint optima are not optimal under the cost functional
    // (their true costs exceed the joint minima found exhaustively);
    // asserted as stated.
    let (_, r10) = optimal_m(10, params(2.0, 1.0), &coeffs(), &SearchMode::exhaustive(), None)
        .unwrap();
    assert_eq!(
        r10.best_scheme.removals(),
        &[4, 0, 3],
        "n=10 true optimum is {:?} at cost {}, not the reported (4,0,3) at 103.698",
        r10.best_scheme.removals(),
        r10.best_cost
    );
    assert!(
        (r10.best_cost - 103.698).abs() / 103.698 <= 5e-3,
        "n=10 optimal cost {} vs reported 103.698",
        r10.best_cost
    );
    let (_, r15) = optimal_m(15, params(1.0, 1.0), &coeffs(), &SearchMode::exhaustive(), None)
        .unwrap();
    assert_eq!(
        r15.best_scheme.removals(),
        &[3, 3, 0, 0, 0, 3],
        "n=15 true optimum is {:?} at cost {}, not the reported (3,3,0,0,0,3) at 169.3459",
        r15.best_scheme.removals(),
        r15.best_cost
    );
    assert!(
        (r15.best_cost - 169.3459).abs() / 169.3459 <= 5e-3,
        "n=15 optimal cost {} vs reported 169.3459",
        r15.best_cost
    );
    println!("[criterion 8 / reported schemes] PASS");
}

#[test]
fn criterion_09_large_instance_determinism_and_runtime() {
    for (n, m, zeta) in [(50u32, 15u32, 1.0), (65, 15, 0.5)] {
        let p = params(zeta, 1.0);
        let config = GAConfig::default().with_seed(1);
        let t = Instant::now();
        let a = ga_optimize(n, m, p, &coeffs(), &config).unwrap();
        let elapsed = t.elapsed();
        assert!(elapsed.as_secs_f64() < 300.0, "({n},{m}) run took {elapsed:?}");
        let b = ga_optimize(n, m, p, &coeffs(), &config).unwrap();
        assert_eq!(a.best_scheme, b.best_scheme);
        assert_eq!(a.best_cost, b.best_cost);
        assert_eq!(a.history, b.history);
        println!(
            "[criterion 9 / run] ({n},{m}) shape {zeta}: cost {:.4} scheme {:?} in {elapsed:?}, deterministic",
            a.best_cost,
            a.best_scheme.removals()
        );
    }
    println!("[criterion 9 / determinism + runtime] PASS");
}

#[test]
fn criterion_09_large_instance_cost_bounds() {
    // The reported GA costs at these sizes lie below the best local optima
    // reachable from any tested start (steepest descent converges to
    // 211.658 and 302.525 respectively), so the bounds cannot hold;
    // asserted as stated.
    for (n, m, zeta, reported) in [(50u32, 15u32, 1.0, 205.7382), (65, 15, 0.5, 297.4492)] {
        let r = ga_optimize(n, m, params(zeta, 1.0), &coeffs(), &GAConfig::default().with_seed(1))
            .unwrap();
        let bound = reported * 1.005;
        assert!(
            r.best_cost <= bound,
            "({n},{m}) shape {zeta}: GA best {:.4} (scheme {:?}) exceeds {bound:.4} \
             (= reported {reported} + 0.5%); the reported cost is below the attainable optimum",
            r.best_cost,
            r.best_scheme.removals()
        );
    }
    println!("[criterion 9 / cost bounds] PASS");
}

#[test]
fn criterion_10_operator_worked_examples() {
    // Tournament: fitness A..E = 2.3, 1.9, 3.2, 5.8, 7.4; subsets
    // {A,B,D,E} then {A,B,C,D} select E then D.
    let fitness = [2.3, 1.9, 3.2, 5.8, 7.4];
    assert_eq!(tournament_winner(&fitness, &[0, 1, 3, 4]), 4);
    assert_eq!(tournament_winner(&fitness, &[0, 1, 2, 3]), 3);

    // Blend crossover worked example, exact to 1e-12.
    let (c1, c2) = blx_blend(10.53, 15.39, 0.5, 0.4);
    assert!((c1 - 11.988).abs() <= 1e-12, "c1 = {c1}");
    assert!((c2 - 13.932).abs() <= 1e-12, "c2 = {c2}");

    // Mutation worked example through a scripted draw sequence: skip the
    // first two genes, replace the third by a draw of 4.1.
    let chrom = Chromosome { genes: vec![3.4, 2.6, 4.5] };
    let forced = ((0.41f64 * (1u64 << 53) as f64).round() as u64) << 11;
    let mut rng = ScriptedRng { words: vec![u64::MAX, u64::MAX, 0, forced].into() };
    let mutated = uniform_mutation(&chrom, 13, 3, 0.1, &mut rng);
    assert_eq!(mutated.genes[0], 3.4);
    assert_eq!(mutated.genes[1], 2.6);
    assert!((mutated.genes[2] - 4.1).abs() <= 1e-12, "mutated gene = {}", mutated.genes[2]);
    println!("[criterion 10] PASS: tournament, blend and mutation examples reproduced");
}

/// Plays back a fixed word sequence; the standard f64 sampler maps a word
/// x to (x >> 11) * 2^-53, so draws can be forced exactly.
struct ScriptedRng {
    words: std::collections::VecDeque<u64>,
}

impl rand::RngCore for ScriptedRng {
    fn next_u32(&mut self) -> u32 {
        self.next_u64() as u32
    }

    fn next_u64(&mut self) -> u64 {
        self.words.pop_front().expect("draw script exhausted")
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        for chunk in dest.chunks_mut(8) {
            let word = self.next_u64().to_le_bytes();
            chunk.copy_from_slice(&word[..chunk.len()]);
        }
    }

    fn try_fill_bytes(&mut self, dest: &mut [u8]) -> Result<(), rand::Error> {
        self.fill_bytes(dest);
        Ok(())
    }
}
