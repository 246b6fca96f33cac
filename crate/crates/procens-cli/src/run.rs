//! Command dispatch: resolves settings, calls the library, renders one
//! report to a string.

use std::time::Instant;

use procens::analysis::{
    optimal_m, sensitivity_to_costs, sensitivity_to_shape, SearchMode, SensitivityRow,
};
use procens::model::{
    camp_cramer_coefficients, expected_duration_with, integrated_quantile_log_variance_with,
};
use procens::search::{
    exhaustive_optimum_with_budget, ga_optimize, local_search_baseline, scheme_count, GAConfig,
    OptimizationResult, DEFAULT_EXHAUSTIVE_BUDGET,
};
use procens::sim::monte_carlo_duration_workers;
use procens::{CensoringScheme, CostCoefficients, Error, WeibullParams};

use crate::config::{ModeKind, OutputFormat, Settings};
use crate::notation::{format_scheme_notation, parse_scheme_notation};
use crate::report::{csv_quote, fmt_g17, fmt_human, json_array, json_u32_array, JsonObject};

/// Errors mapped to process exit codes: usage 2, numerical 3, instance too
/// large 4.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Numerical(String),
    TooLarge(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Numerical(_) => 3,
            CliError::TooLarge(_) => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Numerical(msg) | CliError::TooLarge(msg) => {
                write!(f, "{msg}")
            }
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidScheme(_) | Error::InvalidArgument(_) => CliError::Usage(e.to_string()),
            Error::SingularInformation | Error::OptimizationFailed(_) => {
                CliError::Numerical(e.to_string())
            }
            Error::InstanceTooLarge { .. } => CliError::TooLarge(e.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandKind {
    Evaluate,
    Optimize,
    Exhaustive,
    Baseline,
    SensitivityShape,
    SensitivityCost,
    OptimalM,
    Compare,
    Simulate,
}

impl CommandKind {
    pub fn name(&self) -> &'static str {
        match self {
            CommandKind::Evaluate => "evaluate",
            CommandKind::Optimize => "optimize",
            CommandKind::Exhaustive => "exhaustive",
            CommandKind::Baseline => "baseline",
            CommandKind::SensitivityShape => "sensitivity-shape",
            CommandKind::SensitivityCost => "sensitivity-cost",
            CommandKind::OptimalM => "optimal-m",
            CommandKind::Compare => "compare",
            CommandKind::Simulate => "simulate",
        }
    }
}

fn require<T: Copy>(value: Option<T>, flag: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("missing required option --{flag}")))
}

fn params_of(s: &Settings) -> Result<WeibullParams, CliError> {
    let shape = require(s.shape, "shape")?;
    let rate = s.scale_rate.unwrap_or(1.0);
    Ok(WeibullParams::new(shape, rate)?)
}

fn coeffs_of(s: &Settings) -> Result<CostCoefficients, CliError> {
    Ok(CostCoefficients::new(
        s.k1.unwrap_or(10.0),
        s.k2.unwrap_or(50.0),
        s.k3.unwrap_or(250.0),
    )?)
}

fn ga_of(s: &Settings) -> GAConfig {
    let d = GAConfig::default();
    GAConfig {
        population_size: s.population_size.unwrap_or(d.population_size),
        tournament_size: s.tournament_size.unwrap_or(d.tournament_size),
        crossover_rate: s.crossover_rate.unwrap_or(d.crossover_rate),
        blend_alpha: s.blend_alpha.unwrap_or(d.blend_alpha),
        mutation_rate: s.mutation_rate.unwrap_or(d.mutation_rate),
        max_generations: s.max_generations.unwrap_or(d.max_generations),
        stagnation_limit: s.stagnation_limit.unwrap_or(d.stagnation_limit),
        elite_count: s.elite_count.unwrap_or(d.elite_count),
        seed: s.seed.unwrap_or(0),
    }
}

fn mode_of(s: &Settings, default: ModeKind) -> SearchMode {
    let budget = s.budget.unwrap_or(DEFAULT_EXHAUSTIVE_BUDGET);
    match s.mode.unwrap_or(default) {
        ModeKind::Exhaustive => SearchMode::Exhaustive { budget },
        ModeKind::Ga => SearchMode::Ga(ga_of(s)),
        ModeKind::Auto => SearchMode::Auto { budget, ga: ga_of(s) },
    }
}

fn parse_scheme(s: &Settings, n: u32, m: u32) -> Result<Option<CensoringScheme>, CliError> {
    match &s.scheme {
        None => Ok(None),
        Some(text) => parse_scheme_notation(text, n, m).map(Some).map_err(CliError::Usage),
    }
}

/// Executes one command and returns the rendered report.
pub fn run(command: CommandKind, settings: &Settings) -> Result<String, CliError> {
    let format = settings.output_format.unwrap_or(OutputFormat::Table);
    match command {
        CommandKind::Evaluate => evaluate(settings, format),
        CommandKind::Optimize => optimize(settings, format),
        CommandKind::Exhaustive => exhaustive(settings, format),
        CommandKind::Baseline => baseline(settings, format),
        CommandKind::SensitivityShape => sensitivity_shape(settings, format),
        CommandKind::SensitivityCost => sensitivity_cost(settings, format),
        CommandKind::OptimalM => optimal_m_cmd(settings, format),
        CommandKind::Compare => compare(settings, format),
        CommandKind::Simulate => simulate(settings, format),
    }
}

struct Instance {
    n: u32,
    m: u32,
    params: WeibullParams,
    coeffs: CostCoefficients,
}

fn instance_of(s: &Settings) -> Result<Instance, CliError> {
    Ok(Instance {
        n: require(s.n, "n")?,
        m: require(s.m, "m")?,
        params: params_of(s)?,
        coeffs: coeffs_of(s)?,
    })
}

fn instance_fields(o: &mut JsonObject, inst: &Instance) {
    o.int_field("n", inst.n as u128)
        .int_field("m", inst.m as u128)
        .num_field("shape", inst.params.shape())
        .num_field("scale_rate", inst.params.scale_rate())
        .num_field("k1", inst.coeffs.k1())
        .num_field("k2", inst.coeffs.k2())
        .num_field("k3", inst.coeffs.k3());
}

fn instance_csv(inst: &Instance) -> String {
    format!(
        "{},{},{},{},{},{},{}",
        inst.n,
        inst.m,
        fmt_g17(inst.params.shape()),
        fmt_g17(inst.params.scale_rate()),
        fmt_g17(inst.coeffs.k1()),
        fmt_g17(inst.coeffs.k2()),
        fmt_g17(inst.coeffs.k3())
    )
}

fn table_lines(pairs: &[(&str, String)]) -> String {
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    pairs
        .iter()
        .map(|(k, v)| format!("{k:width$}  {v}"))
        .collect::<Vec<_>>()
        .join("\n")
}

fn evaluate(s: &Settings, format: OutputFormat) -> Result<String, CliError> {
    let inst = instance_of(s)?;
    let scheme = parse_scheme(s, inst.n, inst.m)?
        .ok_or_else(|| CliError::Usage("evaluate requires --scheme".into()))?;
    let cc = camp_cramer_coefficients(&scheme);
    let duration = expected_duration_with(&cc, inst.params);
    let variance = integrated_quantile_log_variance_with(&cc, inst.params)
        .map_err(|e| CliError::from(e))?;
    let cost =
        inst.coeffs.k1() * inst.m as f64 + inst.coeffs.k2() * duration + inst.coeffs.k3() * variance;
    let notation = format_scheme_notation(&scheme);

    Ok(match format {
        OutputFormat::Json => {
            let mut o = JsonObject::new();
            o.str_field("command", "evaluate");
            instance_fields(&mut o, &inst);
            o.str_field("scheme", &notation)
                .raw_field("scheme_vector", &json_u32_array(scheme.removals()))
                .num_field("cost", cost)
                .num_field("expected_duration", duration)
                .num_field("variance_integral", variance);
            o.finish()
        }
        OutputFormat::Csv => format!(
            "n,m,shape,scale_rate,k1,k2,k3,scheme,cost,expected_duration,variance_integral\n{},{},{},{},{}",
            instance_csv(&inst),
            csv_quote(&notation),
            fmt_g17(cost),
            fmt_g17(duration),
            fmt_g17(variance)
        ),
        OutputFormat::Table => table_lines(&[
            ("scheme", notation),
            ("cost", fmt_human(cost)),
            ("expected_duration", fmt_human(duration)),
            ("variance_integral", fmt_human(variance)),
        ]),
    })
}

fn optimization_report(
    command: &str,
    inst: &Instance,
    seed: Option<u64>,
    result: &OptimizationResult,
    format: OutputFormat,
) -> String {
    let notation = format_scheme_notation(&result.best_scheme);
    match format {
        OutputFormat::Json => {
            let mut o = JsonObject::new();
            o.str_field("command", command);
            instance_fields(&mut o, inst);
            if let Some(seed) = seed {
                o.int_field("seed", seed as u128);
            }
            o.str_field("scheme", &notation)
                .raw_field("scheme_vector", &json_u32_array(result.best_scheme.removals()))
                .num_field("cost", result.best_cost)
                .int_field("generations", result.generations_run as u128)
                .int_field("evaluations", result.evaluations as u128)
                .raw_field(
                    "history",
                    &json_array(result.history.iter().map(|(g, c)| {
                        format!("[{},{}]", g, fmt_g17(*c))
                    })),
                );
            o.finish()
        }
        OutputFormat::Csv => {
            let (header, seed_col) = match seed {
                Some(seed) => ("n,m,shape,scale_rate,k1,k2,k3,seed,scheme,cost,generations,evaluations", format!("{seed},")),
                None => ("n,m,shape,scale_rate,k1,k2,k3,scheme,cost,generations,evaluations", String::new()),
            };
            format!(
                "{header}\n{},{seed_col}{},{},{},{}",
                instance_csv(inst),
                csv_quote(&notation),
                fmt_g17(result.best_cost),
                result.generations_run,
                result.evaluations
            )
        }
        OutputFormat::Table => table_lines(&[
            ("scheme", notation),
            ("cost", fmt_human(result.best_cost)),
            ("generations", result.generations_run.to_string()),
            ("evaluations", result.evaluations.to_string()),
        ]),
    }
}

fn optimize(s: &Settings, format: OutputFormat) -> Result<String, CliError> {
    let inst = instance_of(s)?;
    let config = ga_of(s);
    let result = ga_optimize(inst.n, inst.m, inst.params, &inst.coeffs, &config)?;
    Ok(optimization_report("optimize", &inst, Some(config.seed), &result, format))
}

fn exhaustive(s: &Settings, format: OutputFormat) -> Result<String, CliError> {
    let inst = instance_of(s)?;
    let budget = s.budget.unwrap_or(DEFAULT_EXHAUSTIVE_BUDGET);
    let result = exhaustive_optimum_with_budget(inst.n, inst.m, inst.params, &inst.coeffs, budget)?;
    Ok(optimization_report("exhaustive", &inst, None, &result, format))
}

fn baseline(s: &Settings, format: OutputFormat) -> Result<String, CliError> {
    let inst = instance_of(s)?;
    // Default start is ordinary Type-II censoring (all removals last).
    let start = match parse_scheme(s, inst.n, inst.m)? {
        Some(scheme) => scheme,
        None => CensoringScheme::one_step(inst.n, inst.m, inst.m)?,
    };
    let max_iters = s.max_iters.unwrap_or(1_000);
    let result =
        local_search_baseline(inst.n, inst.m, inst.params, &inst.coeffs, &start, max_iters)?;
    let start_notation = format_scheme_notation(&start);
    let notation = format_scheme_notation(&result.best_scheme);
    Ok(match format {
        OutputFormat::Json => {
            let mut o = JsonObject::new();
            o.str_field("command", "baseline");
            instance_fields(&mut o, &inst);
            o.str_field("start", &start_notation)
                .str_field("scheme", &notation)
                .raw_field("scheme_vector", &json_u32_array(result.best_scheme.removals()))
                .num_field("cost", result.best_cost)
                .int_field("iterations", result.generations_run as u128)
                .int_field("evaluations", result.evaluations as u128);
            o.finish()
        }
        OutputFormat::Csv => format!(
            "n,m,shape,scale_rate,k1,k2,k3,start,scheme,cost,iterations,evaluations\n{},{},{},{},{},{}",
            instance_csv(&inst),
            csv_quote(&start_notation),
            csv_quote(&notation),
            fmt_g17(result.best_cost),
            result.generations_run,
            result.evaluations
        ),
        OutputFormat::Table => table_lines(&[
            ("start", start_notation),
            ("scheme", notation),
            ("cost", fmt_human(result.best_cost)),
            ("iterations", result.generations_run.to_string()),
            ("evaluations", result.evaluations.to_string()),
        ]),
    })
}

fn sensitivity_report(
    command: &str,
    header: Vec<(&str, String)>,
    rows: &[SensitivityRow],
    format: OutputFormat,
) -> String {
    match format {
        OutputFormat::Json => {
            let mut o = JsonObject::new();
            o.str_field("command", command);
            for (k, v) in &header {
                o.raw_field(k, v);
            }
            o.raw_field(
                "rows",
                &json_array(rows.iter().map(|row| {
                    let mut r = JsonObject::new();
                    match &row.perturbed {
                        procens::analysis::PerturbedValue::Shape(phi) => {
                            r.num_field("perturbed", *phi);
                        }
                        costs @ procens::analysis::PerturbedValue::Costs(_) => {
                            r.str_field("perturbed", &costs.to_string());
                        }
                    }
                    r.str_field("scheme", &format_scheme_notation(&row.scheme))
                        .num_field("re", row.relative_efficiency);
                    r.finish()
                })),
            );
            o.finish()
        }
        OutputFormat::Csv => {
            let mut out = String::from("perturbed,scheme,re");
            for row in rows {
                let perturbed = match &row.perturbed {
                    procens::analysis::PerturbedValue::Shape(phi) => fmt_g17(*phi),
                    costs => csv_quote(&costs.to_string()),
                };
                out.push('\n');
                out.push_str(&format!(
                    "{perturbed},{},{}",
                    csv_quote(&format_scheme_notation(&row.scheme)),
                    fmt_g17(row.relative_efficiency)
                ));
            }
            out
        }
        OutputFormat::Table => {
            let mut out = format!("{:<16} {:<20} {:>8}", "perturbed", "scheme", "re");
            for row in rows {
                out.push('\n');
                out.push_str(&format!(
                    "{:<16} {:<20} {:>8}",
                    row.perturbed.to_string(),
                    format_scheme_notation(&row.scheme),
                    fmt_human(row.relative_efficiency)
                ));
            }
            out
        }
    }
}

fn sensitivity_shape(s: &Settings, format: OutputFormat) -> Result<String, CliError> {
    let n = require(s.n, "n")?;
    let m = require(s.m, "m")?;
    let coeffs = coeffs_of(s)?;
    let phi0 = require(s.phi0, "phi0")?;
    if s.phi.is_empty() {
        return Err(CliError::Usage("sensitivity-shape requires at least one --phi".into()));
    }
    let mode = mode_of(s, ModeKind::Exhaustive);
    let rows = sensitivity_to_shape(phi0, &s.phi, n, m, &coeffs, &mode)?;
    Ok(sensitivity_report(
        "sensitivity-shape",
        vec![("phi0", fmt_g17(phi0)), ("n", n.to_string()), ("m", m.to_string())],
        &rows,
        format,
    ))
}

fn sensitivity_cost(s: &Settings, format: OutputFormat) -> Result<String, CliError> {
    let n = require(s.n, "n")?;
    let m = require(s.m, "m")?;
    let params = params_of(s)?;
    let c0 = coeffs_of(s)?;
    if s.perturb.is_empty() {
        return Err(CliError::Usage("sensitivity-cost requires at least one --perturb".into()));
    }
    let cs: Vec<CostCoefficients> = s
        .perturb
        .iter()
        .map(|&(k1, k2, k3)| CostCoefficients::new(k1, k2, k3))
        .collect::<Result<_, _>>()?;
    let mode = mode_of(s, ModeKind::Exhaustive);
    let rows = sensitivity_to_costs(&c0, &cs, n, m, params, &mode)?;
    Ok(sensitivity_report(
        "sensitivity-cost",
        vec![("n", n.to_string()), ("m", m.to_string()), ("shape", fmt_g17(params.shape()))],
        &rows,
        format,
    ))
}

fn optimal_m_cmd(s: &Settings, format: OutputFormat) -> Result<String, CliError> {
    let n = require(s.n, "n")?;
    let params = params_of(s)?;
    let coeffs = coeffs_of(s)?;
    let mode = mode_of(s, ModeKind::Auto);
    let range = match (s.min_m, s.max_m) {
        (None, None) => None,
        (lo, hi) => Some(lo.unwrap_or(1)..=hi.unwrap_or(n)),
    };
    let (m_star, result) = optimal_m(n, params, &coeffs, &mode, range)?;
    let notation = format_scheme_notation(&result.best_scheme);
    Ok(match format {
        OutputFormat::Json => {
            let mut o = JsonObject::new();
            o.str_field("command", "optimal-m")
                .int_field("n", n as u128)
                .num_field("shape", params.shape())
                .num_field("scale_rate", params.scale_rate())
                .num_field("k1", coeffs.k1())
                .num_field("k2", coeffs.k2())
                .num_field("k3", coeffs.k3())
                .int_field("m_star", m_star as u128)
                .str_field("scheme", &notation)
                .raw_field("scheme_vector", &json_u32_array(result.best_scheme.removals()))
                .num_field("cost", result.best_cost);
            o.finish()
        }
        OutputFormat::Csv => format!(
            "n,m_star,scheme,cost\n{n},{m_star},{},{}",
            csv_quote(&notation),
            fmt_g17(result.best_cost)
        ),
        OutputFormat::Table => table_lines(&[
            ("n", n.to_string()),
            ("m_star", m_star.to_string()),
            ("scheme", notation),
            ("cost", fmt_human(result.best_cost)),
        ]),
    })
}

fn compare(s: &Settings, format: OutputFormat) -> Result<String, CliError> {
    let inst = instance_of(s)?;
    let budget = s.budget.unwrap_or(DEFAULT_EXHAUSTIVE_BUDGET);
    let config = ga_of(s);

    struct Row {
        method: &'static str,
        scheme: String,
        cost: f64,
        evaluations: u64,
        wall_time_s: f64,
    }
    let mut rows = Vec::new();

    let t = Instant::now();
    let ga = ga_optimize(inst.n, inst.m, inst.params, &inst.coeffs, &config)?;
    rows.push(Row {
        method: "ga",
        scheme: format_scheme_notation(&ga.best_scheme),
        cost: ga.best_cost,
        evaluations: ga.evaluations,
        wall_time_s: t.elapsed().as_secs_f64(),
    });

    let start = match parse_scheme(s, inst.n, inst.m)? {
        Some(scheme) => scheme,
        None => CensoringScheme::one_step(inst.n, inst.m, inst.m)?,
    };
    let t = Instant::now();
    let ls = local_search_baseline(
        inst.n,
        inst.m,
        inst.params,
        &inst.coeffs,
        &start,
        s.max_iters.unwrap_or(1_000),
    )?;
    rows.push(Row {
        method: "baseline",
        scheme: format_scheme_notation(&ls.best_scheme),
        cost: ls.best_cost,
        evaluations: ls.evaluations,
        wall_time_s: t.elapsed().as_secs_f64(),
    });

    if scheme_count(inst.n, inst.m)? <= budget {
        let t = Instant::now();
        let ex =
            exhaustive_optimum_with_budget(inst.n, inst.m, inst.params, &inst.coeffs, budget)?;
        rows.push(Row {
            method: "exhaustive",
            scheme: format_scheme_notation(&ex.best_scheme),
            cost: ex.best_cost,
            evaluations: ex.evaluations,
            wall_time_s: t.elapsed().as_secs_f64(),
        });
    }

    Ok(match format {
        OutputFormat::Json => {
            let mut o = JsonObject::new();
            o.str_field("command", "compare");
            instance_fields(&mut o, &inst);
            o.int_field("seed", config.seed as u128).raw_field(
                "rows",
                &json_array(rows.iter().map(|r| {
                    let mut obj = JsonObject::new();
                    obj.str_field("method", r.method)
                        .str_field("scheme", &r.scheme)
                        .num_field("cost", r.cost)
                        .int_field("evaluations", r.evaluations as u128)
                        .num_field("wall_time_s", r.wall_time_s);
                    obj.finish()
                })),
            );
            o.finish()
        }
        OutputFormat::Csv => {
            let mut out = String::from("method,scheme,cost,evaluations,wall_time_s");
            for r in &rows {
                out.push('\n');
                out.push_str(&format!(
                    "{},{},{},{},{}",
                    r.method,
                    csv_quote(&r.scheme),
                    fmt_g17(r.cost),
                    r.evaluations,
                    fmt_g17(r.wall_time_s)
                ));
            }
            out
        }
        OutputFormat::Table => {
            let mut out = format!(
                "{:<12} {:<24} {:>12} {:>12} {:>12}",
                "method", "scheme", "cost", "evaluations", "wall_time_s"
            );
            for r in &rows {
                out.push('\n');
                out.push_str(&format!(
                    "{:<12} {:<24} {:>12} {:>12} {:>12}",
                    r.method,
                    r.scheme,
                    fmt_human(r.cost),
                    r.evaluations,
                    fmt_human(r.wall_time_s)
                ));
            }
            out
        }
    })
}

fn simulate(s: &Settings, format: OutputFormat) -> Result<String, CliError> {
    let inst = instance_of(s)?;
    let scheme = match parse_scheme(s, inst.n, inst.m)? {
        Some(scheme) => scheme,
        None => CensoringScheme::one_step(inst.n, inst.m, inst.m)?,
    };
    let replications = s.replications.unwrap_or(100_000);
    let workers = s.threads.unwrap_or(1);
    let seed = s.seed.unwrap_or(0);
    let (mean, se) =
        monte_carlo_duration_workers(&scheme, inst.params, replications, seed, workers)?;
    let analytic = procens::model::expected_duration(&scheme, inst.params);
    let notation = format_scheme_notation(&scheme);

    Ok(match format {
        OutputFormat::Json => {
            let mut o = JsonObject::new();
            o.str_field("command", "simulate");
            instance_fields(&mut o, &inst);
            o.str_field("scheme", &notation)
                .int_field("replications", replications as u128)
                .int_field("seed", seed as u128)
                .int_field("workers", workers as u128)
                .num_field("mean", mean)
                .num_field("standard_error", se)
                .num_field("expected_duration", analytic);
            o.finish()
        }
        OutputFormat::Csv => format!(
            "n,m,shape,scale_rate,k1,k2,k3,scheme,replications,seed,workers,mean,standard_error,expected_duration\n{},{},{replications},{seed},{workers},{},{},{}",
            instance_csv(&inst),
            csv_quote(&notation),
            fmt_g17(mean),
            fmt_g17(se),
            fmt_g17(analytic)
        ),
        OutputFormat::Table => table_lines(&[
            ("scheme", notation),
            ("replications", replications.to_string()),
            ("mean", fmt_human(mean)),
            ("standard_error", format!("{se:.6}")),
            ("expected_duration", fmt_human(analytic)),
        ]),
    })
}

