use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use procens_cli::config::{ModeKind, OutputFormat, Settings};
use procens_cli::run::{run, CliError, CommandKind};

/// Cost-optimal progressive Type-II censoring schemes for Weibull life
/// tests. Lifetimes use the rate parameterisation F(y) = 1 - exp(-(rho
/// y)^shape); pass --scale-rate 1/lambda when working with a scale
/// parameter lambda. Cost coefficients default to k1=10, k2=50, k3=250.
#[derive(Parser)]
#[command(name = "procens", version, arg_required_else_help = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the total cost of one scheme (requires --scheme)
    Evaluate(CommonArgs),
    /// Genetic search for a minimum-cost scheme
    Optimize(CommonArgs),
    /// Exhaustive search of the whole scheme space (subject to --budget)
    Exhaustive(CommonArgs),
    /// Steepest-descent baseline (start from --scheme, default one-step)
    Baseline(CommonArgs),
    /// Sensitivity of the optimal scheme to the shape parameter
    SensitivityShape(CommonArgs),
    /// Sensitivity of the optimal scheme to the cost coefficients
    SensitivityCost(CommonArgs),
    /// Minimise cost jointly over the number of failures m
    OptimalM(CommonArgs),
    /// Run GA, baseline and (budget permitting) exhaustive side by side
    Compare(CommonArgs),
    /// Monte Carlo simulation of the test duration
    Simulate(CommonArgs),
}

impl Command {
    fn split(self) -> (CommandKind, CommonArgs) {
        match self {
            Command::Evaluate(a) => (CommandKind::Evaluate, a),
            Command::Optimize(a) => (CommandKind::Optimize, a),
            Command::Exhaustive(a) => (CommandKind::Exhaustive, a),
            Command::Baseline(a) => (CommandKind::Baseline, a),
            Command::SensitivityShape(a) => (CommandKind::SensitivityShape, a),
            Command::SensitivityCost(a) => (CommandKind::SensitivityCost, a),
            Command::OptimalM(a) => (CommandKind::OptimalM, a),
            Command::Compare(a) => (CommandKind::Compare, a),
            Command::Simulate(a) => (CommandKind::Simulate, a),
        }
    }
}

#[derive(Args)]
struct CommonArgs {
    /// Flat key=value config file; command-line flags take precedence
    #[arg(long)]
    config: Option<PathBuf>,
    /// Units placed on test
    #[arg(long)]
    n: Option<u32>,
    /// Number of observed failures
    #[arg(long)]
    m: Option<u32>,
    /// Weibull shape parameter
    #[arg(long)]
    shape: Option<f64>,
    /// Weibull rate parameter (1/scale), default 1
    #[arg(long = "scale-rate")]
    scale_rate: Option<f64>,
    /// Cost per observed failure
    #[arg(long)]
    k1: Option<f64>,
    /// Cost per unit of test time
    #[arg(long)]
    k2: Option<f64>,
    /// Cost per unit of estimator imprecision
    #[arg(long)]
    k3: Option<f64>,
    /// RNG seed for seeded commands, default 0
    #[arg(long)]
    seed: Option<u64>,
    /// Removal scheme in star notation, e.g. "3*2,0*2,4"
    #[arg(long)]
    scheme: Option<String>,
    /// Output format: csv, json or table (default)
    #[arg(long = "output-format", short = 'f', value_parser = OutputFormat::parse)]
    output_format: Option<OutputFormat>,
    /// Worker threads for simulation, default 1
    #[arg(long)]
    threads: Option<usize>,
    /// Scheme-count cap for exhaustive search, default 10000000
    #[arg(long)]
    budget: Option<u128>,
    #[arg(long = "population-size")]
    population_size: Option<usize>,
    #[arg(long = "tournament-size")]
    tournament_size: Option<usize>,
    #[arg(long = "crossover-rate")]
    crossover_rate: Option<f64>,
    #[arg(long = "blend-alpha")]
    blend_alpha: Option<f64>,
    #[arg(long = "mutation-rate")]
    mutation_rate: Option<f64>,
    #[arg(long = "max-generations")]
    max_generations: Option<u32>,
    #[arg(long = "stagnation-limit")]
    stagnation_limit: Option<u32>,
    #[arg(long = "elite-count")]
    elite_count: Option<usize>,
    /// Monte Carlo replications, default 100000
    #[arg(long)]
    replications: Option<u64>,
    /// True shape value for sensitivity-shape
    #[arg(long)]
    phi0: Option<f64>,
    /// Misspecified shape value (repeatable)
    #[arg(long)]
    phi: Vec<f64>,
    /// Misspecified coefficient triple "k1,k2,k3" (repeatable)
    #[arg(long)]
    perturb: Vec<String>,
    /// Smallest m for optimal-m
    #[arg(long = "min-m")]
    min_m: Option<u32>,
    /// Largest m for optimal-m
    #[arg(long = "max-m")]
    max_m: Option<u32>,
    /// Iteration cap for the baseline descent, default 1000
    #[arg(long = "max-iters")]
    max_iters: Option<u32>,
    /// Search engine: exhaustive, ga or auto
    #[arg(long, value_parser = ModeKind::parse)]
    mode: Option<ModeKind>,
}

impl CommonArgs {
    fn into_settings(self) -> Result<(Settings, Option<PathBuf>), CliError> {
        let perturb = self
            .perturb
            .iter()
            .map(|t| procens_cli::config::parse_triple(t))
            .collect::<Result<Vec<_>, String>>()
            .map_err(CliError::Usage)?;
        let settings = Settings {
            n: self.n,
            m: self.m,
            shape: self.shape,
            scale_rate: self.scale_rate,
            k1: self.k1,
            k2: self.k2,
            k3: self.k3,
            seed: self.seed,
            scheme: self.scheme,
            output_format: self.output_format,
            threads: self.threads,
            budget: self.budget,
            population_size: self.population_size,
            tournament_size: self.tournament_size,
            crossover_rate: self.crossover_rate,
            blend_alpha: self.blend_alpha,
            mutation_rate: self.mutation_rate,
            max_generations: self.max_generations,
            stagnation_limit: self.stagnation_limit,
            elite_count: self.elite_count,
            replications: self.replications,
            phi0: self.phi0,
            phi: self.phi,
            perturb,
            min_m: self.min_m,
            max_m: self.max_m,
            max_iters: self.max_iters,
            mode: self.mode,
        };
        Ok((settings, self.config))
    }
}

fn execute(cli: Cli) -> Result<String, CliError> {
    let (kind, args) = cli.command.split();
    let (mut settings, config_path) = args.into_settings()?;
    if let Some(path) = config_path {
        let from_file = Settings::from_config_file(&path).map_err(CliError::Usage)?;
        settings.or_from(from_file);
    }
    run(kind, &settings)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(report) => {
            println!("{report}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
