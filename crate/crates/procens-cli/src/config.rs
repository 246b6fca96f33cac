//! Run configuration: a flat bag of optional settings filled from
//! command-line flags, then from a `key = value` config file, then from
//! defaults. Flags win over the file.

use std::path::Path;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
    Table,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            "table" => Ok(OutputFormat::Table),
            other => Err(format!("unknown output format `{other}` (csv, json or table)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeKind {
    Exhaustive,
    Ga,
    Auto,
}

impl ModeKind {
    pub fn parse(s: &str) -> Result<Self, String> {
        match s {
            "exhaustive" => Ok(ModeKind::Exhaustive),
            "ga" => Ok(ModeKind::Ga),
            "auto" => Ok(ModeKind::Auto),
            other => Err(format!("unknown search mode `{other}` (exhaustive, ga or auto)")),
        }
    }
}

/// Optional settings shared by all subcommands; `None` means "not given".
#[derive(Clone, Debug, Default)]
pub struct Settings {
    pub n: Option<u32>,
    pub m: Option<u32>,
    pub shape: Option<f64>,
    pub scale_rate: Option<f64>,
    pub k1: Option<f64>,
    pub k2: Option<f64>,
    pub k3: Option<f64>,
    pub seed: Option<u64>,
    pub scheme: Option<String>,
    pub output_format: Option<OutputFormat>,
    pub threads: Option<usize>,
    pub budget: Option<u128>,
    pub population_size: Option<usize>,
    pub tournament_size: Option<usize>,
    pub crossover_rate: Option<f64>,
    pub blend_alpha: Option<f64>,
    pub mutation_rate: Option<f64>,
    pub max_generations: Option<u32>,
    pub stagnation_limit: Option<u32>,
    pub elite_count: Option<usize>,
    pub replications: Option<u64>,
    pub phi0: Option<f64>,
    pub phi: Vec<f64>,
    pub perturb: Vec<(f64, f64, f64)>,
    pub min_m: Option<u32>,
    pub max_m: Option<u32>,
    pub max_iters: Option<u32>,
    pub mode: Option<ModeKind>,
}

impl Settings {
    /// Fills every unset field from `fallback` (config-file values).
    pub fn or_from(&mut self, fallback: Settings) {
        macro_rules! fill {
            ($($field:ident),*) => {
                $(if self.$field.is_none() { self.$field = fallback.$field; })*
            };
        }
        fill!(
            n, m, shape, scale_rate, k1, k2, k3, seed, scheme, output_format, threads, budget,
            population_size, tournament_size, crossover_rate, blend_alpha, mutation_rate,
            max_generations, stagnation_limit, elite_count, replications, phi0, min_m, max_m,
            max_iters, mode
        );
        if self.phi.is_empty() {
            self.phi = fallback.phi;
        }
        if self.perturb.is_empty() {
            self.perturb = fallback.perturb;
        }
    }

    /// Parses a flat `key = value` file; `#` starts a comment.
    pub fn from_config_file(path: &Path) -> Result<Settings, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config file {}: {e}", path.display()))?;
        let mut settings = Settings::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected `key = value`", lineno + 1))?;
            settings
                .set(key.trim(), value.trim())
                .map_err(|e| format!("line {}: {e}", lineno + 1))?;
        }
        Ok(settings)
    }

    fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        fn num<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, String> {
            value.parse().map_err(|_| format!("invalid value `{value}` for `{key}`"))
        }
        match key {
            "n" => self.n = Some(num(key, value)?),
            "m" => self.m = Some(num(key, value)?),
            "shape" => self.shape = Some(num(key, value)?),
            "scale_rate" => self.scale_rate = Some(num(key, value)?),
            "k1" => self.k1 = Some(num(key, value)?),
            "k2" => self.k2 = Some(num(key, value)?),
            "k3" => self.k3 = Some(num(key, value)?),
            "seed" => self.seed = Some(num(key, value)?),
            "scheme" => self.scheme = Some(value.to_string()),
            "output_format" => self.output_format = Some(OutputFormat::parse(value)?),
            "threads" => self.threads = Some(num(key, value)?),
            "budget" => self.budget = Some(num(key, value)?),
            "population_size" => self.population_size = Some(num(key, value)?),
            "tournament_size" => self.tournament_size = Some(num(key, value)?),
            "crossover_rate" => self.crossover_rate = Some(num(key, value)?),
            "blend_alpha" => self.blend_alpha = Some(num(key, value)?),
            "mutation_rate" => self.mutation_rate = Some(num(key, value)?),
            "max_generations" => self.max_generations = Some(num(key, value)?),
            "stagnation_limit" => self.stagnation_limit = Some(num(key, value)?),
            "elite_count" => self.elite_count = Some(num(key, value)?),
            "replications" => self.replications = Some(num(key, value)?),
            "phi0" => self.phi0 = Some(num(key, value)?),
            "phi" => {
                self.phi = value
                    .split(',')
                    .map(|v| num("phi", v.trim()))
                    .collect::<Result<_, _>>()?;
            }
            "perturb" => {
                self.perturb = value
                    .split(';')
                    .map(parse_triple)
                    .collect::<Result<_, _>>()?;
            }
            "min_m" => self.min_m = Some(num(key, value)?),
            "max_m" => self.max_m = Some(num(key, value)?),
            "max_iters" => self.max_iters = Some(num(key, value)?),
            "mode" => self.mode = Some(ModeKind::parse(value)?),
            other => return Err(format!("unknown config key `{other}`")),
        }
        Ok(())
    }
}

/// Parses a `k1,k2,k3` coefficient triple.
pub fn parse_triple(text: &str) -> Result<(f64, f64, f64), String> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("expected `k1,k2,k3`, got `{text}`"));
    }
    let mut values = [0.0f64; 3];
    for (slot, part) in values.iter_mut().zip(&parts) {
        *slot = part
            .parse()
            .map_err(|_| format!("invalid coefficient `{part}` in `{text}`"))?;
    }
    Ok((values[0], values[1], values[2]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn parses_flat_file_and_respects_flag_precedence() {
        let dir = std::env::temp_dir();
        let path = dir.join(format!("procens-config-test-{}.cfg", std::process::id()));
        let mut file = std::fs::File::create(&path).unwrap();
        writeln!(file, "# fixture").unwrap();
        writeln!(file, "n = 15").unwrap();
        writeln!(file, "m = 5").unwrap();
        writeln!(file, "shape = 2.0").unwrap();
        writeln!(file, "seed = 9").unwrap();
        writeln!(file, "phi = 1.85, 1.90").unwrap();
        writeln!(file, "perturb = 7,50,250; 8,50,250").unwrap();
        writeln!(file, "output_format = json").unwrap();
        drop(file);

        let from_file = Settings::from_config_file(&path).unwrap();
        let mut flags = Settings { n: Some(20), ..Settings::default() };
        flags.or_from(from_file);
        std::fs::remove_file(&path).ok();

        assert_eq!(flags.n, Some(20)); // flag wins
        assert_eq!(flags.m, Some(5));
        assert_eq!(flags.shape, Some(2.0));
        assert_eq!(flags.seed, Some(9));
        assert_eq!(flags.phi, vec![1.85, 1.90]);
        assert_eq!(flags.perturb, vec![(7.0, 50.0, 250.0), (8.0, 50.0, 250.0)]);
        assert_eq!(flags.output_format, Some(OutputFormat::Json));
    }

    #[test]
    fn rejects_unknown_keys_and_bad_values() {
        let dir = std::env::temp_dir();
        let path = dir.join(format!("procens-config-bad-{}.cfg", std::process::id()));
        std::fs::write(&path, "bogus = 1\n").unwrap();
        let err = Settings::from_config_file(&path).unwrap_err();
        assert!(err.contains("bogus"), "{err}");
        std::fs::write(&path, "n = x\n").unwrap();
        let err = Settings::from_config_file(&path).unwrap_err();
        assert!(err.contains("invalid value"), "{err}");
        std::fs::remove_file(&path).ok();
    }
}
