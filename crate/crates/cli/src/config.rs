//! Flat key=value run configuration.
//!
//! `#` starts a comment, blank lines are ignored, unknown keys are errors,
//! and every search or objective parameter can be set. An empty file gives
//! the standard run: 65 residues, `test2` weights, th 4.30 Å, c 5.50 Å, tree
//! height 40, 20 climb-ups, memory 10, 100 starting trees, cap 3000 trees.

use std::path::PathBuf;

use monkeyfold_core::monkey_search::MsParams;
use monkeyfold_core::objective::WeightPreset;
use monkeyfold_core::protein::{AllowedRegion, AngleBox, PerturbParams};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("line {line}: unknown key {key:?}")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: bad value for {key:?}: {cause}")]
    BadValue { line: usize, key: String, cause: String },
    #[error("line {line}: expected key = value")]
    MissingEquals { line: usize },
    #[error("invalid configuration: {0}")]
    Invalid(String),
}

/// Everything a batch run needs.
#[derive(Debug, Clone)]
pub struct RunConfig {
    /// Chain length.
    pub n: usize,
    /// Weights (γ1, γ2, γ3) for single-group runs.
    pub weights: (f64, f64, f64),
    /// When non-empty, one simulation group per preset (batch mode).
    pub presets: Vec<WeightPreset>,
    pub th: f64,
    pub c: f64,
    /// Simulations per group.
    pub count: usize,
    /// Base seed; simulation i of group g runs with seed + g·count + i.
    pub seed: u64,
    pub out_dir: PathBuf,
    pub ms: MsParams,
    pub region: AllowedRegion,
    pub perturb: PerturbParams,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            n: 65,
            weights: WeightPreset::Test2.weights(),
            presets: Vec::new(),
            th: 4.30,
            c: 5.50,
            count: 1,
            seed: 1,
            out_dir: PathBuf::from("out"),
            // convergence radius of 5 degrees per angle for the protein runs
            ms: MsParams { epsilon: 5.0f64.to_radians(), ..MsParams::default() },
            region: AllowedRegion::default(),
            perturb: PerturbParams::default(),
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.n < 3 {
            return Err(ConfigError::Invalid(format!("n must be at least 3, got {}", self.n)));
        }
        if self.count == 0 {
            return Err(ConfigError::Invalid("count must be at least 1".into()));
        }
        let ws = [self.weights.0, self.weights.1, self.weights.2];
        if !ws.iter().all(|w| w.is_finite() && *w >= 0.0) {
            return Err(ConfigError::Invalid("weights must be non-negative".into()));
        }
        if !(self.th.is_finite() && self.th > 0.0 && self.c.is_finite() && self.c > 0.0) {
            return Err(ConfigError::Invalid("th and c must be positive".into()));
        }
        self.ms.validate().map_err(|e| ConfigError::Invalid(e.to_string()))?;
        Ok(())
    }
}

fn parse_num<T: std::str::FromStr>(line: usize, key: &str, value: &str) -> Result<T, ConfigError>
where
    T::Err: std::fmt::Display,
{
    value.parse().map_err(|e: T::Err| ConfigError::BadValue {
        line,
        key: key.to_string(),
        cause: e.to_string(),
    })
}

/// Degrees box `phi_lo:phi_hi:psi_lo:psi_hi`.
fn parse_box(line: usize, value: &str) -> Result<AngleBox, ConfigError> {
    let parts: Vec<&str> = value.split(':').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(ConfigError::BadValue {
            line,
            key: "region_box".into(),
            cause: format!("expected phi_lo:phi_hi:psi_lo:psi_hi, got {} fields", parts.len()),
        });
    }
    let mut vals = [0.0f64; 4];
    for (v, p) in vals.iter_mut().zip(&parts) {
        *v = parse_num(line, "region_box", p)?;
    }
    AngleBox::from_degrees(vals[0], vals[1], vals[2], vals[3]).map_err(|e| {
        ConfigError::BadValue { line, key: "region_box".into(), cause: e.to_string() }
    })
}

/// Parse configuration text into a [`RunConfig`], starting from defaults.
/// Later assignments override earlier ones; `region_box` clears the default
/// region on first use and appends afterwards.
pub fn parse_config(text: &str) -> Result<RunConfig, ConfigError> {
    let mut config = RunConfig::default();
    let mut boxes: Vec<AngleBox> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(ConfigError::MissingEquals { line: lineno });
        };
        let key = key.trim();
        let value = value.trim();
        match key {
            "n" => config.n = parse_num(lineno, key, value)?,
            "gamma1" => config.weights.0 = parse_num(lineno, key, value)?,
            "gamma2" => config.weights.1 = parse_num(lineno, key, value)?,
            "gamma3" => config.weights.2 = parse_num(lineno, key, value)?,
            "preset" => {
                let preset = WeightPreset::parse(value).ok_or_else(|| ConfigError::BadValue {
                    line: lineno,
                    key: key.into(),
                    cause: format!("unknown preset {value:?}"),
                })?;
                config.weights = preset.weights();
            }
            "presets" => {
                config.presets = value
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(|s| {
                        WeightPreset::parse(s).ok_or_else(|| ConfigError::BadValue {
                            line: lineno,
                            key: key.into(),
                            cause: format!("unknown preset {s:?}"),
                        })
                    })
                    .collect::<Result<_, _>>()?;
            }
            "th" => config.th = parse_num(lineno, key, value)?,
            "c" => config.c = parse_num(lineno, key, value)?,
            "count" => config.count = parse_num(lineno, key, value)?,
            "seed" => config.seed = parse_num(lineno, key, value)?,
            "out_dir" => config.out_dir = PathBuf::from(value),
            "height" => config.ms.height = parse_num(lineno, key, value)?,
            "climb_ups" => config.ms.climb_ups = parse_num(lineno, key, value)?,
            "memory_size" => config.ms.memory_size = parse_num(lineno, key, value)?,
            "starting_trees" => config.ms.starting_trees = parse_num(lineno, key, value)?,
            "max_trees" => config.ms.max_trees = parse_num(lineno, key, value)?,
            "better_branch_prob" => config.ms.better_branch_prob = parse_num(lineno, key, value)?,
            "climb_up_prob" => config.ms.climb_up_prob = parse_num(lineno, key, value)?,
            "epsilon_deg" => {
                config.ms.epsilon = parse_num::<f64>(lineno, key, value)?.to_radians()
            }
            "nudge_sigma_deg" => {
                config.perturb.nudge_sigma = parse_num::<f64>(lineno, key, value)?.to_radians()
            }
            "max_window" => config.perturb.max_window = parse_num(lineno, key, value)?,
            "region_box" => boxes.push(parse_box(lineno, value)?),
            _ => return Err(ConfigError::UnknownKey { line: lineno, key: key.to_string() }),
        }
    }

    if !boxes.is_empty() {
        config.region = AllowedRegion::new(boxes)
            .map_err(|e| ConfigError::Invalid(e.to_string()))?;
    }
    config.validate()?;
    Ok(config)
}
