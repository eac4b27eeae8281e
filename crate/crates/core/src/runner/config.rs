//! Experiment configuration: a JSON document plus command-line overrides.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::divergences::{Quantifier, SkewParam};
use crate::error::{Error, Result};
use crate::models::{JCParams, MAX_ENVIRONMENT_QUBITS};
use crate::tolerances::Tolerances;

/// Environment variable naming the directory for outputs given without a path.
pub const OUTPUT_DIR_ENV: &str = "BACKFLOW_OUTPUT_DIR";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpinStarConfig {
    #[serde(default = "SpinStarConfig::default_n_env")]
    pub n_env: usize,
    /// `g_bar`: couplings are drawn uniformly from `(0, 2 g_bar]` unless given explicitly.
    #[serde(default = "SpinStarConfig::default_mean_coupling")]
    pub mean_coupling: f64,
    #[serde(default)]
    pub couplings: Option<Vec<f64>>,
    #[serde(default)]
    pub omega_s: f64,
    #[serde(default)]
    pub omega_e: Option<Vec<f64>>,
}

impl SpinStarConfig {
    fn default_n_env() -> usize {
        5
    }

    fn default_mean_coupling() -> f64 {
        1.0
    }
}

impl Default for SpinStarConfig {
    fn default() -> Self {
        Self {
            n_env: Self::default_n_env(),
            mean_coupling: Self::default_mean_coupling(),
            couplings: None,
            omega_s: 0.0,
            omega_e: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ModelConfig {
    #[serde(alias = "spin-star")]
    SpinStar(SpinStarConfig),
    #[serde(alias = "jaynes_cummings")]
    Jc(JCParams),
}

impl ModelConfig {
    pub fn kind(&self) -> ModelKind {
        match self {
            ModelConfig::SpinStar(_) => ModelKind::SpinStar,
            ModelConfig::Jc(_) => ModelKind::Jc,
        }
    }

    /// Horizon used when the configuration leaves it out.
    pub fn default_horizon(&self) -> f64 {
        match self {
            ModelConfig::SpinStar(c) => 5.0 / c.mean_coupling,
            ModelConfig::Jc(p) => 8.9 / p.g,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelKind {
    #[serde(alias = "spin-star")]
    SpinStar,
    #[serde(alias = "jaynes_cummings")]
    Jc,
}

impl ModelKind {
    pub fn default_config(self) -> ModelConfig {
        match self {
            ModelKind::SpinStar => ModelConfig::SpinStar(SpinStarConfig::default()),
            ModelKind::Jc => ModelConfig::Jc(JCParams::default()),
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "spin_star" | "spin-star" => Some(ModelKind::SpinStar),
            "jc" | "jaynes_cummings" => Some(ModelKind::Jc),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl OutputFormat {
    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "csv" => Some(OutputFormat::Csv),
            "json" => Some(OutputFormat::Json),
            _ => None,
        }
    }

    pub fn extension(self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }
}

/// Which backflow bound the table reports for the entropic quantifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundVariant {
    /// Family-specific bounds with fourth roots summed term by term.
    #[default]
    Tight,
    /// Generic bound with `phi o phi` on the environment term.
    General,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub model: ModelConfig,
    #[serde(default = "ExperimentConfig::default_mu")]
    pub mu: SkewParam,
    #[serde(default = "ExperimentConfig::default_quantifiers")]
    pub quantifiers: Vec<Quantifier>,
    /// Reference time `T`; the model default when absent.
    #[serde(default)]
    pub horizon: Option<f64>,
    #[serde(default = "ExperimentConfig::default_grid_points")]
    pub grid_points: usize,
    #[serde(default = "ExperimentConfig::default_seed")]
    pub seed: u64,
    #[serde(default)]
    pub output: Option<PathBuf>,
    #[serde(default)]
    pub format: OutputFormat,
    #[serde(default)]
    pub bound: BoundVariant,
    #[serde(default)]
    pub tolerances: Tolerances,
}

impl ExperimentConfig {
    fn default_mu() -> SkewParam {
        SkewParam::HALF
    }

    fn default_quantifiers() -> Vec<Quantifier> {
        vec![
            Quantifier::TraceDistance,
            Quantifier::Helstrom,
            Quantifier::HolevoSkew,
            Quantifier::QuantumSkew,
            Quantifier::SqrtJensenShannon,
        ]
    }

    fn default_grid_points() -> usize {
        400
    }

    fn default_seed() -> u64 {
        1
    }

    pub fn for_model(kind: ModelKind) -> Self {
        Self {
            model: kind.default_config(),
            mu: Self::default_mu(),
            quantifiers: Self::default_quantifiers(),
            horizon: None,
            grid_points: Self::default_grid_points(),
            seed: Self::default_seed(),
            output: None,
            format: OutputFormat::default(),
            bound: BoundVariant::default(),
            tolerances: Tolerances::DEFAULT,
        }
    }

    /// Parses and validates a JSON configuration; errors name the offending field.
    pub fn from_json(text: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let config: Self = serde_path_to_error::deserialize(de).map_err(|e| {
            let field = e.path().to_string();
            Error::Config {
                field: if field == "." { "<root>".into() } else { field },
                message: e.into_inner().to_string(),
            }
        })?;
        config.validate()?;
        Ok(config)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Serialization(e.to_string()))
    }

    pub fn horizon(&self) -> f64 {
        self.horizon.unwrap_or_else(|| self.model.default_horizon())
    }

    /// Output path, resolving a missing one against [`OUTPUT_DIR_ENV`] (or the working directory).
    pub fn resolved_output(&self) -> PathBuf {
        if let Some(path) = &self.output {
            return path.clone();
        }
        let dir = std::env::var_os(OUTPUT_DIR_ENV).map(PathBuf::from).unwrap_or_else(|| PathBuf::from("."));
        let model = match self.model.kind() {
            ModelKind::SpinStar => "spin_star",
            ModelKind::Jc => "jc",
        };
        dir.join(format!("figure_{model}.{}", self.format.extension()))
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |field: &str, message: String| Error::Config {
            field: field.into(),
            message,
        };
        if let Some(t) = self.horizon {
            if !(t > 0.0 && t.is_finite()) {
                return Err(bad("horizon", format!("must be positive and finite, got {t}")));
            }
        }
        if self.grid_points < 2 {
            return Err(bad("grid_points", format!("must be at least 2, got {}", self.grid_points)));
        }
        if self.quantifiers.is_empty() {
            return Err(bad("quantifiers", "must name at least one quantifier".into()));
        }
        let mut seen = self.quantifiers.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != self.quantifiers.len() {
            return Err(bad("quantifiers", "contains duplicates".into()));
        }
        let tol = &self.tolerances;
        for (name, value) in [
            ("tolerances.structural", tol.structural),
            ("tolerances.solver", tol.solver),
            ("tolerances.support_eigenvalue", tol.support_eigenvalue),
            ("tolerances.support_overlap", tol.support_overlap),
            ("tolerances.violation", tol.violation),
        ] {
            if !(value >= 0.0 && value.is_finite()) {
                return Err(bad(name, format!("must be nonnegative and finite, got {value}")));
            }
        }
        match &self.model {
            ModelConfig::SpinStar(c) => {
                if c.n_env == 0 || c.n_env > MAX_ENVIRONMENT_QUBITS {
                    return Err(bad(
                        "model.n_env",
                        format!("must be between 1 and {MAX_ENVIRONMENT_QUBITS}, got {}", c.n_env),
                    ));
                }
                if !(c.mean_coupling > 0.0 && c.mean_coupling.is_finite()) {
                    return Err(bad("model.mean_coupling", format!("must be positive, got {}", c.mean_coupling)));
                }
                if let Some(g) = &c.couplings {
                    if g.len() != c.n_env || g.iter().any(|x| *x == 0.0 || !x.is_finite()) {
                        return Err(bad("model.couplings", format!("needs {} nonzero finite entries", c.n_env)));
                    }
                }
                if let Some(w) = &c.omega_e {
                    if w.len() != c.n_env || w.iter().any(|x| !x.is_finite()) {
                        return Err(bad("model.omega_e", format!("needs {} finite entries", c.n_env)));
                    }
                }
                if !c.omega_s.is_finite() {
                    return Err(bad("model.omega_s", "must be finite".into()));
                }
            }
            ModelConfig::Jc(p) => {
                p.check().map_err(|e| bad("model", e.to_string()))?;
            }
        }
        Ok(())
    }
}

/// Command-line overrides applied on top of a configuration file.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub model: Option<String>,
    pub mu: Option<f64>,
    pub horizon: Option<f64>,
    pub grid: Option<usize>,
    pub seed: Option<u64>,
    pub output: Option<PathBuf>,
    pub format: Option<String>,
    pub bound: Option<BoundVariant>,
}

impl Overrides {
    /// Applies the overrides; a model override of a different kind resets the model parameters.
    pub fn apply(&self, mut config: ExperimentConfig) -> Result<ExperimentConfig> {
        if let Some(name) = &self.model {
            let kind = ModelKind::parse(name).ok_or_else(|| Error::Config {
                field: "model".into(),
                message: format!("unknown model `{name}` (expected spin_star or jc)"),
            })?;
            if kind != config.model.kind() {
                config.model = kind.default_config();
                config.horizon = None;
            }
        }
        if let Some(mu) = self.mu {
            config.mu = SkewParam::new(mu).map_err(|e| Error::Config {
                field: "mu".into(),
                message: e.to_string(),
            })?;
        }
        if let Some(t) = self.horizon {
            config.horizon = Some(t);
        }
        if let Some(n) = self.grid {
            config.grid_points = n;
        }
        if let Some(seed) = self.seed {
            config.seed = seed;
        }
        if let Some(path) = &self.output {
            config.output = Some(path.clone());
        }
        if let Some(name) = &self.format {
            config.format = OutputFormat::parse(name).ok_or_else(|| Error::Config {
                field: "format".into(),
                message: format!("unknown format `{name}` (expected csv or json)"),
            })?;
        }
        if let Some(bound) = self.bound {
            config.bound = bound;
        }
        config.validate()?;
        Ok(config)
    }
}
