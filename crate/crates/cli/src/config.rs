use std::path::Path;
use std::str::FromStr;

use thiserror::Error;

/// The range parameters of the reference energy table, fm⁻¹.
pub const TABLE_ALPHAS: [f64; 6] = [1.2, 0.8, 0.4, 0.2, 0.02, 0.002];

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("invalid value for `{key}`: {reason}")]
    Invalid { key: String, reason: String },
    #[error("unknown config key `{0}`")]
    UnknownKey(String),
    #[error("{path}:{line}: expected `key = value`")]
    Syntax { path: String, line: usize },
    #[error("cannot read config file {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl ConfigError {
    fn invalid(key: &str, reason: impl Into<String>) -> Self {
        ConfigError::Invalid {
            key: key.to_string(),
            reason: reason.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Tsv,
    Json,
}

impl OutputFormat {
    pub fn separator(self) -> &'static str {
        match self {
            OutputFormat::Tsv => "\t",
            _ => ",",
        }
    }
}

impl FromStr for OutputFormat {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "tsv" => Ok(OutputFormat::Tsv),
            "json" => Ok(OutputFormat::Json),
            other => Err(ConfigError::invalid("format", format!("`{other}` is not one of csv, tsv, json"))),
        }
    }
}

/// Physical inputs and output settings for one run. Defaults reproduce the
/// reference table: m = 10, V1 = 5, V2 = 3 fm⁻¹.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub m: f64,
    pub v1: f64,
    pub v2: f64,
    pub alphas: Vec<f64>,
    pub n_max: usize,
    pub grid_points: usize,
    /// Relative band for the finite-difference comparison in `verify`.
    pub tol: f64,
    pub format: OutputFormat,
    pub precision: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            m: 10.0,
            v1: 5.0,
            v2: 3.0,
            alphas: TABLE_ALPHAS.to_vec(),
            n_max: 6,
            grid_points: 8000,
            tol: 1e-4,
            format: OutputFormat::Csv,
            precision: 8,
        }
    }
}

fn parse_f64(key: &str, value: &str) -> Result<f64, ConfigError> {
    value
        .trim()
        .parse()
        .map_err(|_| ConfigError::invalid(key, format!("`{}` is not a number", value.trim())))
}

fn parse_usize(key: &str, value: &str) -> Result<usize, ConfigError> {
    value
        .trim()
        .parse()
        .map_err(|_| ConfigError::invalid(key, format!("`{}` is not a non-negative integer", value.trim())))
}

pub fn parse_alpha_list(value: &str) -> Result<Vec<f64>, ConfigError> {
    value
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_f64("alpha", s))
        .collect()
}

impl RunConfig {
    /// Sets one field from its flag name (without the leading dashes).
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), ConfigError> {
        match key {
            "m" => self.m = parse_f64(key, value)?,
            "v1" => self.v1 = parse_f64(key, value)?,
            "v2" => self.v2 = parse_f64(key, value)?,
            "alpha" | "alphas" => self.alphas = parse_alpha_list(value)?,
            "nmax" | "n_max" => self.n_max = parse_usize(key, value)?,
            "grid-points" | "grid_points" => self.grid_points = parse_usize(key, value)?,
            "tol" => self.tol = parse_f64(key, value)?,
            "format" => self.format = value.parse()?,
            "precision" => self.precision = parse_usize(key, value)?,
            _ => return Err(ConfigError::UnknownKey(key.to_string())),
        }
        Ok(())
    }

    /// Applies `key = value` lines. Blank lines and `#` comments are skipped.
    pub fn apply_file_contents(&mut self, contents: &str, path: &str) -> Result<(), ConfigError> {
        for (index, raw) in contents.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| ConfigError::Syntax {
                path: path.to_string(),
                line: index + 1,
            })?;
            self.set(key.trim(), value.trim())?;
        }
        Ok(())
    }

    pub fn apply_file(&mut self, path: &Path) -> Result<(), ConfigError> {
        let display = path.display().to_string();
        let contents = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: display.clone(),
            source,
        })?;
        self.apply_file_contents(&contents, &display)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        for (key, value) in [("m", self.m), ("v1", self.v1), ("v2", self.v2), ("tol", self.tol)] {
            if !(value.is_finite() && value > 0.0) {
                return Err(ConfigError::invalid(key, format!("{value} must be positive")));
            }
        }
        if self.alphas.is_empty() {
            return Err(ConfigError::invalid("alpha", "at least one value is required"));
        }
        if let Some(a) = self.alphas.iter().find(|a| !(a.is_finite() && **a > 0.0)) {
            return Err(ConfigError::invalid("alpha", format!("{a} must be positive")));
        }
        if !(1..=17).contains(&self.precision) {
            return Err(ConfigError::invalid("precision", format!("{} is outside 1..=17", self.precision)));
        }
        if self.grid_points < ptnu_core::oracle::MIN_GRID_POINTS {
            return Err(ConfigError::invalid(
                "grid-points",
                format!("{} is below {}", self.grid_points, ptnu_core::oracle::MIN_GRID_POINTS),
            ));
        }
        Ok(())
    }
}
