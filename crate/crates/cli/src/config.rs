//! Run configuration: defaults, then a `key = value` file, then flags.

use std::fmt;
use std::path::{Path, PathBuf};

use vat_core::Limits;

pub const CONFIG_ENV: &str = "VAT_CONFIG";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub max_n: usize,
    pub edge_budget: usize,
    pub node_budget: u64,
    pub time_budget_s: u64,
    pub seed: u64,
    pub cache_path: PathBuf,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_n: 8,
            edge_budget: 24,
            node_budget: 100_000_000,
            time_budget_s: 600,
            seed: 0,
            cache_path: PathBuf::from("./cache.jsonl"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

fn positive<T: std::str::FromStr + PartialEq + Default>(key: &str, value: &str) -> Result<T, ConfigError> {
    let v: T = value
        .parse()
        .map_err(|_| ConfigError(format!("{key}: cannot parse {value:?}")))?;
    if v == T::default() {
        return Err(ConfigError(format!("{key} must be positive")));
    }
    Ok(v)
}

impl Config {
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), ConfigError> {
        match key {
            "max_n" => self.max_n = positive(key, value)?,
            "edge_budget" => self.edge_budget = positive(key, value)?,
            "node_budget" => self.node_budget = positive(key, value)?,
            "time_budget_s" => self.time_budget_s = positive(key, value)?,
            "seed" => {
                self.seed = value
                    .parse()
                    .map_err(|_| ConfigError(format!("seed: cannot parse {value:?}")))?
            }
            "cache_path" => {
                if value.is_empty() {
                    return Err(ConfigError("cache_path must not be empty".into()));
                }
                self.cache_path = PathBuf::from(value)
            }
            _ => return Err(ConfigError(format!("unknown config key {key:?}"))),
        }
        Ok(())
    }

    /// Applies a `key = value` file on top of `self`. Blank lines and lines
    /// starting with `#` are skipped.
    pub fn apply_str(&mut self, text: &str) -> Result<(), ConfigError> {
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| ConfigError(format!("line {}: expected key = value", i + 1)))?;
            self.set(key.trim(), value.trim())
                .map_err(|e| ConfigError(format!("line {}: {e}", i + 1)))?;
        }
        Ok(())
    }

    pub fn apply_file(&mut self, path: &Path) -> Result<(), ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ConfigError(format!("cannot read config {}: {e}", path.display())))?;
        self.apply_str(&text)
    }

    /// Defaults overlaid with the file named by `VAT_CONFIG`, if set.
    pub fn from_env() -> Result<Self, ConfigError> {
        let mut c = Config::default();
        if let Some(path) = std::env::var_os(CONFIG_ENV) {
            c.apply_file(Path::new(&path))?;
        }
        Ok(c)
    }

    pub fn limits(&self) -> Limits {
        Limits {
            node_budget: self.node_budget,
            edge_budget: self.edge_budget,
            max_n: self.max_n,
            ..Limits::default()
        }
    }
}
