//! Optional TOML configuration. Command-line flags override every field.
//!
//! ```toml
//! seed = 7
//!
//! [check]
//! per_free_var = [64, 64, 16, 8]
//! random_factor = 10
//!
//! [eigen]
//! grid = 4096
//! tolerance = 1e-4
//!
//! [table]
//! grid = [0.0, 0.25, 0.5, 0.75, 1.0]
//!
//! [conjecture]
//! p = [1.5, 2.0, 3.0, 5.0]
//! x = [0.25, 0.5, 0.75]
//! ```

use std::path::Path;

use anyhow::Context;
use ptrig::ineq::GridSpec;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub seed: u64,
    pub check: GridSpec,
    pub eigen: EigenConfig,
    pub table: TableConfig,
    pub conjecture: ConjectureConfig,
}

/// The residual threshold is `tolerance` at `reference_grid` points and
/// scales like the step h for other grids.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EigenConfig {
    pub grid: usize,
    pub tolerance: f64,
    pub reference_grid: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TableConfig {
    pub grid: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ConjectureConfig {
    pub p: Vec<f64>,
    pub x: Vec<f64>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: 0,
            check: GridSpec::default(),
            eigen: EigenConfig::default(),
            table: TableConfig::default(),
            conjecture: ConjectureConfig::default(),
        }
    }
}

impl Default for EigenConfig {
    fn default() -> Self {
        EigenConfig {
            grid: 4096,
            tolerance: 1e-4,
            reference_grid: 4096,
        }
    }
}

impl EigenConfig {
    pub fn threshold(&self, grid: usize) -> f64 {
        self.tolerance * self.reference_grid as f64 / grid as f64
    }
}

impl Default for TableConfig {
    fn default() -> Self {
        TableConfig {
            grid: vec![0.0, 0.25, 0.5, 0.75, 1.0],
        }
    }
}

impl Default for ConjectureConfig {
    fn default() -> Self {
        ConjectureConfig {
            p: vec![1.5, 2.0, 3.0, 5.0, 10.0],
            x: vec![0.25, 0.5, 0.75],
        }
    }
}

impl Config {
    pub fn load(path: Option<&Path>) -> anyhow::Result<Config> {
        let Some(path) = path else {
            return Ok(Config::default());
        };
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read config file {}", path.display()))?;
        toml::from_str(&text).with_context(|| format!("invalid config file {}", path.display()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_file_keeps_defaults() {
        let c: Config = toml::from_str("seed = 9\n[eigen]\ntolerance = 2e-4\n").unwrap();
        assert_eq!(c.seed, 9);
        assert_eq!(c.eigen.tolerance, 2e-4);
        assert_eq!(c.eigen.grid, 4096);
        assert_eq!(c.check, GridSpec::default());
    }

    #[test]
    fn unknown_keys_rejected() {
        assert!(toml::from_str::<Config>("sed = 1\n").is_err());
    }

    #[test]
    fn threshold_scales_with_step() {
        let e = EigenConfig::default();
        assert_eq!(e.threshold(4096), 1e-4);
        assert_eq!(e.threshold(2048), 2e-4);
    }
}
