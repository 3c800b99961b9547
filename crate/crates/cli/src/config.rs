//! Sweep configuration: flags, TOML files and their merge.

use std::path::{Path, PathBuf};

use clap::ValueEnum;
use cluster_index::{IndObj, ModelParams, Route};
use serde::{Deserialize, Serialize};

use crate::checks::CheckKind;
use crate::error::CliError;

pub const DEFAULT_CAP: usize = 500;

/// Environment variable naming the default output directory.
pub const OUT_DIR_ENV: &str = "CLUSTER_INDEX_OUT_DIR";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Table,
    Dot,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Table => "txt",
            Format::Dot => "dot",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Case {
    pub n: usize,
    pub d: usize,
}

impl Case {
    pub fn params(self) -> Result<ModelParams, CliError> {
        ModelParams::new(self.n, self.d).map_err(|e| CliError::Usage(e.to_string()))
    }
}

/// Which tilting objects a sweep visits in each case.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TiltingScope {
    #[default]
    All,
    /// The first `k` in enumeration order.
    First(usize),
    /// Families in `a,b,c;d,e,f` notation.
    Explicit(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub cases: Vec<Case>,
    #[serde(default)]
    pub tilting: TiltingScope,
    #[serde(default = "all_checks")]
    pub checks: Vec<CheckKind>,
    #[serde(default)]
    pub format: Format,
    #[serde(default)]
    pub out: Option<PathBuf>,
    #[serde(default = "default_cap")]
    pub cap: usize,
    #[serde(default)]
    pub workers: Option<usize>,
    #[serde(default)]
    pub route: Route,
    #[serde(default)]
    pub timing: bool,
    #[serde(default)]
    pub prime_check: bool,
}

fn all_checks() -> Vec<CheckKind> {
    CheckKind::ALL.to_vec()
}

fn default_cap() -> usize {
    DEFAULT_CAP
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            cases: Vec::new(),
            tilting: TiltingScope::All,
            checks: all_checks(),
            format: Format::Json,
            out: None,
            cap: DEFAULT_CAP,
            workers: None,
            route: Route::Both,
            timing: false,
            prime_check: false,
        }
    }
}

/// The part of the configuration that determines report content.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub cases: Vec<Case>,
    pub tilting: TiltingScope,
    pub checks: Vec<CheckKind>,
    pub cap: usize,
    pub route: Route,
    pub prime_check: bool,
}

impl SweepConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)?;
        toml::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
    }

    /// Checks in canonical order without repeats.
    pub fn selected_checks(&self) -> Vec<CheckKind> {
        CheckKind::ALL.into_iter().filter(|c| self.checks.contains(c)).collect()
    }

    pub fn echo(&self) -> ConfigEcho {
        ConfigEcho {
            cases: self.cases.clone(),
            tilting: self.tilting.clone(),
            checks: self.selected_checks(),
            cap: self.cap,
            route: self.route,
            prime_check: self.prime_check,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.cases.is_empty() {
            return Err(CliError::Usage("no cases given: pass --n and --d or a config file with cases".into()));
        }
        if self.checks.is_empty() {
            return Err(CliError::Usage("no checks selected".into()));
        }
        if self.format == Format::Dot {
            return Err(CliError::Usage("verify reports support json, csv and table".into()));
        }
        for case in &self.cases {
            enforce_cap(&case.params()?, self.cap)?;
        }
        Ok(())
    }
}

pub fn enforce_cap(params: &ModelParams, cap: usize) -> Result<(), CliError> {
    let count = params.object_count();
    if count > cap {
        return Err(CliError::Usage(format!(
            "n={} d={} has {count} indecomposable objects, above the cap of {cap} (raise it with --cap)",
            params.n(),
            params.d()
        )));
    }
    Ok(())
}

/// Parses `a,b,c` into a sorted vertex list.
pub fn parse_vertices(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .map(|v| v.trim().parse::<usize>().map_err(|_| CliError::Usage(format!("bad vertex {v:?} in {text:?}"))))
        .collect()
}

/// Parses `a,b,c;d,e,f;...` into vertex lists.
pub fn parse_family(text: &str) -> Result<Vec<Vec<usize>>, CliError> {
    text.split(';').map(str::trim).filter(|s| !s.is_empty()).map(parse_vertices).collect()
}

pub fn parse_object(text: &str, params: &ModelParams) -> Result<IndObj, CliError> {
    IndObj::new(parse_vertices(text)?, params).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn parse_objects(text: &str, params: &ModelParams) -> Result<Vec<IndObj>, CliError> {
    parse_family(text)?
        .into_iter()
        .map(|v| IndObj::new(v, params).map_err(|e| CliError::Usage(e.to_string())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_notation() {
        assert_eq!(parse_family("1,3,5;1,3,6; 1,4,6;").unwrap(), vec![vec![1, 3, 5], vec![1, 3, 6], vec![1, 4, 6]]);
        assert!(parse_family("1,x").is_err());
    }

    #[test]
    fn toml_round_trip() {
        let text = r#"
            cases = [{ n = 2, d = 1 }, { n = 2, d = 3 }]
            tilting = { first = 4 }
            checks = ["injectivity", "dimension-formula"]
            route = "system"
        "#;
        let config: SweepConfig = toml::from_str(text).unwrap();
        assert_eq!(config.cases.len(), 2);
        assert_eq!(config.tilting, TiltingScope::First(4));
        assert_eq!(config.selected_checks(), vec![CheckKind::DimensionFormula, CheckKind::Injectivity]);
        assert_eq!(config.cap, DEFAULT_CAP);
        let back: SweepConfig = toml::from_str(&toml::to_string(&config).unwrap()).unwrap();
        assert_eq!(back, config);
    }

    #[test]
    fn cap_refuses_with_count() {
        let config = SweepConfig { cases: vec![Case { n: 4, d: 3 }], cap: 50, ..Default::default() };
        let err = config.validate().unwrap_err().to_string();
        assert!(err.contains("55"), "{err}");
    }
}
