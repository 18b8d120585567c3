use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::registry::Check;
use crate::error::{Error, Result};
use crate::exact_arith::is_prime;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReportFormat {
    #[default]
    Jsonlines,
    CsvSummary,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "jsonl" | "jsonlines" => Ok(ReportFormat::Jsonlines),
            "csv" | "csv-summary" => Ok(ReportFormat::CsvSummary),
            other => Err(format!(
                "unknown report format {other:?}; expected jsonl or csv-summary"
            )),
        }
    }
}

impl fmt::Display for ReportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReportFormat::Jsonlines => "jsonlines",
            ReportFormat::CsvSummary => "csv-summary",
        })
    }
}

/// What to verify and over which parameter grid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub checks: Vec<String>,
    pub primes: Vec<u64>,
    pub m_max: u64,
    pub r_max: u32,
    pub n_max: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
    pub format: ReportFormat,
    pub workers: usize,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            checks: Vec::new(),
            primes: vec![3, 5, 7],
            m_max: 3,
            r_max: 2,
            n_max: 10,
            out: None,
            format: ReportFormat::Jsonlines,
            workers: 1,
        }
    }
}

impl CampaignConfig {
    pub fn validate(&self) -> Result<()> {
        for name in &self.checks {
            if Check::from_name(name).is_none() {
                return Err(Error::ConfigInvalid(format!("unknown check {name:?}")));
            }
        }
        if self.m_max == 0 || self.r_max == 0 || self.n_max == 0 {
            return Err(Error::ConfigInvalid(
                "m_max, r_max and n_max must be at least 1".into(),
            ));
        }
        if self.workers == 0 {
            return Err(Error::ConfigInvalid("workers must be at least 1".into()));
        }
        if let Some(&p) = self.primes.iter().find(|&&p| p < 3 || !is_prime(p)) {
            return Err(Error::ConfigInvalid(format!("{p} is not an odd prime")));
        }
        Ok(())
    }

    /// Overlay the fields present in `file`.
    pub fn apply(&mut self, file: ConfigFile) -> Result<()> {
        if let Some(v) = file.checks {
            self.checks = v;
        }
        match (file.primes, file.prime_max) {
            (Some(_), Some(_)) => {
                return Err(Error::ConfigInvalid(
                    "give either primes or prime_max, not both".into(),
                ))
            }
            (Some(v), None) => self.primes = v,
            (None, Some(max)) => self.primes = odd_primes_up_to(max),
            (None, None) => {}
        }
        if let Some(v) = file.m_max {
            self.m_max = v;
        }
        if let Some(v) = file.r_max {
            self.r_max = v;
        }
        if let Some(v) = file.n_max {
            self.n_max = v;
        }
        if let Some(v) = file.out {
            self.out = Some(v);
        }
        if let Some(v) = file.format {
            self.format = v.parse().map_err(Error::ConfigInvalid)?;
        }
        if let Some(v) = file.workers {
            self.workers = v;
        }
        Ok(())
    }
}

/// Every field optional; the same names as the `verify` flags.
#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub checks: Option<Vec<String>>,
    pub primes: Option<Vec<u64>>,
    pub prime_max: Option<u64>,
    pub m_max: Option<u64>,
    pub r_max: Option<u32>,
    pub n_max: Option<u64>,
    pub out: Option<PathBuf>,
    pub format: Option<String>,
    pub workers: Option<usize>,
}

impl ConfigFile {
    /// Read a TOML file, or JSON when the extension is `.json`.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::ConfigInvalid(format!("cannot read {}: {e}", path.display())))?;
        if path.extension().is_some_and(|e| e == "json") {
            serde_json::from_str(&text).map_err(|e| Error::ConfigInvalid(e.to_string()))
        } else {
            toml::from_str(&text).map_err(|e| Error::ConfigInvalid(e.to_string()))
        }
    }
}

pub fn odd_primes_up_to(max: u64) -> Vec<u64> {
    (3..=max).filter(|&p| is_prime(p)).collect()
}
