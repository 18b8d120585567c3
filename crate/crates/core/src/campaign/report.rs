use std::collections::BTreeMap;
use std::fmt;
use std::io::{self, Write};

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use super::config::{CampaignConfig, ReportFormat};
use super::registry::Case;
use crate::exact_arith::{CongruenceOutcome, Rational, Valuation};

/// A grid coordinate. Ordering is numeric within a kind.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ParamValue {
    Int(i64),
    Rat(Rational),
    Text(String),
}

impl ParamValue {
    /// Panics on a non-integer or negative value; grids only hand these out where expected.
    pub(crate) fn as_u64(&self) -> u64 {
        match self {
            ParamValue::Int(v) => u64::try_from(*v).expect("nonnegative grid value"),
            other => panic!("expected an integer grid value, got {other}"),
        }
    }

    pub(crate) fn as_rational(&self) -> Rational {
        match self {
            ParamValue::Int(v) => Rational::from_integer(BigInt::from(*v)),
            ParamValue::Rat(q) => q.clone(),
            ParamValue::Text(t) => panic!("expected a rational grid value, got {t}"),
        }
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::Rat(q) => write!(f, "{q}"),
            ParamValue::Text(t) => f.write_str(t),
        }
    }
}

fn decimal<T: fmt::Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn opt_decimal<T: fmt::Display, S: Serializer>(v: &Option<T>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.collect_str(v),
        None => s.serialize_none(),
    }
}

/// One line of a JSON-lines report. Integers serialize as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub check: String,
    #[serde(serialize_with = "decimal")]
    pub p: u64,
    /// `None` for exact identities.
    #[serde(serialize_with = "opt_decimal")]
    pub k_required: Option<i64>,
    pub params: BTreeMap<String, String>,
    #[serde(serialize_with = "opt_decimal")]
    pub lhs_residue: Option<BigInt>,
    #[serde(serialize_with = "opt_decimal")]
    pub rhs_residue: Option<BigInt>,
    /// `None` when the cell errored or an exact identity failed.
    pub achieved_valuation: Option<Valuation>,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip)]
    pub(crate) key: Vec<ParamValue>,
}

impl Record {
    fn base(case: &Case, extra: &[(&str, ParamValue)]) -> Record {
        let mut params = BTreeMap::new();
        let mut key = case.args.clone();
        for (name, value) in case.check.param_names().iter().zip(&case.args) {
            params.insert((*name).to_owned(), value.to_string());
        }
        for (name, value) in extra {
            params.insert((*name).to_owned(), value.to_string());
            key.push(value.clone());
        }
        Record {
            check: case.check.name().to_owned(),
            p: case.p,
            k_required: None,
            params,
            lhs_residue: None,
            rhs_residue: None,
            achieved_valuation: None,
            holds: false,
            error: None,
            key,
        }
    }

    pub(crate) fn from_outcome(
        case: &Case,
        o: &CongruenceOutcome,
        extra: &[(&str, ParamValue)],
    ) -> Record {
        Record {
            k_required: Some(o.required_valuation),
            lhs_residue: o.lhs_residue.clone(),
            rhs_residue: o.rhs_residue.clone(),
            achieved_valuation: Some(o.achieved_valuation),
            holds: o.holds,
            ..Record::base(case, extra)
        }
    }

    /// An exact identity: no modulus, valuation infinite when it holds.
    pub(crate) fn exact(case: &Case, holds: bool) -> Record {
        Record {
            achieved_valuation: holds.then_some(Valuation::Infinite),
            holds,
            ..Record::base(case, &[])
        }
    }

    /// `value ≡ 0 (mod p^k)` given `value` already reduced and its valuation.
    pub(crate) fn vanishing(
        case: &Case,
        extra: &[(&str, ParamValue)],
        k: i64,
        reduced: BigInt,
        v: Valuation,
    ) -> Record {
        Record {
            k_required: Some(k),
            lhs_residue: Some(reduced),
            rhs_residue: Some(BigInt::from(0)),
            achieved_valuation: Some(v),
            holds: v.at_least(k),
            ..Record::base(case, extra)
        }
    }

    pub(crate) fn errored(case: &Case, message: String) -> Record {
        Record {
            error: Some(message),
            ..Record::base(case, &[])
        }
    }

    fn sort_key(&self) -> (&str, u64, &[ParamValue]) {
        (&self.check, self.p, &self.key)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: u64,
    pub passed: u64,
    pub failed: u64,
    pub errored: u64,
    pub skipped: u64,
}

impl Summary {
    fn add(&mut self, r: &Record) {
        self.total += 1;
        if r.error.is_some() {
            self.errored += 1;
        } else if r.holds {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0 && self.errored == 0
    }
}

/// The part of the configuration that determines report content.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfigEcho {
    pub checks: Vec<String>,
    pub primes: Vec<u64>,
    pub m_max: u64,
    pub r_max: u32,
    pub n_max: u64,
}

impl From<&CampaignConfig> for ConfigEcho {
    fn from(c: &CampaignConfig) -> Self {
        ConfigEcho {
            checks: c.checks.clone(),
            primes: c.primes.clone(),
            m_max: c.m_max,
            r_max: c.r_max,
            n_max: c.n_max,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CampaignReport {
    pub records: Vec<Record>,
    pub summary: Summary,
    pub skipped_by_check: BTreeMap<String, u64>,
    pub config: ConfigEcho,
    pub workers: usize,
    pub wall_time_ms: u64,
}

impl CampaignReport {
    pub(crate) fn assemble(
        mut records: Vec<Record>,
        skipped_by_check: BTreeMap<String, u64>,
        cfg: &CampaignConfig,
        wall_time_ms: u64,
    ) -> Self {
        records.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        let mut summary = Summary {
            skipped: skipped_by_check.values().sum(),
            ..Summary::default()
        };
        for r in &records {
            summary.add(r);
        }
        CampaignReport {
            records,
            summary,
            skipped_by_check,
            config: ConfigEcho::from(cfg),
            workers: cfg.workers,
            wall_time_ms,
        }
    }

    /// Record lines, then a summary line with the config echo, then a
    /// `run` line holding the schedule-dependent fields (workers, wall time).
    pub fn write_jsonl<W: Write>(&self, mut w: W) -> io::Result<()> {
        for r in &self.records {
            serde_json::to_writer(&mut w, r)?;
            w.write_all(b"\n")?;
        }
        let summary = serde_json::json!({ "summary": self.summary, "config": self.config });
        writeln!(w, "{summary}")?;
        let run = serde_json::json!({ "run": { "workers": self.workers, "wall_time_ms": self.wall_time_ms } });
        writeln!(w, "{run}")
    }

    /// Per-check counts plus a closing `ALL` row.
    pub fn write_csv_summary<W: Write>(&self, w: W) -> io::Result<()> {
        let mut per: BTreeMap<&str, Summary> = BTreeMap::new();
        for name in &self.config.checks {
            per.entry(name.as_str()).or_default();
        }
        for r in &self.records {
            per.entry(r.check.as_str()).or_default().add(r);
        }
        for (name, n) in &self.skipped_by_check {
            per.entry(name.as_str()).or_default().skipped = *n;
        }
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["check", "total", "passed", "failed", "errored", "skipped"])?;
        let rows = per
            .iter()
            .map(|(k, v)| (*k, v))
            .chain([("ALL", &self.summary)]);
        for (name, s) in rows {
            out.write_record([
                name.to_owned(),
                s.total.to_string(),
                s.passed.to_string(),
                s.failed.to_string(),
                s.errored.to_string(),
                s.skipped.to_string(),
            ])?;
        }
        out.flush()
    }

    pub fn write<W: Write>(&self, format: ReportFormat, w: W) -> io::Result<()> {
        match format {
            ReportFormat::Jsonlines => self.write_jsonl(w),
            ReportFormat::CsvSummary => self.write_csv_summary(w),
        }
    }
}
