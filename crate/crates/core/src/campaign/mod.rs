//! Verification campaigns over prime and parameter grids, report output and
//! sequence dumps.

mod config;
mod registry;
mod report;
mod sequences_out;

use std::collections::BTreeMap;
use std::fs::File;
use std::io::BufWriter;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;

pub use config::{odd_primes_up_to, CampaignConfig, ConfigFile, ReportFormat};
pub use registry::{Case, CellResult, Check};
pub use report::{CampaignReport, ConfigEcho, ParamValue, Record, Summary};
pub use sequences_out::{emit_sequences, write_sequences, SeqFormat};

use crate::error::{Error, Result};
use crate::sequences::{prefill, SequenceId};

/// Run every selected check over its grid, then write the report to
/// `config.out` when set.
pub fn run_campaign(config: &CampaignConfig) -> Result<CampaignReport> {
    config.validate()?;
    let start = Instant::now();

    let mut checks: Vec<Check> = config
        .checks
        .iter()
        .filter_map(|n| Check::from_name(n))
        .collect();
    checks.sort();
    checks.dedup();

    let (mut s_max, mut f_max) = (0, 0);
    for &check in &checks {
        for &p in &config.primes {
            let (s, f) = check.max_indices(p, config);
            s_max = s_max.max(s);
            f_max = f_max.max(f);
        }
    }
    prefill(SequenceId::S, s_max)?;
    prefill(SequenceId::P, s_max)?;
    prefill(SequenceId::F, f_max)?;

    let cases: Vec<Case> = checks.iter().flat_map(|c| c.cases(config)).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::ConfigInvalid(format!("cannot start worker pool: {e}")))?;
    let results: Vec<Result<CellResult>> =
        pool.install(|| cases.par_iter().map(|c| c.check.evaluate(c)).collect());

    let mut records = Vec::new();
    let mut skipped: BTreeMap<String, u64> = BTreeMap::new();
    for (case, result) in cases.iter().zip(results) {
        match result {
            Ok(CellResult::Records(rs)) => records.extend(rs),
            Ok(CellResult::Skipped) => {
                *skipped.entry(case.check.name().to_owned()).or_default() += 1
            }
            Err(e) => records.push(Record::errored(case, e.to_string())),
        }
    }
    let elapsed = u64::try_from(start.elapsed().as_millis()).unwrap_or(u64::MAX);
    let report = CampaignReport::assemble(records, skipped, config, elapsed);

    if let Some(path) = &config.out {
        write_report(&report, config.format, path)?;
    }
    Ok(report)
}

pub fn write_report(report: &CampaignReport, format: ReportFormat, path: &Path) -> Result<()> {
    let unwritable = |source| Error::OutputUnwritable {
        path: path.to_owned(),
        source,
    };
    let file = File::create(path).map_err(unwritable)?;
    report
        .write(format, BufWriter::new(file))
        .map_err(unwritable)
}
