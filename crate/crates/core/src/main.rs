use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use clf_core::campaign::{
    emit_sequences, odd_primes_up_to, run_campaign, write_sequences, CampaignConfig, ConfigFile,
    ReportFormat, SeqFormat,
};
use clf_core::sequences::SequenceId;
use clf_core::theorem_checks::scan_1_14;

/// Exact verification of congruences for the Catalan–Larcombe–French and Franel numbers.
#[derive(Parser)]
#[command(name = "clf", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dump terms 0..=N of P, S or F.
    Seq {
        id: SequenceId,
        #[arg(long = "max")]
        max: usize,
        #[arg(long, default_value = "csv")]
        format: SeqFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification campaign; exit 1 if any record fails.
    Verify(VerifyArgs),
    /// Valuations of S and f at (p^r - 1)/2 for r = 1..=R.
    #[command(name = "scan-1-14")]
    Scan {
        #[arg(long, value_delimiter = ',', required = true)]
        primes: Vec<u64>,
        #[arg(long)]
        r_max: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// TOML (or .json) file with the same fields as the flags.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long = "check", value_delimiter = ',')]
    checks: Option<Vec<String>>,
    #[arg(long, value_delimiter = ',', conflicts_with = "prime_max")]
    primes: Option<Vec<u64>>,
    #[arg(long)]
    prime_max: Option<u64>,
    #[arg(long)]
    m_max: Option<u64>,
    #[arg(long)]
    r_max: Option<u32>,
    #[arg(long)]
    n_max: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    format: Option<ReportFormat>,
    #[arg(long)]
    workers: Option<usize>,
}

impl VerifyArgs {
    fn into_config(self) -> Result<CampaignConfig> {
        let mut cfg = CampaignConfig::default();
        if let Some(path) = &self.config {
            cfg.apply(ConfigFile::load(path)?)?;
        }
        if let Some(v) = self.checks {
            cfg.checks = v;
        }
        if let Some(v) = self.primes {
            cfg.primes = v;
        }
        if let Some(max) = self.prime_max {
            cfg.primes = odd_primes_up_to(max);
        }
        cfg.m_max = self.m_max.unwrap_or(cfg.m_max);
        cfg.r_max = self.r_max.unwrap_or(cfg.r_max);
        cfg.n_max = self.n_max.unwrap_or(cfg.n_max);
        cfg.format = self.format.unwrap_or(cfg.format);
        cfg.workers = self.workers.unwrap_or(cfg.workers);
        if self.out.is_some() {
            cfg.out = self.out;
        }
        Ok(cfg)
    }
}

fn sink(out: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("cannot write {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Seq {
            id,
            max,
            format,
            out,
        } => {
            match out {
                Some(path) => emit_sequences(id, max, format, &path)?,
                None => write_sequences(id, max, format, io::stdout().lock())?,
            }
            Ok(true)
        }
        Command::Verify(args) => {
            let cfg = args.into_config()?;
            let report = run_campaign(&cfg)?;
            if cfg.out.is_none() {
                report
                    .write(cfg.format, sink(None)?)
                    .context("cannot write report")?;
            }
            let s = report.summary;
            eprintln!(
                "total={} passed={} failed={} errored={} skipped={} ({} ms)",
                s.total, s.passed, s.failed, s.errored, s.skipped, report.wall_time_ms
            );
            Ok(s.all_passed())
        }
        Command::Scan { primes, r_max, out } => {
            let mut w = sink(out.as_deref())?;
            for p in primes {
                for row in scan_1_14(p, r_max)? {
                    serde_json::to_writer(&mut w, &row)?;
                    writeln!(w)?;
                }
            }
            w.flush()?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
