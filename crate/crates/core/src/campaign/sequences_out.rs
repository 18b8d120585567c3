use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::sequences::{cache, SequenceId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SeqFormat {
    /// `n,value` rows, no header.
    #[default]
    Csv,
    /// `{"n":"..","value":".."}` lines.
    Jsonlines,
}

impl FromStr for SeqFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "csv" => Ok(SeqFormat::Csv),
            "jsonl" | "jsonlines" => Ok(SeqFormat::Jsonlines),
            other => Err(format!(
                "unknown sequence format {other:?}; expected csv or jsonl"
            )),
        }
    }
}

impl fmt::Display for SeqFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeqFormat::Csv => "csv",
            SeqFormat::Jsonlines => "jsonlines",
        })
    }
}

/// Terms `0..=n_max` of `id`, one per line.
pub fn write_sequences<W: Write>(
    id: SequenceId,
    n_max: usize,
    format: SeqFormat,
    mut w: W,
) -> Result<()> {
    let values = cache(id).prefix(n_max)?;
    write_rows(&values, format, &mut w).map_err(|source| Error::OutputUnwritable {
        path: PathBuf::from("<stream>"),
        source,
    })
}

fn write_rows<W: Write>(values: &[BigInt], format: SeqFormat, w: &mut W) -> io::Result<()> {
    for (n, v) in values.iter().enumerate() {
        match format {
            SeqFormat::Csv => writeln!(w, "{n},{v}")?,
            SeqFormat::Jsonlines => {
                let line = serde_json::json!({ "n": n.to_string(), "value": v.to_string() });
                writeln!(w, "{line}")?
            }
        }
    }
    w.flush()
}

pub fn emit_sequences(id: SequenceId, n_max: usize, format: SeqFormat, path: &Path) -> Result<()> {
    let values = cache(id).prefix(n_max)?;
    let unwritable = |source| Error::OutputUnwritable {
        path: path.to_owned(),
        source,
    };
    let file = File::create(path).map_err(unwritable)?;
    write_rows(&values, format, &mut BufWriter::new(file)).map_err(unwritable)
}
