use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(String),

    #[error("denominator {denominator} is divisible by {p}")]
    DenominatorNotInvertible { denominator: String, p: u64 },

    #[error("recurrence step for {sequence}_{index} left a nonzero remainder")]
    NonIntegralRecurrenceStep {
        sequence: &'static str,
        index: usize,
    },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("division by zero: {0}")]
    DivisionByZero(String),

    #[error("invalid campaign configuration: {0}")]
    ConfigInvalid(String),

    #[error("cannot write {}", path.display())]
    OutputUnwritable {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::PreconditionViolated(msg.into())
    }
}
