use std::io;
use std::path::PathBuf;

use thiserror::Error;
use zham_core::verifier::{StoreError, VerifyError};
use zham_core::{GraphError, ParseError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Invalid(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("search budget exhausted after {0} nodes")]
    BudgetExhausted(u64),
    #[error("counterexample to established claim(s): {0}")]
    EstablishedFailure(String),
    #[error(transparent)]
    Store(#[from] StoreError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Parse(ParseError::Syntax { .. }) => 2,
            CliError::Parse(ParseError::Invalid { .. }) | CliError::Invalid(_) => 3,
            CliError::Io { .. } => 1,
            CliError::BudgetExhausted(_) => 4,
            CliError::EstablishedFailure(_) => 5,
            CliError::Store(_) => 6,
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Store(e) => CliError::Store(e),
            VerifyError::Parse(e) => CliError::Parse(e),
            other => CliError::Usage(other.to_string()),
        }
    }
}
