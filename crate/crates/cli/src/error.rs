use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const VIOLATION: u8 = 1;
    pub const INPUT: u8 = 2;
    pub const HYPOTHESIS: u8 = 3;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("coefficient error at offset {pos}: {msg}")]
    CoeffDomain { pos: usize, msg: String },
    #[error("{0}")]
    Core(#[from] rsumset::Error),
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        CliError::Parse { pos, msg: msg.into() }
    }

    /// Moves a position reported for a substring to the enclosing string.
    pub fn shifted(self, by: usize) -> Self {
        match self {
            CliError::Parse { pos, msg } => CliError::Parse { pos: pos + by, msg },
            CliError::CoeffDomain { pos, msg } => CliError::CoeffDomain { pos: pos + by, msg },
            other => other,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(rsumset::Error::HypothesisNotMet { .. }) => exit::HYPOTHESIS,
            _ => exit::INPUT,
        }
    }
}
