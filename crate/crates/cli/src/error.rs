use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("unknown suite '{0}'; expected one of: {list}", list = crate::suites::SUITES.join(", "))]
    UnknownSuite(String),

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] kpeterson::Error),

    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    /// 2 for anything the caller got wrong, 1 is reserved for failed verification.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => 1,
            _ => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
