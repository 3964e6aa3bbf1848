use mhahn_core::{Error, Violation};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("genericity error: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Genericity(Vec<Violation>),
    #[error("{0}")]
    Core(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Genericity(v) => CliError::Genericity(v),
            e => CliError::Core(e),
        }
    }
}

impl CliError {
    /// Every error is a configuration or genericity problem as far as the exit
    /// status is concerned; identity failures are not errors.
    pub fn exit_code(&self) -> i32 {
        2
    }
}
