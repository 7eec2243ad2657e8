use std::io;
use std::path::PathBuf;

use bichroma_core::enumeration::EnumError;
use bichroma_core::families::FamilyError;
use bichroma_core::{EngineError, InvarianceError, RootError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Precondition(String),
    #[error("{0}")]
    Disagreement(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Precondition(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Disagreement(_) => 3,
        }
    }

    pub fn io(path: impl Into<PathBuf>) -> impl FnOnce(io::Error) -> CliError {
        let path = path.into();
        move |source| CliError::Io { path, source }
    }
}

macro_rules! precondition {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Precondition(e.to_string())
            }
        }
    )*};
}

precondition!(
    EnumError,
    FamilyError,
    EngineError,
    InvarianceError,
    RootError
);
