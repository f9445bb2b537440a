use std::fmt;

use thiserror::Error;

use crate::expr::Pos;

/// A problem in user input, located by line and column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl Diagnostic {
    pub fn at(pos: Pos, message: impl Into<String>) -> Self {
        Diagnostic {
            line: pos.line,
            column: pos.column,
            message: message.into(),
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for Diagnostic {}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}:{diagnostic}")]
    Parse {
        path: String,
        diagnostic: Diagnostic,
    },
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Engine(#[from] rankrev::Error),
}

impl CliError {
    pub fn parse(path: &str, diagnostic: Diagnostic) -> Self {
        CliError::Parse {
            path: path.to_string(),
            diagnostic,
        }
    }
}
