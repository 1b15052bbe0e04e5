use thiserror::Error;
use triangle_torus::{MeasureError, TriangleError};

use crate::path::PathError;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags or unparseable input; exit status 1.
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Triangle(#[from] TriangleError),
    #[error(transparent)]
    Measure(#[from] MeasureError),
    #[error(transparent)]
    Path(#[from] PathError),
    /// Float input that is not a triangle on either sheet.
    #[error("{0}")]
    Domain(String),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            _ => 2,
        }
    }
}
