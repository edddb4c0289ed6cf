use thiserror::Error;

use codim4_core::poly::ParseError;
use codim4_core::{FamilyError, GroebnerError, MatrixError, ResolutionError, SpinorError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}:{source}")]
    Parse { path: String, source: ParseError },
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Resolution(#[from] ResolutionError),
    #[error(transparent)]
    Spinor(#[from] SpinorError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

fn is_limit_groebner(e: &GroebnerError) -> bool {
    matches!(e, GroebnerError::ResourceLimit { .. })
}

impl CliError {
    /// 1 for a failed computation, 2 for bad input, 3 for an exhausted budget.
    pub fn exit_code(&self) -> i32 {
        let limit = match self {
            CliError::Parse { .. } | CliError::Usage(_) | CliError::Io { .. } => return 2,
            CliError::Groebner(e) => is_limit_groebner(e),
            CliError::Resolution(ResolutionError::Groebner(e)) => is_limit_groebner(e),
            CliError::Spinor(SpinorError::Groebner(e)) => is_limit_groebner(e),
            CliError::Family(FamilyError::Groebner(e)) => is_limit_groebner(e),
            CliError::Family(FamilyError::Resolution(ResolutionError::Groebner(e))) => is_limit_groebner(e),
            _ => false,
        };
        if limit {
            3
        } else {
            1
        }
    }
}
