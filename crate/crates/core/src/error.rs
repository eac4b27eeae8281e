use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not Hermitian: max |H - H^dagger| = {defect:.3e}")]
    NotHermitian { defect: f64 },

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {residual:.3e})")]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("function undefined at eigenvalue {eigenvalue:.17e}")]
    UndefinedAtEigenvalue { eigenvalue: f64 },

    #[error("invalid density matrix: {defect} (magnitude {magnitude:.3e})")]
    InvalidState { defect: StateDefect, magnitude: f64 },

    #[error("operator is not positive semidefinite: min eigenvalue {min_eigenvalue:.3e}")]
    NotPositive { min_eigenvalue: f64 },

    #[error("zero vector cannot be normalized into a pure state")]
    ZeroVector,

    #[error("skewing parameter must lie in the open interval (0, 1), got {0}")]
    SkewOutOfRange(f64),

    #[error("argument {value} outside [0, 1]")]
    OutOfUnitInterval { value: f64 },

    #[error("operator {name} has zero trace")]
    ZeroTrace { name: &'static str },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("truncation tail mass {tail:.3e} exceeds {limit:.1e}; increase the Fock cutoff (currently {cutoff})")]
    CutoffTooSmall { tail: f64, limit: f64, cutoff: usize },

    #[error("quantifier {0} does not admit this bound")]
    UnsupportedBound(&'static str),

    #[error("configuration error in field `{field}`: {message}")]
    Config { field: String, message: String },

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("serialization error: {0}")]
    Serialization(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateDefect {
    Hermiticity,
    Trace,
    Positivity,
}

impl std::fmt::Display for StateDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            StateDefect::Hermiticity => "Hermiticity violated",
            StateDefect::Trace => "trace differs from one",
            StateDefect::Positivity => "negative eigenvalue",
        };
        f.write_str(s)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
