use num_complex::Complex64;
use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("expected a square matrix, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix must have order >= 1")]
    EmptyMatrix,

    #[error("degree error: {0}")]
    Degree(String),

    #[error(
        "leading coefficient is numerically singular \
         (sigma_min = {sigma_min:.3e} <= {threshold:.3e}); \
         eigenvalues at infinity are out of scope, consider the reverse polynomial"
    )]
    SingularLeading { sigma_min: f64, threshold: f64 },

    #[error(
        "QR iteration exceeded its budget of {budget} sweeps \
         ({deflated} of {total} eigenvalues deflated)",
        deflated = partial.len()
    )]
    SolverFailure {
        budget: usize,
        total: usize,
        /// Eigenvalues deflated before the budget ran out.
        partial: Vec<Complex64>,
    },

    #[error("{family} family violation: {reason}")]
    FamilyViolation {
        family: &'static str,
        reason: String,
    },

    #[error("theorem check failed: {0}")]
    TheoremViolation(String),

    #[error("parameter out of range: {0}")]
    Domain(String),

    #[error("invalid polynomial document: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
