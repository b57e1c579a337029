use thiserror::Error;

/// Errors surfaced by the solver core.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument fell outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The DE mesh-size formula log(2dN/alpha)/N requires 2dN/alpha > 1.
    #[error("DE mesh size undefined: 2dN/alpha = {ratio} must exceed 1")]
    MeshSize { ratio: f64 },

    /// The inverse transform is only defined strictly inside (a, b).
    #[error("inverse transform needs a < t < b, got t = {t} for ({a}, {b})")]
    OutsideInterval { t: f64, a: f64, b: f64 },

    /// Assembly produced a non-finite matrix or right-hand-side entry.
    #[error("non-finite entry at ({row}, {col}) during assembly")]
    NonFinite { row: usize, col: usize },

    /// Elimination hit a pivot too small to divide by.
    #[error("singular matrix: pivot {pivot:e} at column {col}{context}")]
    Singular {
        col: usize,
        pivot: f64,
        context: String,
    },
}

impl Error {
    /// Attach method/N context to a singular-matrix error.
    pub(crate) fn with_context(self, context: String) -> Self {
        match self {
            Error::Singular { col, pivot, .. } => Error::Singular {
                col,
                pivot,
                context,
            },
            other => other,
        }
    }
}
