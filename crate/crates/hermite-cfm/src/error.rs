use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("singular matrix: exact zero pivot at index {index}")]
    SingularMatrix { index: usize },

    #[error("eigenvalue iteration did not converge; unreduced block of size {block} remains")]
    EigenNoConvergence { block: usize },

    #[error("quadrature point count {n} outside supported range 1..=32")]
    QuadratureOrder { n: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("jet order insufficient: need {needed}, have {have}")]
    JetOrder { needed: usize, have: usize },

    #[error("reciprocal of a jet with zero constant term")]
    JetRecipAtZero,

    #[error("mesh error: {0}")]
    Mesh(String),

    #[error("missing stored polynomial for {what} {index}")]
    MissingStoredPoly { what: &'static str, index: usize },

    #[error("instability detected at step {step}: {what}")]
    Instability { step: usize, what: String },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("study error: {0}")]
    Study(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
