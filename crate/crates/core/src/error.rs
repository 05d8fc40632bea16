//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A symmetric matrix could not be Cholesky-factored even after the
    /// jitter escalation policy was exhausted. Usually signals an invalid
    /// kernel or wildly out-of-range parameters.
    #[error("matrix not factorizable after {retries} jitter retries (last jitter {last_jitter:e})")]
    NotFactorizable { retries: usize, last_jitter: f64 },

    #[error("dimension mismatch: {context} (expected {expected}, got {got})")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("too few units: need at least {needed}, got {got}")]
    TooFewUnits { needed: usize, got: usize },

    /// The optimizer produced a non-finite objective or gradient, which
    /// signals a bad learning rate or degenerate data.
    #[error("non-finite objective at epoch {epoch}")]
    NonFiniteObjective { epoch: usize },

    /// Symmetrized-KL divergence is undefined at zero variance.
    #[error("zero or negative variance in dimension {dim} (KL divergence undefined)")]
    ZeroVariance { dim: usize },

    #[error("degenerate targets: zero sample variance")]
    DegenerateTargets,

    #[error("degenerate dose weights: all population weights underflowed at t = {t}")]
    DegenerateWeights { t: f64 },

    #[error("missing tagged column: {0}")]
    MissingTaggedColumn(String),

    #[error("misordered interval at index {index}: lower {lo} > upper {hi}")]
    MisorderedInterval { index: usize, lo: f64, hi: f64 },

    #[error("negative value {0} where a nonnegative one is required")]
    NegativeValue(f64),

    #[error("singular design matrix in least-squares stage")]
    SingularDesign,

    #[error("missing column `{0}`")]
    MissingColumn(String),

    #[error("non-numeric cell at row {row}, column `{column}`: {value:?}")]
    NonNumericCell {
        row: usize,
        column: String,
        value: String,
    },

    #[error("empty input file")]
    EmptyFile,

    #[error("internal consistency violation: {0}")]
    Inconsistency(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
