use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A censoring scheme violated its invariants.
    #[error("invalid censoring scheme: {0}")]
    InvalidScheme(String),
    /// A parameter or argument was outside its domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// The Fisher information matrix was numerically singular, which signals
    /// a degenerate scheme/parameter combination.
    #[error("Fisher information matrix is numerically singular")]
    SingularInformation,
    /// An exhaustive search was requested on a space larger than the budget.
    #[error("search space holds {schemes} schemes, exceeding the exhaustive budget of {budget}")]
    InstanceTooLarge { schemes: u128, budget: u128 },
    /// An optimizer could not produce any evaluable candidate.
    #[error("optimization failed: {0}")]
    OptimizationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
