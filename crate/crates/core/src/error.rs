use thiserror::Error;

/// Errors reported by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("at least two generators are required, got {0}")]
    TooFewGenerators(usize),

    #[error("generator {0} is smaller than 2")]
    GeneratorTooSmall(u64),

    #[error("generator {0} appears more than once")]
    DuplicateGenerator(u64),

    #[error("generators have gcd {0}, expected 1")]
    GcdNotOne(u64),

    #[error("horizon {requested} exceeds the configured cap of {cap} entries")]
    HorizonCapExceeded { requested: usize, cap: usize },

    #[error("power exponent {mu} exceeds the configured cap {cap}")]
    PowerCapExceeded { mu: u32, cap: u32 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Two independent computations of the same quantity disagreed.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
