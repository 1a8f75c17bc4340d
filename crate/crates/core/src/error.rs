use thiserror::Error;

/// Errors raised by the arithmetic, Bernoulli and denominator layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An index reached past the sealed Bernoulli cache.
    #[error("index {requested} exceeds Bernoulli cache capacity {capacity}")]
    CapacityExceeded { requested: usize, capacity: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    /// Arguments outside the domain an operation is stated for.
    #[error("domain error: {0}")]
    Domain(String),

    /// A proven identity failed to hold. Never expected to fire; carries the witness.
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
