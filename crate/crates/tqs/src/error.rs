//! Error type shared by the whole crate.

/// Errors reported by the exact-arithmetic kernel and the group engine.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u32, u32),
    #[error("conductor {0} does not divide {1}")]
    NotADivisor(u32, u32),
    #[error("conductor {0} exceeds the cap {1}")]
    ConductorTooLarge(u32, u32),
    #[error("{0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("invalid continued-fraction term {0}: every term must be >= 2")]
    InvalidTerm(u64),
    #[error("({0},{1}) is not a critical pair")]
    NotCritical(u64, u64),
    #[error("weights are not faithful: gcd(order, e1, e2) > 1")]
    NotFaithful,
    #[error("characteristic {0} divides the group order {1}")]
    NotTame(u64, u64),
    #[error("group closure exceeded the maximum order {0}")]
    GroupTooLarge(u64),
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("group is not generated by pseudoreflections")]
    NotReflectionGroup,
    #[error("inconsistent invariant expansion: {0}")]
    InconsistentExpansion(String),
    #[error("Shephard-Todd group ST_{0} has no two-dimensional construction here")]
    UnsupportedId(u32),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
