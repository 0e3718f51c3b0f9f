use thiserror::Error;

/// Errors raised by the sequence, Takagi and sweep routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {0} exceeds the supported maximum 2^60")]
    IndexTooLarge(u128),
    #[error("index {0} is negative")]
    NegativeIndex(i128),
    #[error("index must be positive")]
    ZeroIndex,
    #[error("membership requires 1 <= m <= n, got m = {m}, n = {n}")]
    MembershipRange { m: u64, n: u64 },
    #[error("argument {0} lies outside [0, 1]")]
    OutsideUnitInterval(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parameter {name} = {value} exceeds its bound {max}")]
    ParameterBound {
        name: &'static str,
        value: u64,
        max: u64,
    },
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
