use thiserror::Error;

use crate::monomial::Monomial;

/// Everything that can go wrong inside the library.
///
/// Variants fall into three families which the command line maps onto exit
/// codes: malformed input ([`Error::Parse`]), violated domain preconditions
/// (most variants) and exhausted a-priori scan bounds
/// ([`Error::BoundExceeded`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient mismatch: {left} vs {right} variables")]
    AmbientMismatch { left: usize, right: usize },

    #[error("variable x{} is out of range for {ambient} variables", .index + 1)]
    VariableOutOfRange { index: usize, ambient: usize },

    #[error("a polynomial ring needs at least one variable")]
    EmptyAmbient,

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("{divisor} does not divide {dividend}")]
    NotDivisible { divisor: Monomial, dividend: Monomial },

    #[error("the unit monomial is not allowed here")]
    UnitMonomial,

    #[error("the zero ideal is not allowed here")]
    ZeroIdeal,

    #[error("the unit ideal is not allowed here")]
    UnitIdeal,

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("truncation degree {degree} is below the generator degree {generator_degree}")]
    TruncationBelowDegree { degree: u64, generator_degree: u64 },

    #[error("the ideal is not artinian")]
    NotArtinian,

    #[error("the ideal is not of Borel type")]
    NotBorelType,

    #[error("J is not contained in its saturation candidate")]
    NotContained,

    #[error("the quotient does not have finite length")]
    InfiniteLength,

    #[error("invalid d-sequence: {0}")]
    InvalidDSequence(String),

    #[error("invalid variable-power data: {0}")]
    InvalidPowers(String),

    #[error("every step of the sequential chain has J^sat = J")]
    DegenerateChain,

    #[error("{what}: scan bound {bound} exceeded")]
    BoundExceeded { what: &'static str, bound: u64 },

    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    /// Short machine-readable tag used in JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse",
            Error::BoundExceeded { .. } => "bound-exceeded",
            _ => "domain",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
