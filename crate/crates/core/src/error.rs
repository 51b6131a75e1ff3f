use thiserror::Error;

/// Errors produced by the motive calculator.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative twist index {0}: only effective motives are supported")]
    NegativeTwist(i64),

    #[error("invalid root system {letter}{rank}: {reason}")]
    InvalidRootSystem {
        letter: char,
        rank: usize,
        reason: String,
    },

    #[error("simple root index {index} out of range 1..={rank}")]
    InvalidSimpleRoot { index: usize, rank: usize },

    #[error("orbit of estimated size {estimated} exceeds the orbit cap of {cap} points")]
    OrbitCapExceeded { estimated: u128, cap: usize },

    #[error("invalid fibre `{spec}`: {reason}")]
    InvalidFibre { spec: String, reason: String },

    #[error("invalid base: {0}")]
    InvalidBase(String),

    #[error("{0}")]
    Unsupported(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown suite `{0}` (expected one of grassmann, duality, flags, kunneth, weyl-orders, tower)")]
    UnknownSuite(String),
}

impl Error {
    /// True for errors caused by a resource limit rather than bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::OrbitCapExceeded { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
