use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<u32>),

    #[error("monomial {monomial} is not a term of a U_(n,d) with n = {n}: y0 exponent {found}, expected {expected}")]
    InconsistentMonomial {
        monomial: String,
        n: u32,
        found: u32,
        expected: u32,
    },

    #[error("unknown {kind} '{name}' (available: {available})")]
    UnknownStrategy {
        kind: &'static str,
        name: String,
        available: String,
    },

    #[error("method '{method}' does not support d = {d}")]
    UnsupportedMethod { method: String, d: u32 },

    #[error("refusing to enumerate {requested} {what}: cap is {cap}")]
    CapExceeded {
        what: &'static str,
        requested: BigUint,
        cap: BigUint,
    },

    #[error("rational evaluation of {formula} produced the non-integer {value}")]
    NonIntegral {
        formula: &'static str,
        value: String,
    },

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
