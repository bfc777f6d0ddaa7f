use thiserror::Error;

/// Errors raised by coefficient arithmetic, the free Baxter algebra and the
/// verifiers built on top of them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{what} = {value} is outside the supported range {range}")]
    OutOfRange {
        what: &'static str,
        value: u64,
        range: &'static str,
    },

    #[error("composition has norm {actual}, expected {expected}")]
    NormMismatch { expected: u64, actual: u64 },

    #[error("operation needs the polynomial base algebra C[x]")]
    UnsupportedBase,

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_range(
    what: &'static str,
    value: u64,
    lo: u64,
    hi: u64,
    range: &'static str,
) -> Result<()> {
    if value < lo || value > hi {
        return Err(Error::OutOfRange { what, value, range });
    }
    Ok(())
}
