use thiserror::Error;

/// Errors raised by the sequence and array constructions.
///
/// Every computation is carried out in checked 64-bit arithmetic, so an
/// out-of-range request surfaces as [`Error::Overflow`] instead of a wrapped
/// value.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("overflow while evaluating cell (n = {n}, k = {k})")]
    CellOverflow { n: u64, k: u64 },

    #[error("argument out of domain: {0}")]
    Domain(&'static str),

    #[error("invalid Zeckendorf word {word:?}: {reason}")]
    InvalidWord { word: String, reason: &'static str },

    #[error("{0} is not a fibbinary number")]
    NotFibbinary(u64),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
