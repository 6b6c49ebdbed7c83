use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `c(total) / c(sub)` has a non-integral coefficient.
    #[error("Whitney quotient is not integral: {0}")]
    NonIntegerQuotient(String),

    #[error("result is not integral Chern data: {0}")]
    NonIntegerResult(String),

    #[error("sub-bundle rank {sub} exceeds total rank {total}")]
    RankMismatch { sub: u32, total: u32 },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("unsupported bundle or pair: {0}")]
    UnsupportedPair(String),

    #[error("first Chern class {0} is outside the classified range")]
    InvalidC1(i64),

    #[error("outside the decomposable catalogue: {0}")]
    OutOfCatalogue(String),
}

pub type Result<T> = std::result::Result<T, Error>;
