use thiserror::Error;

/// Errors raised by the word, dip and code operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An order failed `u < v => u < uv`; the pair is rendered as letter indices.
    #[error("order `{order}` violates the Lazard law: u={u:?}, v={v:?}")]
    LazardLaw {
        order: String,
        u: Vec<u8>,
        v: Vec<u8>,
    },

    #[error("arithmetic overflow computing {0}")]
    Overflow(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
