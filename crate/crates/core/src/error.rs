use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("capacity exceeded: {what} has size {size}, cap is {cap}")]
    Capacity {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    /// A ring table violates an axiom; `witness` holds the offending elements.
    #[error("ring axiom violated: {axiom} (witness {witness:?})")]
    Axiom {
        axiom: &'static str,
        witness: Vec<usize>,
    },

    #[error("not a multiplicatively closed set: {0}")]
    InvalidMultSet(String),

    /// A computation contradicted one of the theorems the library relies on.
    #[error("theorem counterexample [{tag}]: {detail}")]
    Counterexample { tag: &'static str, detail: String },

    #[error("malformed input: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
