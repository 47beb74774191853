use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("size cap exceeded: {what} is {size}, cap is {cap}")]
    SizeCap {
        what: &'static str,
        size: u128,
        cap: u128,
    },

    #[error("vertex {vertex} is isolated, {map} needs an inverse degree")]
    Singular { vertex: usize, map: String },

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("identifying labels would create a loop at vertex {0}")]
    LoopCreated(usize),

    #[error("contract violated: {0}")]
    Contract(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Rejects `size > cap` with a [`Error::SizeCap`].
pub(crate) fn check_cap(what: &'static str, size: u128, cap: u128) -> Result<()> {
    if size > cap {
        Err(Error::SizeCap { what, size, cap })
    } else {
        Ok(())
    }
}
