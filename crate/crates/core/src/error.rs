use thiserror::Error;

/// Errors surfaced by the engine. The CLI maps these onto exit codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported Cartan type `{0}`; supported: A1, A2, A3, A4, B2, B3, C3, D4, G2")]
    UnsupportedType(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("limit diverges: {0}")]
    Divergent(String),

    #[error("limit not Laurent: {0}")]
    NotLaurent(String),

    #[error("convention error: {0}")]
    Convention(String),

    #[error("degenerate spectrum: {0}")]
    Degenerate(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
