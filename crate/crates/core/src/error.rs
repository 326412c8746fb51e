use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid spec: {0}")]
    Spec(String),
    #[error("invalid label: {0}")]
    Label(String),
    #[error("invalid index set: {0}")]
    IndexSet(String),
    #[error("invalid special class: {0}")]
    Special(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("degree condition violated: {0}")]
    Degree(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// An internal consistency check failed; this indicates a bug or a gap in the rules.
    #[error("finding: {0}")]
    Finding(String),
}

pub type Result<T> = core::result::Result<T, Error>;
