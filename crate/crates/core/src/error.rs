use alloc::string::String;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("invalid element identifier `{0}`")]
    InvalidIdentifier(String),
    #[error("order relation has a cycle through `{0}` and `{1}`")]
    CycleDetected(String, String),
    #[error("poset has {0} elements, at most {max} are supported", max = crate::MAX_ELEMENTS)]
    TooManyElements(usize),
    #[error("a tuple needs at least one part")]
    EmptyTuple,
    #[error("elements `{0}` and `{1}` are incomparable, not a chain")]
    NotAChain(String, String),
    #[error("the empty chain is not allowed here")]
    EmptyChain,
    #[error("subset is not upward closed")]
    NotUpwardClosed,
    #[error("poset shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch {
        expected: &'static str,
        found: &'static str,
    },
    #[error("chain family does not arise from any tuple: {0}")]
    Inconsistent(&'static str),
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogEntry(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
}

impl Error {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DuplicateElement(_) => "DuplicateElement",
            Error::UnknownElement(_) => "UnknownElement",
            Error::InvalidIdentifier(_) => "InvalidIdentifier",
            Error::CycleDetected(..) => "CycleDetected",
            Error::TooManyElements(_) => "TooManyElements",
            Error::EmptyTuple => "EmptyTuple",
            Error::NotAChain(..) => "NotAChain",
            Error::EmptyChain => "EmptyChain",
            Error::NotUpwardClosed => "NotUpwardClosed",
            Error::ShapeMismatch { .. } => "ShapeMismatch",
            Error::Inconsistent(_) => "Inconsistent",
            Error::UnknownCatalogEntry(_) => "UnknownCatalogEntry",
            Error::BadParameter(_) => "BadParameter",
        }
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
