use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("singular matrix")]
    Singular,
    #[error("entry degree {degree} exceeds limit {limit}")]
    DegreeOverflow { degree: usize, limit: usize },
    #[error("not a member of {0}")]
    NotMember(String),
    #[error("element is not in the image of psi")]
    NotInImage,
    #[error("entry is not a polynomial in rt")]
    NonPolynomial,
    #[error("descent failed: {0}")]
    Descent(String),
    #[error("suite {0} requires a field of characteristic 0")]
    Char0Gate(String),
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
