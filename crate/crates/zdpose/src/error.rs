use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("poset has no elements")]
    NoElements,
    #[error("too many elements: {n} (this build supports up to {max})")]
    TooManyElements { n: usize, max: usize },
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("invalid label `{0}`: labels must be non-empty and free of whitespace, `<` and `#`")]
    InvalidLabel(String),
    #[error("unknown label `{0}` in relation")]
    UnknownLabel(String),
    #[error("relation has a cycle: `{0}` and `{1}` are mutually comparable")]
    Cycle(String, String),
    #[error("poset has no least element")]
    NoLeastElement,
    #[error("subset is empty")]
    EmptySubset,
    #[error("oracle cap exceeded: {n} elements with cap {cap} (set ZDPOSE_ORACLE_CAP to raise)")]
    OracleCapExceeded { n: usize, cap: usize },
    #[error("poset has no zero-divisors")]
    NoZeroDivisors,
    #[error("graph has fewer than two vertices")]
    TooFewVertices,
    #[error("poset must have at least two elements")]
    TrivialPoset,
    #[error("element `{0}` is not a zero-divisor")]
    NotAZeroDivisor(String),
    #[error("unknown example `{0}`")]
    UnknownExample(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("size cap exceeded: {n} (maximum {max})")]
    CapExceeded { n: usize, max: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
