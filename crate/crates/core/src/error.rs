use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    /// An argument outside the operation's domain (zero divisor query, empty word, ...).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("enumeration of {requested} raw states exceeds the budget of {ceiling}")]
    BudgetExceeded { requested: u128, ceiling: u128 },

    #[error("instance with {outer} outer and {inner} inner endpoints exceeds the enumeration limit of {max_outer}/{max_inner}")]
    EndpointLimit { outer: u64, inner: u64, max_outer: u64, max_inner: u64 },

    #[error("cannot parse matching code {code:?}: {reason}")]
    Parse { code: String, reason: String },

    #[error("matching is not in the required class: {0}")]
    WrongClass(String),

    #[error("malformed graph: {0}")]
    MalformedGraph(String),

    #[error("reference data: {0}")]
    Reference(String),
}
