use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("relation contains a cycle through label {label}")]
    Cycle { label: usize },

    #[error("label {label} is outside the ground set [1, {p}]")]
    Label { label: usize, p: usize },

    #[error("poset size must be positive")]
    EmptyGroundSet,

    #[error("invalid permutation: {0}")]
    Permutation(String),

    #[error("poset has {count} linear extensions, enumeration budget is {budget}")]
    BudgetExceeded { count: String, budget: u64 },

    #[error("polynomial is not squarefree")]
    NotSquarefree,

    #[error("polynomial must be non-zero")]
    ZeroPolynomial,

    #[error("polynomial must be non-constant")]
    ConstantPolynomial,

    #[error("interval endpoint {0} is a root")]
    EndpointRoot(String),

    #[error("empty interval ({lo}, {hi}]")]
    EmptyInterval { lo: String, hi: String },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
