use alloc::string::String;

use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("variable x{0} occurs more than once in a multilinear expression")]
    Multilinearity(u32),

    #[error("monomials have different variable sets")]
    VarsetMismatch,

    #[error("operator index x{0} collides with another variable of the word")]
    IndexCollision(u32),

    #[error("linearization: {0}")]
    Linearization(String),

    #[error("wrong number of variables for {what}: expected {expected}, got {got}")]
    Arity { what: &'static str, expected: usize, got: usize },

    #[error("variable x{var} expects a {expected} element")]
    ParityMismatch { var: u32, expected: &'static str },

    #[error("element substituted for x{0} is not homogeneous")]
    NonHomogeneous(u32),

    #[error("variable x{0} has no assigned value")]
    Unassigned(u32),

    #[error("no parity given for variable x{0}")]
    MissingParity(u32),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),

    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("action table conflict on ({left}, {right}): {msg}")]
    Conflict { left: String, right: String, msg: String },
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
