use thiserror::Error;

/// Parameter outside the range where a closed-form expression is defined.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{formula}: {parameter} outside valid range ({valid})")]
pub struct FormulaDomainError {
    pub formula: &'static str,
    pub parameter: String,
    pub valid: String,
}

impl FormulaDomainError {
    pub(crate) fn new(formula: &'static str, parameter: impl Into<String>, valid: impl Into<String>) -> Self {
        Self {
            formula,
            parameter: parameter.into(),
            valid: valid.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge ({u},{v}) has an endpoint >= {order}")]
    EndpointOutOfRange { u: usize, v: usize, order: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("({0},{1}) is not an edge")]
    NotAnEdge(usize, usize),
    #[error("order {order} above supported limit {limit}")]
    OrderAboveLimit { order: usize, limit: usize },
    #[error("order {order} below minimum {min}")]
    OrderBelowMinimum { order: usize, min: usize },
    #[error("invalid family parameters: {0}")]
    Family(String),
    #[error("malformed edge list, line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Domain(#[from] FormulaDomainError),
}

impl Error {
    /// True for errors caused by enumeration or certificate size limits.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::OrderAboveLimit { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
