use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: Vertex, v: Vertex, n: usize },
    #[error("{0} vertices exceed the supported vertex id range")]
    TooManyVertices(usize),
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("input ended at line {line}: {message}")]
    Truncated { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Bad parameters handed to a generator, estimator, or algorithm.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("{0}")]
pub struct InputError(pub String);

impl InputError {
    pub fn new(msg: impl Into<String>) -> Self {
        InputError(msg.into())
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LpError {
    #[error("linear program is infeasible")]
    Infeasible,
    #[error("LP engine `{engine}` failed: {message}")]
    Solver { engine: String, message: String },
    #[error("solution violates constraint of vertex {vertex}: activity {activity}")]
    Infeasibility { vertex: Vertex, activity: f64 },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Lp(#[from] LpError),
    #[error("exact search refused: {n} vertices exceed the cap of {cap}")]
    OracleRefused { n: usize, cap: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
