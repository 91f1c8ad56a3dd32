use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex count {0} exceeds the supported maximum of 512")]
    TooManyVertices(usize),
    #[error("edge endpoint {endpoint} out of range for a graph on {n} vertices")]
    EndpointOutOfRange { endpoint: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("2-density is undefined for graphs with fewer than 3 vertices (got {0})")]
    UndefinedDensity(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("search infeasible: {0}")]
    Infeasible(String),
    #[error("invalid construction: {0}")]
    Construction(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
