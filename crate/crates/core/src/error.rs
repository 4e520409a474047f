use thiserror::Error;

use crate::diagram::ComponentId;
use crate::parser::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("component {0} has no assigned state")]
    MissingComponent(ComponentId),

    #[error("component {0} has no assigned probability")]
    MissingProbability(ComponentId),

    #[error("component {0} is not in the generating set")]
    NotBuiltUpon(ComponentId),

    #[error("component {0} appears more than once")]
    DuplicateComponent(ComponentId),

    #[error("component index must be at least 1")]
    ZeroComponentIndex,

    #[error("probability {value} for {component} is outside [0, 1]")]
    InvalidProbability { component: ComponentId, value: f64 },

    #[error("{what} limit exceeded: {actual} > {limit}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("node store is full ({0} nodes)")]
    StoreCapacity(usize),

    #[error("canonical forms belong to different node stores")]
    StoreMismatch,

    #[error("{what} = {value} is outside the supported range {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("line {line}: {message}")]
    AssignmentSyntax { line: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// True for failures caused by a configured size limit rather than bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::CapExceeded { .. } | Error::StoreCapacity(_))
    }
}
