use thiserror::Error;

/// Everything that can go wrong while building, evaluating or searching hypergraphs.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("edge {edge} repeats vertex {vertex} (a colour may appear only once per die)")]
    ImproperColouring { edge: usize, vertex: usize },

    #[error("edge {edge} has {found} vertices, expected r = {expected}")]
    EdgeSize { edge: usize, found: usize, expected: usize },

    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("hypergraph must have at least one edge")]
    NoEdges,

    #[error("pair query needs two distinct vertices, got {0} twice")]
    SameVertex(usize),

    #[error("orientation invalid: {0}")]
    BadOrientation(String),

    #[error("invalid parameters: {0}")]
    InvalidParameter(String),

    /// Instance is too large for the requested exact method.
    #[error("{what}: {detail} exceeds the cap of {cap}{hint}")]
    CapExceeded {
        what: &'static str,
        detail: String,
        cap: String,
        hint: &'static str,
    },

    /// Enumeration refused; carries the size of the class that would have been enumerated.
    #[error("enumeration of D({n},{m},{r}) refused: {count} multisets exceed the budget of {budget}")]
    BudgetExceeded {
        n: usize,
        m: usize,
        r: usize,
        count: String,
        budget: u64,
    },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for size/budget refusals, as opposed to malformed input.
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. } | Error::BudgetExceeded { .. })
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
