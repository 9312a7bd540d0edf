use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(usize),
    #[error("{0} is not an edge")]
    NotAnEdge(String),
    #[error("empty vertex set")]
    EmptySet,
    #[error("not a subgraph: {0}")]
    NotSubgraph(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("size bound exceeded: order {order} > {bound}")]
    SizeBound { order: usize, bound: usize },
    #[error("budget exhausted{}", .best.map(|b| format!(" (best upper bound {b})")).unwrap_or_default())]
    BudgetExhausted { best: Option<usize> },
    #[error("unbound variable {0}")]
    UnboundVariable(String),
    #[error("unknown colour relation {0}")]
    UnknownColour(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),
    #[error("not a cycle: {0}")]
    NotACycle(String),
    #[error("necklace condition violated: {0}")]
    Necklace(String),
    #[error("{0}")]
    Precondition(String),
    #[error("unknown experiment {0}")]
    UnknownExperiment(String),
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
