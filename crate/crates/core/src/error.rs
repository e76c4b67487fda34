use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("digraph is not transitive: ({0},{1}) and ({1},{2}) present but ({0},{2}) missing")]
    NotTransitive(usize, usize, usize),
    #[error("order {order} exceeds the limit {limit} for {what}")]
    OrderTooLarge { what: &'static str, order: usize, limit: usize },
    #[error("digraph is decomposable; criticality is only defined for indecomposable digraphs")]
    Decomposable,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("graph is not split")]
    NotSplit,
    #[error("cannot compare a graph with a digraph")]
    KindMismatch,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
