use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop edge at vertex {vertex}")]
    LoopEdge { vertex: usize },

    #[error("capacity exceeded: {requested} vertices, limit {limit}")]
    CapacityExceeded { requested: usize, limit: usize },

    #[error("order {order} out of range [{min}, {max}]")]
    OrderOutOfRange { order: usize, min: usize, max: usize },

    #[error("building string must start with '0', got {0:?}")]
    BadBuildingString(String),

    #[error("building string contains non-binary character {0:?}")]
    NonBinaryCharacter(char),

    #[error("building string must be nonempty")]
    EmptyBuildingString,

    #[error("pattern period must be nonempty")]
    EmptyPeriod,

    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),

    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },

    #[error("negative coefficient at index {index}")]
    NegativeCoefficient { index: usize },

    #[error("zero polynomial has no root report")]
    ZeroPolynomial,

    #[error("memo table exceeded {limit} entries; raise the cap or shrink the graph")]
    MemoTableFull { limit: usize },
}
