use thiserror::Error;

/// Validation failures for graph values and the operations defined on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count must be at least 1")]
    EmptyVertexSet,
    #[error("vertex count {n} exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("endpoint {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge (x{index}, y{index}) pulls back to a self-loop")]
    DiagonalEdge { index: usize },
    #[error("column {column} does not have digraph incidence shape (one +1, one -1)")]
    NotDigraphIncidence { column: usize },
    #[error("witness is not a Hamiltonian cycle of the host graph")]
    NotHamiltonian,
    #[error("pairs ({0}, {1}) and ({2}, {3}) share an endpoint")]
    MatchingConflict(usize, usize, usize, usize),
    #[error("matching edge (x{x}, y{y}) is not an edge of the graph")]
    MatchingEdgeMissing { x: usize, y: usize },
    #[error("matching of size {size} is not perfect for part size {n}")]
    NotPerfect { size: usize, n: usize },
    #[error("parameter k = {k} outside the admissible range 1 < k < {n}")]
    ParameterOutOfRange { k: usize, n: usize },
    #[error("contracted arc {tail}->{head} appears in both alternating halves")]
    CancelledColumn { tail: usize, head: usize },
}
