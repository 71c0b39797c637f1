use alloc::string::String;
use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("duplicate vertex id `{0}`")]
    DuplicateVertexId(String),
    #[error("duplicate edge id `{0}`")]
    DuplicateEdgeId(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("invalid size: {0}")]
    InvalidSize(String),
    #[error("{what} is too large: {got} exceeds the limit {limit}")]
    TooLarge {
        what: &'static str,
        limit: usize,
        got: usize,
    },
    #[error("deleting edge `{0}` would disconnect the graph")]
    WouldDisconnect(String),
    #[error("cannot contract the loop `{0}`")]
    ContractLoop(String),
    #[error("morphisms are not composable")]
    Mismatch,
    #[error("invalid minor morphism: {0}")]
    InvalidMorphism(String),
    #[error("property is not monotone: {face:?} holds but {missing:?} does not")]
    NotMonotone {
        face: Vec<String>,
        missing: Vec<String>,
    },
    #[error("not functorial: {0}")]
    NotFunctorial(String),
    #[error("`{0}` is not in the ground set")]
    NotSubset(String),
    #[error("bad degree {0}")]
    BadDegree(i64),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("unbalanced parenthesis word")]
    Unbalanced,
    #[error("no polynomial fit: {0}")]
    NoFit(String),
}

pub type Result<T> = core::result::Result<T, Error>;
