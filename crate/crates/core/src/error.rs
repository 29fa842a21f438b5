use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate vertex {0}")]
    DuplicateVertex(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("self-loop at {0}")]
    SelfLoop(String),
    #[error("duplicate edge {0} -> {1}")]
    DuplicateEdge(String, String),
    #[error("edge colors must be positive")]
    ZeroColor,
    #[error("diagram is not ranked: {0}")]
    NotRanked(String),
    #[error("diagram is not weakly connected")]
    NotConnected,
    #[error("not a lattice: {0}")]
    NotALattice(String),
    #[error("not diamond-colored: {0}")]
    NotDiamondColored(String),
    #[error("not topographically balanced: {0}")]
    NotModular(String),
    #[error("lattice is not distributive")]
    NotDistributive,
    #[error("not a poset diagram: {0}")]
    NotAPoset(String),
    #[error("vertices lie in different components")]
    Unreachable,
    #[error("invalid object: {0}")]
    InvalidObject(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("{what} exceeds cap {cap}")]
    CapExceeded { what: &'static str, cap: usize },
    #[error("color-{color} component is not ranked")]
    UnrankedComponent { color: u32 },
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("digraphs are not isomorphic: {0}")]
    NotIsomorphic(String),
    #[error("structure violation: {0}")]
    StructureViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
