use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("word length {length} exceeds the degree window {window}; confluence not certified at this size")]
    WindowExceeded { length: usize, window: usize },
    #[error("operands belong to different rings")]
    MixedRings,
    #[error("sigma not bijective")]
    SigmaNotBijective,
    #[error("graph has a sink at vertex v{}", .0 + 1)]
    GraphHasSink(usize),
    #[error("invalid ring specification: {0}")]
    InvalidSpec(String),
    #[error("capability error: {0}")]
    Capability(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("not a chain map: {0}")]
    NotChainMap(String),
    #[error("complex is not acyclic: homology in degree {0}")]
    NotAcyclic(i64),
    #[error("ring map {tag} cannot be applied to a complex over {found}")]
    TagMismatch { tag: String, found: String },
    #[error("ill-defined group map: {0}")]
    IllDefinedMap(String),
    #[error("inconsistent K0 package: {0}")]
    InvalidPackage(String),
    #[error("no K0 package for {0}")]
    NoPackage(String),
    #[error("sheaf condition fails: {0}")]
    SheafCondition(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
