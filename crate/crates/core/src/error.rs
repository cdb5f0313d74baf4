use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid presentation:\n{}", .0.join("\n"))]
    InvalidPresentation(Vec<String>),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("modules live over different algebras")]
    AlgebraMismatch,

    #[error("path length bound {0} exceeded; the ideal is possibly not admissible (possibly infinite-dimensional algebra)")]
    PossiblyInfiniteDimensional(usize),

    #[error("syzygy bound {0} exceeded; possibly infinite global dimension")]
    PossiblyInfiniteGlobalDimension(usize),

    #[error("non-split endomorphism ring: {0}")]
    NonSplit(String),

    #[error("isomorphism test inconclusive: {0}")]
    Inconclusive(String),

    #[error("module is not filtered: {0}")]
    NotFiltered(String),

    #[error("relation violated: {0}")]
    RelationViolated(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
