use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed word: {0}")]
    MalformedWord(String),
    #[error("not a chord involution: {0}")]
    NotInvolution(String),
    #[error("unknown chord {0}")]
    UnknownChord(String),
    #[error("operation needs at least one chord")]
    EmptyDiagram,
    #[error("gap {gap} out of range for {gaps} gaps")]
    GapOutOfRange { gap: usize, gaps: usize },
    #[error("invalid star parameters: {0}")]
    InvalidStarParams(String),
    #[error("arc number {0}: no star")]
    NoStar(usize),
    #[error("{what} limited to n <= {max}, got n = {n}")]
    SizeGuard {
        what: &'static str,
        n: usize,
        max: usize,
    },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
