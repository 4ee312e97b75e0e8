use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter {value} at position {position} is not a positive integer")]
    InvalidLetter { position: usize, value: i64 },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("word is not reduced")]
    NotReduced,
    #[error("permutation is not Grassmannian")]
    NotGrassmannian,
    #[error("position {position} is out of range for a word of length {len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("cannot start a bump at {0}: deleting that letter leaves a non-reduced word")]
    InvalidStart(usize),
    #[error("values {0} and {1} never cross")]
    NoCrossing(u32, u32),
    #[error("move is not applicable at this position")]
    InapplicableMove,
    #[error("invalid tableau label: {0}")]
    InvalidLabel(String),
    #[error("{0}")]
    Domain(String),
    #[error("iteration cap of {0} exceeded")]
    IterationCap(usize),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
