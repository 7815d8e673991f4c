use alloc::string::String;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("ordering is not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("graph is not chordal")]
    NotChordal,
    #[error("graph is complete")]
    CompleteGraph,
    #[error("graph has fewer than {0} vertices")]
    TooFewVertices(usize),
    #[error("vertex set is not a maximal clique")]
    NotMaximalClique,
    #[error("vertex set is not a maximum clique")]
    NotMaximumClique,
    #[error("index {index} outside 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("no maximal clique of order at least {0}")]
    NoMaximalCliqueOfOrder(usize),
    #[error("no dominating family exists for order {0} under strict containment")]
    NoStrictDomination(usize),
    #[error("entry {index} is not positive")]
    NonPositiveEntry { index: usize },
    #[error("empty vector")]
    EmptyVector,
    #[error("empty word")]
    EmptyWord,
    #[error("invalid letter {letter:?} at position {position}")]
    InvalidLetter { letter: char, position: usize },
    #[error("{what} cap exceeded: {actual} > {limit}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("special elimination ordering violates condition {0}")]
    SpecialPeoViolation(String),
    #[error("shift verification failed: {0}")]
    ShiftVerification(String),
}

pub type Result<T> = core::result::Result<T, Error>;
