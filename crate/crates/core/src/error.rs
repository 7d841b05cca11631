use thiserror::Error;

/// Errors surfaced by validation and exact-arithmetic computations.
///
/// `Inconsistency` is reserved for conditions that are mathematically
/// unreachable on valid input (a failed smoothness certificate, an oracle
/// mismatch); hitting one indicates a bug, not bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("Cartan matrix must be nonempty")]
    EmptyMatrix,
    #[error("Cartan matrix must be square: row {row} has {cols} entries, expected {rank}")]
    NonSquareMatrix {
        row: usize,
        cols: usize,
        rank: usize,
    },
    #[error("diagonal entry A[{p}][{p}] must equal 2, got {value}")]
    BadDiagonal { p: usize, value: i64 },
    #[error("off-diagonal entry A[{p}][{q}] must be nonpositive, got {value}")]
    PositiveOffDiagonal { p: usize, q: usize, value: i64 },
    #[error("zero pattern must be symmetric: A[{p}][{q}] = 0 but A[{q}][{p}] = {value}")]
    AsymmetricZeroPattern { p: usize, q: usize, value: i64 },
    #[error("family {family} does not admit rank {rank}")]
    InvalidRank { family: String, rank: usize },
    #[error("unknown root-system family {0:?}")]
    UnknownFamily(String),
    #[error("word must contain at least one letter")]
    EmptyWord,
    #[error("word length {len} exceeds the cap of {max}")]
    WordTooLong { len: usize, max: usize },
    #[error("letter {letter} at word position {position} is outside 1..={rank}")]
    LetterOutOfRange {
        letter: usize,
        position: usize,
        rank: usize,
    },
    #[error("position {index} is outside 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("vector has {len} coordinates, expected {expected}")]
    DimensionMismatch { len: usize, expected: usize },
    #[error("exhaustive enumeration requires word length <= {cap}, got {len}")]
    ExhaustiveCapExceeded { len: usize, cap: usize },
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("boundary coefficient a[{position}] = {value} is outside [0, 1)")]
    BoundaryCoefficientOutOfRange { position: usize, value: String },
    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
