use thiserror::Error;

/// Errors raised by matrix validation, weight handling and the geometric
/// construction.
///
/// Positions carried by variants are 1-based alternative labels, matching how
/// matrices are written by hand (`a_21` is row 2, column 1).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("NonSquare: {0}")]
    NonSquare(String),

    #[error("NonPositiveEntry ({0},{1})")]
    NonPositiveEntry(usize, usize),

    #[error("ReciprocityViolation ({0},{1})")]
    ReciprocityViolation(usize, usize),

    #[error("BadNumeral: {0}")]
    BadNumeral(String),

    #[error("IndexOutOfRange: alternative {index} is not in 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("RepeatedIndex: alternative {0} appears more than once")]
    RepeatedIndex(usize),

    #[error("TooShort: a cycle needs at least 3 alternatives, got {0}")]
    TooShort(usize),

    #[error("UnsupportedDimension: operation requires n = 4, got n = {0}")]
    UnsupportedDimension(usize),

    #[error("DimensionTooLarge: n = {n} exceeds the limit {limit}")]
    DimensionTooLarge { n: usize, limit: usize },

    #[error("DimensionMismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("NonPositiveWeight: component {0} is not strictly positive")]
    NonPositiveWeight(usize),

    #[error("NotConsistent: the matrix has an inconsistent triad")]
    NotConsistent,

    #[error("NotNormalized: weight components do not sum to 1")]
    NotNormalized,

    #[error("NotACanonicalCycle: {0}")]
    NotACanonicalCycle(String),

    #[error("NotAPermutation: {0}")]
    NotAPermutation(String),

    #[error("NotASpanningTree: {0}")]
    NotASpanningTree(String),

    #[error("ConsistentTriadPresent: triad {0} is consistent")]
    ConsistentTriadPresent(String),

    #[error("ImpossibleCombination ({triads},{cycles}): no perturbation class has this count pair")]
    ImpossibleCombination { triads: usize, cycles: usize },

    #[error("GenerationFailed: {0}")]
    GenerationFailed(String),

    #[error("Io: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

/// Checks that `found` matches `expected`.
pub(crate) fn ensure_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

pub(crate) fn ensure_four(n: usize) -> Result<()> {
    if n == 4 {
        Ok(())
    } else {
        Err(Error::UnsupportedDimension(n))
    }
}
