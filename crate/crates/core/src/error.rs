use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("degree mismatch: h has {0} points, v has {1}")]
    DegreeMismatch(usize, usize),
    #[error("origami is not connected")]
    DisconnectedOrigami,
    #[error("bad family parameters: {0}")]
    BadParameters(String),
    #[error("classes belong to different homology models")]
    ModelMismatch,
    #[error("class has nonzero holonomy ({0}, {1})")]
    NotInKernel(String, String),
    #[error("chain is not a cycle")]
    NotACycle,
    #[error("scale {0} gives non-integral twist counts")]
    BadScale(String),
    #[error("direction decomposes into {0} cylinders, expected 2")]
    NotTwoCylinders(usize),
    #[error("invalid direction ({0}, {1})")]
    BadDirection(i64, i64),
    #[error("matrix is {0}x{1}, expected square")]
    NotSquare(usize, usize),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("polynomial is not reciprocal")]
    NotReciprocal,
    #[error("polynomial is not irreducible")]
    NotIrreducible,
    #[error("bad prime {0}")]
    BadPrime(u64),
    #[error("transvection vectors span a subspace of dimension {0}")]
    DegenerateSpan(usize),
    #[error("pairing on W is non-degenerate, no radical")]
    NoRadical,
    #[error("prime budget {0} exhausted")]
    BudgetExhausted(u64),
    #[error("numerical root refinement failed: {0}")]
    Numeric(String),
    #[error("report verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
