use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("Gram matrix is not symmetric (entry ({0},{1}))")]
    NotSymmetric(usize, usize),
    #[error("Gram matrix is not square")]
    NotSquare,
    #[error("Gram matrix is not positive definite (leading minor {0} is not positive)")]
    NotPositiveDefinite(usize),
    #[error("lattice is not even (diagonal entry {0} is odd)")]
    NotEven(usize),
    #[error("lattice has roots")]
    HasRoots,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("vector {0:?} does not have norm 4")]
    NotNormFour(Vec<i64>),
    #[error("sublattice is not isometric to sqrt(2)E8")]
    NotE8,
    #[error("sublattice vector {0:?} is not a norm-4 vector of the ambient lattice")]
    NotSublatticeOfL(Vec<i64>),
    #[error("sublattice is not doubly even (pairings must be even and norms divisible by 4)")]
    NotEvenSublattice,
    #[error("element is not an Ising vector: {0}")]
    NotIsing(String),
    #[error("unknown preset {0:?}")]
    UnknownPreset(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// Process exit status: 1 for bad input, 2 for an invalid lattice, 3 for a
    /// failed internal invariant.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NotSymmetric(..) | Error::NotSquare | Error::NotPositiveDefinite(_) | Error::NotEven(_) | Error::HasRoots => 2,
            Error::Invariant(_) => 3,
            _ => 1,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
