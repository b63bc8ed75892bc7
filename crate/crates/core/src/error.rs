use thiserror::Error;

pub type Result<T> = std::result::Result<T, AlbertError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlbertError {
    /// Δ(x) = 0, so no isotope is attached to the point.
    #[error("point is not semistable: discriminant vanishes")]
    NotSemistable,
    /// det(a) = 0, so the isotope J_a is undefined.
    #[error("point is singular: det(a) = 0")]
    SingularPoint,
    #[error("matrix is singular (rank {rank} < {size})")]
    SingularMatrix { rank: usize, size: usize },
    #[error("scalar parameter must be nonzero")]
    ZeroScalar,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

impl AlbertError {
    /// Stable machine-readable name, used in structured CLI errors.
    pub fn kind(&self) -> &'static str {
        match self {
            AlbertError::NotSemistable => "NotSemistable",
            AlbertError::SingularPoint => "SingularPoint",
            AlbertError::SingularMatrix { .. } => "SingularMatrix",
            AlbertError::ZeroScalar => "ZeroScalar",
            AlbertError::Dimension { .. } => "Dimension",
            AlbertError::Parse(_) => "Parse",
        }
    }
}
