use thiserror::Error;

/// Errors raised by the numerical routines in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix has a non-finite entry at ({0}, {1})")]
    NonFinite(usize, usize),
    #[error("matrix is not Hermitian: ||H - H*||_F = {defect:e}")]
    NotHermitian { defect: f64 },
    #[error(
        "Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal mass {off:e})"
    )]
    NoConvergence { sweeps: usize, off: f64 },
    #[error("matrix is not positive semidefinite: eigenvalue {0:e}")]
    NotPsd(f64),
    #[error("rank k = {k} out of range 1..={dim}")]
    BadRank { k: usize, dim: usize },
    #[error("index k = {k} out of range 1..={len}")]
    BadIndex { k: usize, len: usize },
    #[error("operation undefined on the empty region")]
    EmptyRegion,
    #[error("matrix is not a contraction: ||T||_2 = {0}")]
    NotContraction(f64),
    #[error("matrix is not nilpotent within its dimension")]
    NotNilpotent,
    #[error("matrix is not unitary: ||U*U - I||_F = {0:e}")]
    NotUnitary(f64),
    #[error("columns are not orthonormal or too few: {0}")]
    BadIsometry(String),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
