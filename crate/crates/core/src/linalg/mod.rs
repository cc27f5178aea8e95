//! Dense complex linear algebra: matrices, Hermitian eigensolvers and the
//! PSD square root.

mod eigen;
mod matrix;
mod sqrt;

pub use eigen::{
    gram, hermitian_eig, hermitian_eigvals, spectral_norm, HermitianEigen, HERMITIAN_TOL,
    MAX_SWEEPS, OFF_DIAGONAL_TOL,
};
pub use matrix::Matrix;
pub use sqrt::{psd_sqrt, psd_sqrt_with_tolerance, PSD_TOL};
