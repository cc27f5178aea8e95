//! Isometric dilation of a nilpotent contraction onto copies of the
//! backward shift.
//!
//! For `||T|| <= 1` and `T^n = 0` the map
//! `V x = Σ_{t=1}^{n} D_T T^{t-1} x ⊗ e_t` with `D_T = (I - T*T)^{1/2}`
//! is an isometry satisfying `V T = (I ⊗ S_n*) V`, so `T = V* (I ⊗ S_n*) V`
//! is a compression of a replicated shift.

use crate::error::{Error, Result};
use crate::linalg::{gram, hermitian_eigvals, psd_sqrt_with_tolerance, spectral_norm, Matrix};
use crate::shift::shift_matrix;

/// Slack on `||T||_2 <= 1`.
pub const CONTRACTION_TOL: f64 = 1e-10;
/// Singular values of `D_T` above this count towards its rank.
pub const DEFECT_RANK_TOL: f64 = 1e-8;
/// Relative size below which a power of `T` counts as zero.
pub const NILPOTENCY_TOL: f64 = 1e-12;

// `I - T*T` can dip to about -2·CONTRACTION_TOL for inputs on the boundary.
const DEFECT_CLAMP_TOL: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct DilationPack {
    /// `D_T = (I - T*T)^{1/2}`.
    pub defect: Matrix,
    /// Numerical rank of `D_T`.
    pub r: usize,
    /// Nilpotency index of `T`.
    pub n: usize,
    /// `(d·n) × d` isometry; row `a·n + t` holds row `a` of `D_T T^t`.
    pub v: Matrix,
    /// `||V*V - I||_F`.
    pub isometry_residual: f64,
    /// `||V T - (I_d ⊗ S_n*) V||_F`.
    pub intertwine_residual: f64,
}

impl DilationPack {
    /// `I_d ⊗ S_n*` on the full space `ℂ^d ⊗ ℂ^n`.
    pub fn model(&self) -> Matrix {
        Matrix::identity(self.v.cols()).kron(&shift_matrix(self.n).adjoint())
    }

    /// `V* (I_d ⊗ S_n*) V`, which reproduces `T`.
    pub fn compression(&self) -> Result<Matrix> {
        self.v.adjoint().matmul(&self.model().matmul(&self.v)?)
    }
}

/// Smallest `p` with `T^p ≈ 0`.
pub fn nilpotency_index(t: &Matrix) -> Result<usize> {
    let d = t.require_square()?;
    let norm = t.frobenius_norm();
    let mut power = t.clone();
    for p in 1..=d {
        if power.max_abs() <= NILPOTENCY_TOL * norm.powi(p as i32).max(1.0) {
            return Ok(p);
        }
        power = power.matmul(t)?;
    }
    Err(Error::NotNilpotent)
}

/// Number of eigenvalues of `I - T*T` whose square root exceeds [`DEFECT_RANK_TOL`].
pub fn defect_rank(t: &Matrix) -> Result<usize> {
    let d = t.require_square()?;
    let a = Matrix::identity(d).sub(&gram(t))?;
    Ok(hermitian_eigvals(&a)?
        .into_iter()
        .filter(|&x| x.max(0.0).sqrt() > DEFECT_RANK_TOL)
        .count())
}

pub fn build_dilation(t: &Matrix) -> Result<DilationPack> {
    let d = t.require_square()?;
    t.check_finite()?;
    let norm = spectral_norm(t)?;
    if norm > 1.0 + CONTRACTION_TOL {
        return Err(Error::NotContraction(norm));
    }
    let n = nilpotency_index(t)?;

    let gap = Matrix::identity(d).sub(&gram(t))?;
    let defect = psd_sqrt_with_tolerance(&gap, DEFECT_CLAMP_TOL)?;
    let r = defect_rank(t)?;

    let mut v = Matrix::zeros(d * n, d);
    let mut block = defect.clone();
    for step in 0..n {
        for a in 0..d {
            for col in 0..d {
                v[(a * n + step, col)] = block[(a, col)];
            }
        }
        block = block.matmul(t)?;
    }

    let isometry_residual = gram(&v).sub(&Matrix::identity(d))?.frobenius_norm();
    let model = Matrix::identity(d).kron(&shift_matrix(n).adjoint());
    let intertwine_residual = v.matmul(t)?.sub(&model.matmul(&v)?)?.frobenius_norm();

    Ok(DilationPack {
        defect,
        r,
        n,
        v,
        isometry_residual,
        intertwine_residual,
    })
}
