use num_complex::Complex64 as C64;

use super::{hermitian_eig, Matrix};
use crate::error::{Error, Result};

/// Most negative eigenvalue [`psd_sqrt`] treats as rounding noise.
pub const PSD_TOL: f64 = 1e-10;

/// Hermitian positive semidefinite square root via eigendecomposition.
///
/// Eigenvalues in `[-PSD_TOL, 0)` are clamped to zero.
pub fn psd_sqrt(a: &Matrix) -> Result<Matrix> {
    psd_sqrt_with_tolerance(a, PSD_TOL)
}

/// As [`psd_sqrt`] with an explicit clamping tolerance.
pub fn psd_sqrt_with_tolerance(a: &Matrix, negative_tol: f64) -> Result<Matrix> {
    let eig = hermitian_eig(a)?;
    if let Some(&worst) = eig.values.last() {
        if worst < -negative_tol {
            return Err(Error::NotPsd(worst));
        }
    }
    let n = eig.values.len();
    let roots: Vec<f64> = eig.values.iter().map(|&x| x.max(0.0).sqrt()).collect();
    let v = &eig.vectors;
    let mut r = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let s: C64 = (0..n)
                .map(|l| v[(i, l)] * roots[l] * v[(j, l)].conj())
                .sum();
            r[(i, j)] = s;
            r[(j, i)] = s.conj();
        }
        r[(i, i)] = C64::new(r[(i, i)].re, 0.0);
    }
    Ok(r)
}
