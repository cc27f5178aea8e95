//! Seeded generators for test matrices.
//!
//! All randomness goes through [`SeededRng`], the ChaCha8 stream cipher
//! generator from `rand_chacha`, seeded with `SeedableRng::seed_from_u64`.
//! The same seed reproduces the same matrices on every platform.

use std::f64::consts::TAU;

use num_complex::Complex64 as C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::linalg::{spectral_norm, Matrix};
use crate::shift::shift_matrix;

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Standard complex Gaussian: real and imaginary parts `N(0, 1/2)`.
pub fn complex_gaussian(rng: &mut SeededRng) -> C64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    C64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

pub fn gaussian_matrix(rng: &mut SeededRng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| complex_gaussian(rng))
}

/// Gaussian matrix with entries of variance `1/n`, so its norm stays O(1).
pub fn random_matrix(rng: &mut SeededRng, n: usize) -> Matrix {
    gaussian_matrix(rng, n, n).scale_real(1.0 / (n as f64).sqrt())
}

pub fn random_unit_vector(rng: &mut SeededRng, n: usize) -> Vec<C64> {
    loop {
        let v: Vec<C64> = (0..n).map(|_| complex_gaussian(rng)).collect();
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-8 {
            return v.into_iter().map(|z| z / norm).collect();
        }
    }
}

/// `n × k` matrix with orthonormal columns, from Gram–Schmidt on Gaussian columns.
pub fn random_isometry(rng: &mut SeededRng, n: usize, k: usize) -> Matrix {
    assert!(k <= n);
    let mut cols: Vec<Vec<C64>> = Vec::with_capacity(k);
    while cols.len() < k {
        let mut v: Vec<C64> = (0..n).map(|_| complex_gaussian(rng)).collect();
        // two passes for numerical orthogonality
        for _ in 0..2 {
            for q in &cols {
                let proj: C64 = q.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                for (x, y) in v.iter_mut().zip(q) {
                    *x -= proj * y;
                }
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-6 {
            cols.push(v.into_iter().map(|z| z / norm).collect());
        }
    }
    Matrix::from_fn(n, k, |i, j| cols[j][i])
}

pub fn random_unitary(rng: &mut SeededRng, n: usize) -> Matrix {
    random_isometry(rng, n, n)
}

/// Householder reflector `I - 2 v v*` for a random unit `v`.
pub fn random_householder(rng: &mut SeededRng, n: usize) -> Matrix {
    let v = random_unit_vector(rng, n);
    Matrix::identity(n)
        .sub(&Matrix::from_fn(n, n, |i, j| 2.0 * v[i] * v[j].conj()))
        .expect("same shape")
}

pub fn random_phases(rng: &mut SeededRng, n: usize) -> Matrix {
    Matrix::from_diag(
        &(0..n)
            .map(|_| C64::from_polar(1.0, rng.random_range(0.0..TAU)))
            .collect::<Vec<_>>(),
    )
}

pub fn random_hermitian(rng: &mut SeededRng, n: usize) -> Matrix {
    let g = random_matrix(rng, n);
    g.add(&g.adjoint()).expect("same shape").scale_real(0.5)
}

/// Point uniformly distributed in the closed unit disc.
pub fn unit_disc_point(rng: &mut SeededRng) -> C64 {
    let r = rng.random_range(0.0f64..=1.0).sqrt();
    C64::from_polar(r, rng.random_range(0.0..TAU))
}

/// `U diag(λ) U*` with eigenvalues uniform in the unit disc; returns the matrix and its eigenvalues.
pub fn random_normal(rng: &mut SeededRng, n: usize) -> (Matrix, Vec<C64>) {
    let eigs: Vec<C64> = (0..n).map(|_| unit_disc_point(rng)).collect();
    let u = random_unitary(rng, n);
    let t = u
        .matmul(&Matrix::from_diag(&eigs))
        .and_then(|m| m.matmul(&u.adjoint()))
        .expect("square");
    (t, eigs)
}

/// Unitarily rotated strictly lower-triangular Gaussian matrix, scaled to `||T||_2 = norm`.
pub fn random_nilpotent_contraction(rng: &mut SeededRng, d: usize, norm: f64) -> Matrix {
    let lower = Matrix::from_fn(d, d, |i, j| {
        if i > j {
            complex_gaussian(rng)
        } else {
            C64::new(0.0, 0.0)
        }
    });
    let u = random_unitary(rng, d);
    let t = u
        .adjoint()
        .matmul(&lower)
        .and_then(|m| m.matmul(&u))
        .expect("square");
    let s = spectral_norm(&t).expect("finite");
    if s == 0.0 {
        t
    } else {
        t.scale_real(norm / s)
    }
}

/// Random composition of `total` into `parts` positive sizes.
pub fn random_composition(rng: &mut SeededRng, total: usize, parts: usize) -> Vec<usize> {
    assert!(parts >= 1 && parts <= total);
    let mut sizes = vec![1; parts];
    for _ in 0..total - parts {
        let i = rng.random_range(0..parts);
        sizes[i] += 1;
    }
    sizes
}

/// Unitary conjugate of a direct sum of shift blocks with the given sizes.
///
/// The result is a partial isometry whose defect has rank `sizes.len()` and
/// whose nilpotency index is the largest block.
pub fn shift_block_contraction(rng: &mut SeededRng, sizes: &[usize]) -> Matrix {
    let blocks = sizes
        .iter()
        .map(|&s| shift_matrix(s))
        .reduce(|a, b| a.direct_sum(&b))
        .expect("at least one block");
    let u = random_unitary(rng, blocks.rows());
    u.adjoint()
        .matmul(&blocks)
        .and_then(|m| m.matmul(&u))
        .expect("square")
}
