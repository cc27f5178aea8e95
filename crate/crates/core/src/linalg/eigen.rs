//! Hermitian eigensolvers.
//!
//! Two independent routes are provided:
//!
//! * [`hermitian_eig`]: cyclic complex Jacobi with 2×2 unitary rotations,
//!   returning eigenvalues and an orthonormal eigenbasis.
//! * [`hermitian_eigvals`]: Householder reduction to a real symmetric
//!   tridiagonal matrix followed by implicit-shift QL, values only. This is
//!   the hot path of the pencil sweep, where thousands of spectra are needed
//!   and the eigenvectors are never used.
//!
//! Both return values sorted in non-increasing order.

use num_complex::Complex64 as C64;

use super::Matrix;
use crate::error::{Error, Result};

/// Relative tolerance on `||H - H*||_F` accepted as Hermitian.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Jacobi stops once off-diagonal Frobenius mass falls below this, relative.
pub const OFF_DIAGONAL_TOL: f64 = 1e-13;
/// Hard cap on full Jacobi sweeps.
pub const MAX_SWEEPS: usize = 60;

const MAX_QL_ITERATIONS: usize = 60;

/// Spectrum of a Hermitian matrix, sorted so that `values[0]` is the largest.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    /// Column `j` is a unit eigenvector for `values[j]`.
    pub vectors: Matrix,
}

impl HermitianEigen {
    /// `V diag(values) V*`.
    pub fn reconstruct(&self) -> Matrix {
        let n = self.values.len();
        let v = &self.vectors;
        Matrix::from_fn(n, n, |i, j| {
            (0..n)
                .map(|l| v[(i, l)] * self.values[l] * v[(j, l)].conj())
                .sum()
        })
    }

    /// `k`-th largest eigenvalue, 1-based.
    pub fn kth_largest(&self, k: usize) -> Option<f64> {
        k.checked_sub(1).and_then(|i| self.values.get(i).copied())
    }
}

fn validated_copy(h: &Matrix) -> Result<(usize, f64, Matrix)> {
    let n = h.require_square()?;
    h.check_finite()?;
    let scale = h.frobenius_norm().max(1.0);
    let defect = h.hermitian_defect();
    if defect > HERMITIAN_TOL * scale {
        return Err(Error::NotHermitian { defect });
    }
    // Remove the rounding-level anti-Hermitian part so the iterations see an
    // exactly Hermitian input.
    let a = Matrix::from_fn(n, n, |i, j| {
        if i == j {
            C64::new(h[(i, i)].re, 0.0)
        } else {
            0.5 * (h[(i, j)] + h[(j, i)].conj())
        }
    });
    Ok((n, scale, a))
}

fn off_diagonal_norm(a: &Matrix) -> f64 {
    let n = a.rows();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += a[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// Annihilates `a[(p, q)]` with `J = diag(1, e^{-iφ}) · R(c, s)` and accumulates `J` into `v`.
fn rotate(a: &mut Matrix, v: &mut Matrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let n = a.rows();
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let phase = apq / mag;

    let theta = (aqq - app) / (2.0 * mag);
    let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
    let c = 1.0 / t.hypot(1.0);
    let s = t * c;

    let j_pp = C64::new(c, 0.0);
    let j_pq = C64::new(s, 0.0);
    let j_qp = -s * phase.conj();
    let j_qq = c * phase.conj();

    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * j_pp + akq * j_qp;
        a[(k, q)] = akp * j_pq + akq * j_qq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = j_pp.conj() * apk + j_qp.conj() * aqk;
        a[(q, k)] = j_pq.conj() * apk + j_qq.conj() * aqk;
    }
    a[(p, q)] = C64::new(0.0, 0.0);
    a[(q, p)] = C64::new(0.0, 0.0);
    a[(p, p)] = C64::new(app - t * mag, 0.0);
    a[(q, q)] = C64::new(aqq + t * mag, 0.0);

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * j_pp + vkq * j_qp;
        v[(k, q)] = vkp * j_pq + vkq * j_qq;
    }
}

/// Full eigendecomposition of a Hermitian matrix by cyclic complex Jacobi.
///
/// Deterministic for a fixed input. Ties in the spectrum keep the order in
/// which Jacobi left them on the diagonal.
pub fn hermitian_eig(h: &Matrix) -> Result<HermitianEigen> {
    let (n, scale, mut a) = validated_copy(h)?;
    let mut v = Matrix::identity(n);
    let target = OFF_DIAGONAL_TOL * scale;

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a);
        if off <= target {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off });
        }
        for p in 0..n.saturating_sub(1) {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = Matrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    Ok(HermitianEigen { values, vectors })
}

/// Eigenvalues of a Hermitian matrix, non-increasing, via tridiagonalization and QL.
pub fn hermitian_eigvals(h: &Matrix) -> Result<Vec<f64>> {
    let (n, _, mut a) = validated_copy(h)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    tridiagonalize(&mut a);
    let mut d: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    let mut e: Vec<f64> = (0..n)
        .map(|i| if i + 1 < n { a[(i + 1, i)].norm() } else { 0.0 })
        .collect();
    tql_values(&mut d, &mut e)?;
    d.sort_by(|x, y| y.total_cmp(x));
    Ok(d)
}

/// In-place Householder reduction of a Hermitian matrix to Hermitian
/// tridiagonal form. Entries outside the three central diagonals are left
/// as zero; the sub-diagonal may stay complex.
fn tridiagonalize(a: &mut Matrix) {
    let n = a.rows();
    let mut v = vec![C64::new(0.0, 0.0); n];
    let mut p = vec![C64::new(0.0, 0.0); n];
    for k in 0..n.saturating_sub(2) {
        let tail: f64 = (k + 2..n).map(|i| a[(i, k)].norm_sqr()).sum();
        if tail == 0.0 {
            continue;
        }
        let x0 = a[(k + 1, k)];
        let x0_abs = x0.norm();
        let xnorm = (x0_abs * x0_abs + tail).sqrt();
        let phase = if x0_abs == 0.0 {
            C64::new(1.0, 0.0)
        } else {
            x0 / x0_abs
        };
        let alpha = -phase * xnorm;

        let lo = k + 1;
        v[lo] = phase * (x0_abs + xnorm);
        for i in k + 2..n {
            v[i] = a[(i, k)];
        }
        let vnorm = (v[lo..n].iter().map(|z| z.norm_sqr()).sum::<f64>()).sqrt();
        for z in &mut v[lo..n] {
            *z /= vnorm;
        }

        for i in lo..n {
            p[i] = (lo..n).map(|j| a[(i, j)] * v[j]).sum();
        }
        let c: f64 = (lo..n).map(|i| (v[i].conj() * p[i]).re).sum();
        for i in lo..n {
            p[i] -= c * v[i];
        }
        for i in lo..n {
            for j in lo..n {
                a[(i, j)] -= 2.0 * (v[i] * p[j].conj() + p[i] * v[j].conj());
            }
        }

        a[(lo, k)] = alpha;
        a[(k, lo)] = alpha.conj();
        for i in k + 2..n {
            a[(i, k)] = C64::new(0.0, 0.0);
            a[(k, i)] = C64::new(0.0, 0.0);
        }
    }
}

/// Implicit-shift QL on a real symmetric tridiagonal matrix.
///
/// `d` holds the diagonal, `e[i]` couples `d[i]` and `d[i + 1]`; on return `d`
/// holds the (unsorted) eigenvalues and `e` is destroyed.
fn tql_values(d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > MAX_QL_ITERATIONS {
                return Err(Error::NoConvergence {
                    sweeps: iterations,
                    off: e[l].abs(),
                });
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                let gg = d[i + 1] - p;
                r = (d[i] - gg) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = gg + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// `A* A`, Hermitian by construction.
pub fn gram(a: &Matrix) -> Matrix {
    let n = a.cols();
    let mut g = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let s: C64 = (0..a.rows()).map(|k| a[(k, i)].conj() * a[(k, j)]).sum();
            g[(i, j)] = s;
            g[(j, i)] = s.conj();
        }
        g[(i, i)] = C64::new(g[(i, i)].re, 0.0);
    }
    g
}

/// Largest singular value, `sqrt(λ_max(A* A))`.
pub fn spectral_norm(a: &Matrix) -> Result<f64> {
    if a.rows() == 0 || a.cols() == 0 {
        return Ok(0.0);
    }
    let values = hermitian_eigvals(&gram(a))?;
    Ok(values[0].max(0.0).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shift::shift_matrix;
    use approx::assert_abs_diff_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_hermitian(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
        let g = Matrix::from_fn(n, n, |_, _| {
            C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        });
        g.add(&g.adjoint()).unwrap()
    }

    #[test]
    fn shift_pencil_spectrum() {
        let s = shift_matrix(4);
        let h = s.add(&s.adjoint()).unwrap();
        let want: Vec<f64> = (1..=4)
            .map(|nu| 2.0 * (nu as f64 * std::f64::consts::PI / 5.0).cos())
            .collect();
        let eig = hermitian_eig(&h).unwrap();
        let fast = hermitian_eigvals(&h).unwrap();
        for i in 0..4 {
            assert_abs_diff_eq!(eig.values[i], want[i], epsilon = 1e-12);
            assert_abs_diff_eq!(fast[i], want[i], epsilon = 1e-12);
        }
        assert_abs_diff_eq!(eig.values[0], 1.618034, epsilon = 1e-6);
        assert_abs_diff_eq!(eig.values[1], 0.618034, epsilon = 1e-6);
    }

    #[test]
    fn identity_spectrum() {
        let eig = hermitian_eig(&Matrix::identity(3)).unwrap();
        assert_eq!(eig.values, vec![1.0, 1.0, 1.0]);
        assert_eq!(eig.vectors, Matrix::identity(3));
    }

    /// Oracle: expand det(H - λI) for a 3×3 Hermitian by hand and bisect
    /// its three real roots on brackets found by sign scanning.
    fn cubic_roots_by_bisection(h: &Matrix) -> Vec<f64> {
        let a = |i: usize, j: usize| h[(i, j)];
        let charpoly = |x: f64| -> f64 {
            let (a00, a11, a22) = (a(0, 0).re - x, a(1, 1).re - x, a(2, 2).re - x);
            let (a01, a02, a12) = (a(0, 1), a(0, 2), a(1, 2));
            a00 * a11 * a22 + 2.0 * (a01 * a12 * a02.conj()).re
                - a00 * a12.norm_sqr()
                - a11 * a02.norm_sqr()
                - a22 * a01.norm_sqr()
        };
        let bound = h.frobenius_norm() + 1.0;
        let steps = 20_000;
        let mut roots = Vec::new();
        let mut prev_x = -bound;
        let mut prev_f = charpoly(prev_x);
        for s in 1..=steps {
            let x = -bound + 2.0 * bound * s as f64 / steps as f64;
            let f = charpoly(x);
            if prev_f == 0.0 || prev_f.signum() != f.signum() {
                let (mut lo, mut hi) = (prev_x, x);
                for _ in 0..200 {
                    let mid = 0.5 * (lo + hi);
                    if charpoly(lo).signum() == charpoly(mid).signum() {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                roots.push(0.5 * (lo + hi));
            }
            prev_x = x;
            prev_f = f;
        }
        roots.sort_by(|x, y| y.total_cmp(x));
        roots
    }

    #[test]
    fn random_3x3_matches_characteristic_cubic() {
        let mut rng = ChaCha8Rng::seed_from_u64(20);
        let h = random_hermitian(&mut rng, 3);
        let roots = cubic_roots_by_bisection(&h);
        assert_eq!(roots.len(), 3);
        let eig = hermitian_eig(&h).unwrap();
        let fast = hermitian_eigvals(&h).unwrap();
        for i in 0..3 {
            assert_abs_diff_eq!(eig.values[i], roots[i], epsilon = 1e-9);
            assert_abs_diff_eq!(fast[i], roots[i], epsilon = 1e-9);
        }
    }

    #[test]
    fn rejects_non_hermitian() {
        let s = shift_matrix(3);
        assert!(matches!(hermitian_eig(&s), Err(Error::NotHermitian { .. })));
        assert!(matches!(
            hermitian_eigvals(&s),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn decomposition_invariants() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in [1, 2, 5, 9, 16] {
            let h = random_hermitian(&mut rng, n);
            let scale = h.frobenius_norm().max(1.0);
            let eig = hermitian_eig(&h).unwrap();
            assert!(eig.values.windows(2).all(|w| w[0] >= w[1]));
            let vv = eig.vectors.adjoint().matmul(&eig.vectors).unwrap();
            assert!(vv.sub(&Matrix::identity(n)).unwrap().frobenius_norm() <= 1e-10);
            let resid = h.sub(&eig.reconstruct()).unwrap().frobenius_norm();
            assert!(resid <= 1e-10 * scale, "n = {n}: residual {resid:e}");

            let trace = h.trace().re;
            let sum: f64 = eig.values.iter().sum();
            assert!((sum - trace).abs() <= 1e-9 * scale);
            let sq: f64 = eig.values.iter().map(|x| x * x).sum();
            assert!((sq - h.frobenius_norm().powi(2)).abs() <= 1e-9 * scale);

            let fast = hermitian_eigvals(&h).unwrap();
            for (a, b) in eig.values.iter().zip(&fast) {
                assert_abs_diff_eq!(a, b, epsilon = 1e-10 * scale);
            }
        }
    }

    #[test]
    fn phase_unitary_similarity_preserves_spectrum() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let h = random_hermitian(&mut rng, 6);
            let u = Matrix::from_diag(
                &(0..6)
                    .map(|_| C64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU)))
                    .collect::<Vec<_>>(),
            );
            let rotated = u.adjoint().matmul(&h).unwrap().matmul(&u).unwrap();
            let a = hermitian_eig(&h).unwrap().values;
            let b = hermitian_eig(&rotated).unwrap().values;
            for (x, y) in a.iter().zip(&b) {
                assert_abs_diff_eq!(x, y, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn deterministic() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let h = random_hermitian(&mut rng, 7);
        let a = hermitian_eig(&h).unwrap();
        let b = hermitian_eig(&h).unwrap();
        assert_eq!(a.values, b.values);
        assert_eq!(a.vectors, b.vectors);
    }

    #[test]
    fn spectral_norm_of_scaled_shift() {
        assert_abs_diff_eq!(
            spectral_norm(&shift_matrix(5).scale_real(0.3)).unwrap(),
            0.3,
            epsilon = 1e-14
        );
        assert_eq!(spectral_norm(&Matrix::zeros(3, 3)).unwrap(), 0.0);
    }
}
