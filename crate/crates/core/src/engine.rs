//! Rank-k numerical ranges by sweeping the Hermitian pencil
//! `H_θ = e^{iθ} T + e^{-iθ} T*` over a uniform angle grid.
//!
//! For each grid angle the k-th largest eigenvalue of `H_θ` gives the offset
//! of a supporting half-plane `{z : Re(e^{iθ} z) <= λ_k(H_θ) / 2}`; the range
//! is the intersection of all of them. The result is therefore an outer
//! (circumscribed) approximation.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64 as C64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{intersect_halfplanes, ConvexRegion, HalfPlane};
use crate::linalg::{hermitian_eigvals, Matrix};

/// Angle count for interactive use.
pub const DEFAULT_ANGLES: usize = 720;
/// Angle count used by the verification suites.
pub const VERIFY_ANGLES: usize = 2048;
pub const MIN_ANGLES: usize = 16;

/// Output of [`rank_k_range`].
#[derive(Debug, Clone)]
pub struct RangeReport {
    pub k: usize,
    pub angles: usize,
    pub region: ConvexRegion,
    /// For polygons, the larger of `max |vertex| · (sec(π/m) - 1)` and the
    /// largest vertex lift over its neighbours' chord; zero otherwise. A bound
    /// on the distance to the true set for `k = 1`, an estimate above that.
    pub outer_error_bound: f64,
    /// `(θ_j, λ_k(H_{θ_j}) / 2)` for every grid angle.
    pub support_samples: Vec<(f64, f64)>,
}

impl RangeReport {
    pub fn halfplanes(&self) -> Vec<HalfPlane> {
        self.support_samples
            .iter()
            .map(|&(theta, b)| HalfPlane::new(theta, b))
            .collect()
    }
}

/// `j`-th angle of the uniform `m`-point grid on `[0, 2π)`.
///
/// Grid `m` is a subset of grid `2m` bit-for-bit, so nested sweeps see
/// identical pencils.
pub fn grid_angle(j: usize, m: usize) -> f64 {
    TAU * j as f64 / m as f64
}

/// `e^{iθ} T + e^{-iθ} T*`, Hermitian by construction.
///
/// # Panics
///
/// If `t` is not square.
pub fn pencil(t: &Matrix, theta: f64) -> Matrix {
    assert!(t.is_square(), "pencil of a non-square matrix");
    let n = t.dim();
    let w = C64::from_polar(1.0, theta);
    let mut h = Matrix::zeros(n, n);
    for i in 0..n {
        h[(i, i)] = C64::new(2.0 * (w * t[(i, i)]).re, 0.0);
        for j in i + 1..n {
            let z = w * t[(i, j)] + (w * t[(j, i)]).conj();
            h[(i, j)] = z;
            h[(j, i)] = z.conj();
        }
    }
    h
}

fn check_range_args(t: &Matrix, k: usize, m: usize) -> Result<usize> {
    let n = t.require_square()?;
    t.check_finite()?;
    if k == 0 || k > n {
        return Err(Error::BadRank { k, dim: n });
    }
    if m < MIN_ANGLES {
        return Err(Error::InvalidArgument(format!(
            "angle count {m} below minimum {MIN_ANGLES}"
        )));
    }
    Ok(n)
}

/// `λ_k(H_θ) / 2` at every grid angle.
pub fn support_samples(t: &Matrix, k: usize, m: usize) -> Result<Vec<(f64, f64)>> {
    check_range_args(t, k, m)?;
    (0..m)
        .into_par_iter()
        .map(|j| {
            let theta = grid_angle(j, m);
            let values = hermitian_eigvals(&pencil(t, theta))?;
            Ok((theta, 0.5 * values[k - 1]))
        })
        .collect()
}

/// Outer approximation of `Λ_k(T)` from `m` supporting half-planes.
pub fn rank_k_range(t: &Matrix, k: usize, m: usize) -> Result<RangeReport> {
    let samples = support_samples(t, k, m)?;
    let bound = t.frobenius_norm() + 1.0;
    let planes: Vec<HalfPlane> = samples
        .iter()
        .map(|&(theta, b)| HalfPlane::new(theta, b))
        .collect();
    let region = intersect_halfplanes(&planes, bound);
    let outer_error_bound = match &region {
        ConvexRegion::Polygon(vs) => {
            let disc = region.max_modulus().unwrap_or(0.0) * (1.0 / (PI / m as f64).cos() - 1.0);
            disc.max(local_overshoot(vs, m))
        }
        _ => 0.0,
    };
    Ok(RangeReport {
        k,
        angles: m,
        region,
        outer_error_bound,
        support_samples: samples,
    })
}

/// Overshoot bound from the polygon's own shape.
///
/// Every edge lies on a grid line that touches the true set somewhere along
/// the edge, so a vertex whose boundary turns by one grid step is within its
/// distance from the chord through its neighbours. Vertices turning by more
/// than one step have a grid line through them and lie on the set already.
/// Exact for `k = 1`; for larger `k` a sampled constraint need not touch
/// `Λ_k`, and the value is only an estimate.
fn local_overshoot(vs: &[C64], m: usize) -> f64 {
    let n = vs.len();
    let step = TAU / m as f64;
    let mut worst: f64 = 0.0;
    for i in 0..n {
        let (a, b, c) = (vs[(i + n - 1) % n], vs[i], vs[(i + 1) % n]);
        let turn = ((c - b) / (b - a)).arg().abs();
        if turn > 1.5 * step {
            continue;
        }
        let chord = c - a;
        let len = chord.norm();
        if len == 0.0 {
            continue;
        }
        let lift = ((b - a).conj() * chord).im.abs() / len;
        worst = worst.max(lift);
    }
    worst
}

/// Largest sampled support value of `W(T)`: `max_j λ_1(H_{θ_j}) / 2`.
pub fn numerical_radius(t: &Matrix, m: usize) -> Result<f64> {
    let samples = support_samples(t, 1, m)?;
    Ok(samples
        .iter()
        .map(|&(_, b)| b)
        .fold(f64::NEG_INFINITY, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::support;
    use crate::shift::shift_matrix;
    use std::f64::consts::FRAC_PI_2;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn pencil_of_s2() {
        let s = shift_matrix(2);
        let h0 = pencil(&s, 0.0);
        assert_eq!(h0, Matrix::from_real(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap());

        let h = pencil(&s, FRAC_PI_2);
        let want = Matrix::from_rows(vec![
            vec![c(0.0, 0.0), c(0.0, -1.0)],
            vec![c(0.0, 1.0), c(0.0, 0.0)],
        ])
        .unwrap();
        assert!(h.sub(&want).unwrap().max_abs() < 1e-15);
    }

    #[test]
    fn pencil_of_hermitian_at_zero() {
        let t = Matrix::from_rows(vec![
            vec![c(1.0, 0.0), c(0.5, -0.25)],
            vec![c(0.5, 0.25), c(-2.0, 0.0)],
        ])
        .unwrap();
        assert_eq!(pencil(&t, 0.0), t.scale_real(2.0));
    }

    #[test]
    fn s3_numerical_range_is_disc() {
        let rep = rank_k_range(&shift_matrix(3), 1, 2048).unwrap();
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert!(matches!(rep.region, ConvexRegion::Polygon(_)));
        assert!((rep.region.max_modulus().unwrap() - r).abs() < 5e-6);
        let min_support = (0..360)
            .map(|j| support(&rep.region, j as f64 * TAU / 360.0).unwrap())
            .fold(f64::INFINITY, f64::min);
        assert!((min_support - r).abs() < 5e-6);
        // On a circle the neighbour-chord lift is four times the overshoot.
        let overshoot = r * (1.0 / (PI / 2048.0).cos() - 1.0);
        assert!((rep.outer_error_bound / overshoot - 4.0).abs() < 0.05);
    }

    #[test]
    fn vertices_overshoot_between_grid_angles() {
        let t = shift_matrix(3);
        let m = 64;
        let rep = rank_k_range(&t, 1, m).unwrap();
        let mut worst: f64 = 0.0;
        for j in 0..m {
            let theta = (j as f64 + 0.5) * TAU / m as f64;
            let lambda = hermitian_eigvals(&pencil(&t, theta)).unwrap()[0] / 2.0;
            let w = C64::from_polar(1.0, theta);
            for z in rep.region.vertices() {
                worst = worst.max((w * z).re - lambda);
            }
        }
        assert!(worst > 1e-4, "{worst}");
        assert!(worst <= rep.outer_error_bound);
    }

    #[test]
    fn s4_rank_three_is_empty() {
        let rep = rank_k_range(&shift_matrix(4), 3, 2048).unwrap();
        assert!(rep.region.is_empty());
        assert_eq!(rep.outer_error_bound, 0.0);
    }

    #[test]
    fn diagonal_rank_two_is_segment() {
        let t = Matrix::from_real_diag(&[0.0, 1.0, 2.0, 3.0]);
        let rep = rank_k_range(&t, 2, 2048).unwrap();
        match rep.region {
            ConvexRegion::Segment(a, b) => {
                let (lo, hi) = if a.re < b.re { (a, b) } else { (b, a) };
                assert!((lo - c(1.0, 0.0)).norm() < 1e-6);
                assert!((hi - c(2.0, 0.0)).norm() < 1e-6);
            }
            other => panic!("expected segment, got {other:?}"),
        }
    }

    #[test]
    fn bad_rank_and_angles() {
        let t = shift_matrix(4);
        assert!(matches!(
            rank_k_range(&t, 0, 64),
            Err(Error::BadRank { .. })
        ));
        assert!(matches!(
            rank_k_range(&t, 5, 64),
            Err(Error::BadRank { .. })
        ));
        assert!(matches!(
            rank_k_range(&t, 1, 8),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn numerical_radius_cases() {
        for n in 2..=12 {
            let w = numerical_radius(&shift_matrix(n), 2048).unwrap();
            let want = (PI / (n as f64 + 1.0)).cos();
            assert!((w - want).abs() < 5e-6, "n = {n}: {w} vs {want}");
        }
        let d = Matrix::from_real_diag(&[3.0, -1.0]);
        assert!((numerical_radius(&d, 720).unwrap() - 3.0).abs() < 1e-12);

        let scaled = numerical_radius(&shift_matrix(3).scale_real(0.7), 2048).unwrap();
        let base = numerical_radius(&shift_matrix(3), 2048).unwrap();
        assert!((scaled - 0.7 * base).abs() < 1e-12);
        assert!((scaled - 0.494975).abs() < 5e-6);
    }
}
