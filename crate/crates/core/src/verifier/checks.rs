use num_complex::Complex64 as C64;

use super::{InputDigest, PropertyId, PropertyReport};
use crate::engine::{grid_angle, rank_k_range, RangeReport, VERIFY_ANGLES};
use crate::error::{Error, Result};
use crate::geometry::{hausdorff, support, ConvexRegion};
use crate::linalg::{gram, Matrix};

/// Slack on containment and nesting comparisons.
pub const CONTAINMENT_SLACK: f64 = 1e-8;
const UNITARY_TOL: f64 = 1e-10;

/// `10 · (sum of outer-approximation bounds) + 1e-8`.
pub fn equality_tolerance(errors: &[f64]) -> f64 {
    10.0 * errors.iter().sum::<f64>() + CONTAINMENT_SLACK
}

/// Empty matches empty; empty against non-empty is an infinite discrepancy.
fn region_gap(a: &ConvexRegion, b: &ConvexRegion) -> f64 {
    match (a.is_empty(), b.is_empty()) {
        (true, true) => 0.0,
        (false, false) => hausdorff(a, b).expect("both non-empty"),
        _ => f64::INFINITY,
    }
}

/// Largest distance from a vertex of `inner` to `outer`.
fn containment_excess(inner: &ConvexRegion, outer: &ConvexRegion) -> f64 {
    if inner.is_empty() {
        return 0.0;
    }
    if outer.is_empty() {
        return f64::INFINITY;
    }
    inner
        .vertices()
        .into_iter()
        .map(|v| outer.distance_to(v).expect("non-empty"))
        .fold(0.0, f64::max)
}

/// Runs the P1–P6 property checks with a fixed angle count.
#[derive(Debug, Clone, Copy)]
pub struct PropertyChecks {
    pub angles: usize,
}

impl Default for PropertyChecks {
    fn default() -> Self {
        PropertyChecks {
            angles: VERIFY_ANGLES,
        }
    }
}

impl PropertyChecks {
    pub fn new(angles: usize) -> Self {
        PropertyChecks { angles }
    }

    pub fn range(&self, t: &Matrix, k: usize) -> Result<RangeReport> {
        rank_k_range(t, k, self.angles)
    }

    /// P1: `Λ_k(aT + bI)` against the affine image `aΛ_k(T) + b`.
    pub fn check_affine(&self, t: &Matrix, k: usize, a: C64, b: C64) -> Result<PropertyReport> {
        let direct = self.range(&t.scale(a).shift_diag(b), k)?;
        let base = self.range(t, k)?;
        let mapped = base.region.map_affine(a, b);
        let tol =
            equality_tolerance(&[direct.outer_error_bound, a.norm() * base.outer_error_bound]);
        Ok(PropertyReport::new(
            PropertyId::P1,
            region_gap(&direct.region, &mapped),
            tol,
            InputDigest::new(vec![t.rows()], Some(k)),
        ))
    }

    /// P2: `Λ_k(T*)` against the conjugate of `Λ_k(T)`.
    pub fn check_adjoint(&self, t: &Matrix, k: usize) -> Result<PropertyReport> {
        let adj = self.range(&t.adjoint(), k)?;
        let base = self.range(t, k)?;
        let tol = equality_tolerance(&[adj.outer_error_bound, base.outer_error_bound]);
        Ok(PropertyReport::new(
            PropertyId::P2,
            region_gap(&adj.region, &base.region.conj()),
            tol,
            InputDigest::new(vec![t.rows()], Some(k)),
        ))
    }

    /// P3: both summands' ranges lie inside the range of the direct sum.
    pub fn check_direct_sum(&self, t: &Matrix, s: &Matrix, k: usize) -> Result<PropertyReport> {
        let big = self.range(&t.direct_sum(s), k)?;
        let mut errors = vec![big.outer_error_bound];
        let mut excess: f64 = 0.0;
        for part in [t, s] {
            // Λ_k of a summand smaller than k is undefined and contributes nothing.
            if part.rows() < k {
                continue;
            }
            let r = self.range(part, k)?;
            errors.push(r.outer_error_bound);
            excess = excess.max(containment_excess(&r.region, &big.region));
        }
        Ok(PropertyReport::new(
            PropertyId::P3,
            excess,
            equality_tolerance(&errors),
            InputDigest::new(vec![t.rows(), s.rows()], Some(k)),
        ))
    }

    /// P4: invariance under unitary similarity.
    pub fn check_unitary(&self, t: &Matrix, u: &Matrix, k: usize) -> Result<PropertyReport> {
        let n = t.require_square()?;
        if u.rows() != n || u.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "unitary is {}x{}, matrix is {n}x{n}",
                u.rows(),
                u.cols()
            )));
        }
        let defect = gram(u).sub(&Matrix::identity(n))?.frobenius_norm();
        if defect > UNITARY_TOL {
            return Err(Error::NotUnitary(defect));
        }
        let similar = u.adjoint().matmul(t)?.matmul(u)?;
        let lhs = self.range(&similar, k)?;
        let rhs = self.range(t, k)?;
        let tol = equality_tolerance(&[lhs.outer_error_bound, rhs.outer_error_bound]);
        Ok(PropertyReport::new(
            PropertyId::P4,
            region_gap(&lhs.region, &rhs.region),
            tol,
            InputDigest::new(vec![n], Some(k)),
        ))
    }

    /// P5: the range of the compression `iso* T iso` lies inside the range of `T`.
    pub fn check_compression(&self, t: &Matrix, iso: &Matrix, k: usize) -> Result<PropertyReport> {
        let n = t.require_square()?;
        if iso.rows() != n {
            return Err(Error::BadIsometry(format!(
                "isometry has {} rows, matrix has dimension {n}",
                iso.rows()
            )));
        }
        if iso.cols() < k {
            return Err(Error::BadIsometry(format!(
                "{} columns cannot carry a rank-{k} range",
                iso.cols()
            )));
        }
        let defect = gram(iso)
            .sub(&Matrix::identity(iso.cols()))?
            .frobenius_norm();
        if defect > UNITARY_TOL {
            return Err(Error::BadIsometry(format!(
                "columns not orthonormal: {defect:e}"
            )));
        }
        let compressed = iso.adjoint().matmul(t)?.matmul(iso)?;
        let small = self.range(&compressed, k)?;
        let big = self.range(t, k)?;
        Ok(PropertyReport::new(
            PropertyId::P5,
            containment_excess(&small.region, &big.region),
            equality_tolerance(&[small.outer_error_bound, big.outer_error_bound]),
            InputDigest::new(vec![n, iso.cols()], Some(k)),
        ))
    }

    /// P6: support of `Λ_{k+1}` never exceeds support of `Λ_k` on the grid.
    pub fn check_nesting(&self, t: &Matrix, k_max: usize) -> Result<PropertyReport> {
        let n = t.require_square()?;
        if k_max == 0 || k_max > n {
            return Err(Error::BadRank { k: k_max, dim: n });
        }
        let regions: Vec<ConvexRegion> = (1..=k_max)
            .map(|k| self.range(t, k).map(|r| r.region))
            .collect::<Result<_>>()?;
        let mut excess: f64 = 0.0;
        for pair in regions.windows(2) {
            let (outer, inner) = (&pair[0], &pair[1]);
            if inner.is_empty() {
                continue;
            }
            if outer.is_empty() {
                excess = f64::INFINITY;
                break;
            }
            for j in 0..self.angles {
                let theta = grid_angle(j, self.angles);
                excess = excess.max(support(inner, theta)? - support(outer, theta)?);
            }
        }
        Ok(PropertyReport::new(
            PropertyId::P6,
            excess,
            CONTAINMENT_SLACK,
            InputDigest::new(vec![n], Some(k_max)),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{
        random_householder, random_isometry, random_matrix, random_phases, seeded,
    };
    use crate::shift::shift_matrix;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn affine_identity_map_is_exact() {
        let t = random_matrix(&mut seeded(1), 4);
        let rep = PropertyChecks::default()
            .check_affine(&t, 1, c(1.0, 0.0), c(0.0, 0.0))
            .unwrap();
        assert!(rep.pass);
        assert!(rep.discrepancy <= 1e-12);
    }

    #[test]
    fn affine_image_of_shift_disc() {
        let checks = PropertyChecks::default();
        let s = shift_matrix(4);
        let rep = checks
            .check_affine(&s, 1, c(2.0, 0.0), c(0.0, 1.0))
            .unwrap();
        assert!(rep.pass, "{rep}");
        let direct = checks
            .range(&s.scale_real(2.0).shift_diag(c(0.0, 1.0)), 1)
            .unwrap();
        let want = 2.0 * (PI / 5.0).cos();
        let far = direct
            .region
            .vertices()
            .iter()
            .map(|z| (z - c(0.0, 1.0)).norm())
            .fold(0.0, f64::max);
        assert!((far - want).abs() < 5e-6);
    }

    #[test]
    fn affine_rotation_of_random_matrix() {
        let t = random_matrix(&mut seeded(2), 4);
        let rep = PropertyChecks::default()
            .check_affine(&t, 1, C64::from_polar(1.0, PI / 3.0), c(0.0, 0.0))
            .unwrap();
        assert!(rep.pass, "{rep}");
    }

    #[test]
    fn adjoint_cases() {
        let checks = PropertyChecks::default();
        let h =
            Matrix::from_real(&[&[1.0, 0.5, 0.0], &[0.5, -1.0, 0.2], &[0.0, 0.2, 0.3]]).unwrap();
        let rep = checks.check_adjoint(&h, 1).unwrap();
        assert!(rep.discrepancy <= 1e-9, "{rep}");
        let rep = checks.check_adjoint(&shift_matrix(3), 1).unwrap();
        assert!(rep.discrepancy <= 5e-6, "{rep}");
        let rep = checks
            .check_adjoint(&random_matrix(&mut seeded(3), 4), 2)
            .unwrap();
        assert!(rep.pass, "{rep}");
    }

    #[test]
    fn direct_sum_cases() {
        let checks = PropertyChecks::default();
        let t = random_matrix(&mut seeded(4), 3);
        assert!(checks.check_direct_sum(&t, &t, 1).unwrap().pass);
        assert!(
            checks
                .check_direct_sum(&shift_matrix(3), &shift_matrix(5), 1)
                .unwrap()
                .pass
        );
        let s = random_matrix(&mut seeded(5), 3);
        assert!(checks.check_direct_sum(&t, &s, 1).unwrap().pass);
    }

    #[test]
    fn unitary_cases() {
        let checks = PropertyChecks::default();
        let mut rng = seeded(6);
        let t = random_matrix(&mut rng, 4);
        let rep = checks.check_unitary(&t, &Matrix::identity(4), 2).unwrap();
        assert_eq!(rep.discrepancy, 0.0);

        let s = shift_matrix(5);
        let rep = checks
            .check_unitary(&s, &random_phases(&mut rng, 5), 1)
            .unwrap();
        assert!(rep.discrepancy <= 5e-6, "{rep}");

        let rep = checks
            .check_unitary(&t, &random_householder(&mut rng, 4), 2)
            .unwrap();
        assert!(rep.pass, "{rep}");

        let not_unitary = Matrix::identity(4).scale_real(1.1);
        assert!(matches!(
            checks.check_unitary(&t, &not_unitary, 1),
            Err(Error::NotUnitary(_))
        ));
    }

    #[test]
    fn compression_cases() {
        let checks = PropertyChecks::default();
        let mut rng = seeded(7);
        let t = random_matrix(&mut rng, 5);
        let rep = checks
            .check_compression(&t, &Matrix::identity(5), 2)
            .unwrap();
        assert_eq!(rep.discrepancy, 0.0);

        let first3 = Matrix::identity(5).leading_columns(3);
        assert!(
            checks
                .check_compression(&shift_matrix(5), &first3, 1)
                .unwrap()
                .pass
        );

        let iso = random_isometry(&mut rng, 5, 3);
        assert!(checks.check_compression(&t, &iso, 1).unwrap().pass);

        assert!(matches!(
            checks.check_compression(&t, &iso, 4),
            Err(Error::BadIsometry(_))
        ));
        assert!(matches!(
            checks.check_compression(&t, &iso.scale_real(2.0), 1),
            Err(Error::BadIsometry(_))
        ));
    }

    #[test]
    fn nesting_cases() {
        let checks = PropertyChecks::default();
        assert!(checks.check_nesting(&shift_matrix(6), 3).unwrap().pass);
        let d = Matrix::from_real_diag(&[1.0, 2.0, 3.0, 4.0, 5.0]);
        assert!(checks.check_nesting(&d, 2).unwrap().pass);
        let t = random_matrix(&mut seeded(8), 5);
        assert!(checks.check_nesting(&t, 5).unwrap().pass);
    }

    #[test]
    fn equality_checks_are_symmetric() {
        let checks = PropertyChecks::default();
        let mut rng = seeded(9);
        let t = random_matrix(&mut rng, 4);
        let u = random_householder(&mut rng, 4);
        let similar = u.adjoint().matmul(&t).unwrap().matmul(&u).unwrap();
        let forward = checks.check_unitary(&t, &u, 1).unwrap();
        let backward = checks.check_unitary(&similar, &u.adjoint(), 1).unwrap();
        // backward conjugates back to t up to rounding
        assert!((forward.discrepancy - backward.discrepancy).abs() <= 1e-12);
    }
}
