//! The finite shift `S_n`, its closed-form rank-k ranges, and the replicated
//! model `I_r ⊗ S_n` that bounds nilpotent contractions.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Radii at or below this collapse to [`ClosedFormRange::Point`].
pub const DISC_COLLAPSE_TOL: f64 = 1e-9;

/// Closed form of a rank-k range that is a centred disc, a point or empty.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClosedFormRange {
    /// Closed disc `{|z| <= radius}` with `radius > DISC_COLLAPSE_TOL`.
    Disc(f64),
    /// The origin.
    Point,
    Empty,
}

impl ClosedFormRange {
    fn from_radius(radius: f64) -> Self {
        if radius > DISC_COLLAPSE_TOL {
            ClosedFormRange::Disc(radius)
        } else {
            ClosedFormRange::Point
        }
    }

    /// Radius of the disc, zero for a point, `None` when empty.
    pub fn radius(&self) -> Option<f64> {
        match *self {
            ClosedFormRange::Disc(r) => Some(r),
            ClosedFormRange::Point => Some(0.0),
            ClosedFormRange::Empty => None,
        }
    }
}

/// `n×n` matrix with ones on the first subdiagonal.
pub fn shift_matrix(n: usize) -> Matrix {
    Matrix::from_fn(n, n, |i, j| {
        if i == j + 1 {
            C64::new(1.0, 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    })
}

/// Largest rank with a non-empty range for an `n`-dimensional shift, `⌊(n+1)/2⌋`.
pub fn half_index(n: usize) -> usize {
    n.div_ceil(2)
}

fn disc_radius(index: usize, n: usize) -> f64 {
    (index as f64 * PI / (n as f64 + 1.0)).cos()
}

/// `Λ_k(S_n)`: the disc of radius `cos(kπ/(n+1))` when `k <= ⌊(n+1)/2⌋`, else empty.
pub fn closed_form_shift_range(n: usize, k: usize) -> Result<ClosedFormRange> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::BadRank { k, dim: n });
    }
    if k > half_index(n) {
        Ok(ClosedFormRange::Empty)
    } else {
        Ok(ClosedFormRange::from_radius(disc_radius(k, n)))
    }
}

/// Position of the k-th largest term once every value is repeated `r` times:
/// `k / r` when `r` divides `k`, otherwise `⌊k / r⌋ + 1`.
pub fn rho(k: usize, r: usize) -> usize {
    assert!(r >= 1, "multiplicity must be positive");
    k.div_ceil(r)
}

/// k-th largest term (1-based) of `values` with each entry repeated `r` times.
///
/// `values` must be strictly decreasing.
pub fn kth_of_replicated(values: &[f64], r: usize, k: usize) -> Result<f64> {
    if r == 0 {
        return Err(Error::InvalidArgument(
            "multiplicity must be positive".into(),
        ));
    }
    if values.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::InvalidArgument(
            "values must be strictly decreasing".into(),
        ));
    }
    let len = values.len() * r;
    if k == 0 || k > len {
        return Err(Error::BadIndex { k, len });
    }
    Ok(values[rho(k, r) - 1])
}

/// `Λ_k(I_r ⊗ S_n)`, which equals `Λ_k(I_r ⊗ S_n*)`.
pub fn closed_form_replicated_range(n: usize, r: usize, k: usize) -> Result<ClosedFormRange> {
    if n == 0 || r == 0 || k == 0 {
        return Err(Error::InvalidArgument(format!(
            "need n, r, k >= 1 (got n = {n}, r = {r}, k = {k})"
        )));
    }
    if k > n * r {
        return Ok(ClosedFormRange::Empty);
    }
    let p = rho(k, r);
    if p > half_index(n) {
        Ok(ClosedFormRange::Empty)
    } else {
        Ok(ClosedFormRange::from_radius(disc_radius(p, n)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn shift_shapes() {
        assert_eq!(shift_matrix(1), Matrix::zeros(1, 1));
        assert_eq!(
            shift_matrix(2),
            Matrix::from_real(&[&[0.0, 0.0], &[1.0, 0.0]]).unwrap()
        );
        for n in 1..=8 {
            let s = shift_matrix(n);
            assert_eq!(s.pow(n as u32).unwrap(), Matrix::zeros(n, n));
            if n > 1 {
                assert_ne!(s.pow(n as u32 - 1).unwrap(), Matrix::zeros(n, n));
            }
        }
    }

    #[test]
    fn shift_closed_forms() {
        match closed_form_shift_range(4, 2).unwrap() {
            ClosedFormRange::Disc(r) => {
                assert!((r - (2.0 * PI / 5.0).cos()).abs() < 1e-15);
                assert!((r - 0.309017).abs() < 1e-6);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            closed_form_shift_range(3, 2).unwrap(),
            ClosedFormRange::Point
        );
        assert_eq!(
            closed_form_shift_range(4, 3).unwrap(),
            ClosedFormRange::Empty
        );
        assert!(matches!(
            closed_form_shift_range(4, 5),
            Err(Error::BadRank { k: 5, dim: 4 })
        ));
    }

    #[test]
    fn rho_branches() {
        assert_eq!(rho(4, 2), 2);
        assert_eq!(rho(3, 2), 2);
        for k in 1..50 {
            assert_eq!(rho(k, 1), k);
        }
    }

    #[test]
    fn replicated_kth() {
        assert_eq!(kth_of_replicated(&[5.0, 3.0], 2, 3).unwrap(), 3.0);
        assert_eq!(kth_of_replicated(&[9.0, 4.0, 1.0], 3, 7).unwrap(), 1.0);
        let vals = [4.0, 2.5, -1.0];
        for k in 1..=3 {
            assert_eq!(kth_of_replicated(&vals, 1, k).unwrap(), vals[k - 1]);
        }
        assert!(matches!(
            kth_of_replicated(&vals, 2, 7),
            Err(Error::BadIndex { k: 7, len: 6 })
        ));
        assert!(kth_of_replicated(&[1.0, 1.0], 2, 1).is_err());
    }

    #[test]
    fn replicated_closed_forms() {
        match closed_form_replicated_range(3, 2, 2).unwrap() {
            ClosedFormRange::Disc(r) => {
                assert!((r - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15)
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            closed_form_replicated_range(3, 2, 3).unwrap(),
            ClosedFormRange::Point
        );
        assert_eq!(
            closed_form_replicated_range(3, 1, 4).unwrap(),
            ClosedFormRange::Empty
        );
        // r = 1 recovers the plain shift
        for n in 1..=9 {
            for k in 1..=n {
                assert_eq!(
                    closed_form_replicated_range(n, 1, k).unwrap(),
                    closed_form_shift_range(n, k).unwrap()
                );
            }
        }
    }

    proptest! {
        #[test]
        fn rho_is_replicated_position(k in 1usize..200, r in 1usize..20) {
            let p = rho(k, r);
            prop_assert!((p - 1) * r < k && k <= p * r);
        }
    }
}
