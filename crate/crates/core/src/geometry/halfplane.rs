use std::f64::consts::TAU;

use num_complex::Complex64 as C64;

/// Closed half-plane `{z : Re(e^{iθ} z) <= offset}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPlane {
    theta: f64,
    offset: f64,
}

/// Reduces an angle to `[0, 2π)`.
pub fn normalize_angle(theta: f64) -> f64 {
    let t = theta.rem_euclid(TAU);
    if t >= TAU {
        0.0
    } else {
        t
    }
}

impl HalfPlane {
    pub fn new(theta: f64, offset: f64) -> Self {
        debug_assert!(theta.is_finite() && offset.is_finite());
        HalfPlane {
            theta: normalize_angle(theta),
            offset,
        }
    }

    /// Half-plane whose boundary passes through `through` with unit outward normal `normal`.
    pub fn from_normal(normal: C64, through: C64) -> Self {
        let nu = normal / normal.norm();
        HalfPlane::new(-nu.arg(), (nu.conj() * through).re)
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    /// `e^{iθ}`.
    pub fn phasor(&self) -> C64 {
        C64::from_polar(1.0, self.theta)
    }

    /// Signed excess `Re(e^{iθ} z) - offset`; non-positive inside.
    pub fn excess(&self, z: C64) -> f64 {
        (self.phasor() * z).re - self.offset
    }

    pub fn contains(&self, z: C64, slack: f64) -> bool {
        self.excess(z) <= slack
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn angle_normalization() {
        assert_eq!(HalfPlane::new(-PI / 2.0, 0.0).theta(), 1.5 * PI);
        assert_eq!(HalfPlane::new(TAU, 0.0).theta(), 0.0);
        assert_eq!(HalfPlane::new(-1e-300, 0.0).theta(), 0.0);
    }

    #[test]
    fn from_normal_matches_definition() {
        let h = HalfPlane::from_normal(C64::new(0.0, 1.0), C64::new(3.0, 2.0));
        // Im(z) <= 2.
        assert!(h.contains(C64::new(-10.0, 1.9), 0.0));
        assert!(!h.contains(C64::new(0.0, 2.1), 0.0));
        assert!(h.excess(C64::new(5.0, 2.0)).abs() < 1e-15);
    }
}
