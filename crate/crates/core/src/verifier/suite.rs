use std::f64::consts::TAU;

use num_complex::Complex64 as C64;
use rand::Rng;

use super::{
    check_hermitian, check_normal, dilation_inclusion_check, haagerup_bound_check,
    normal_eigenvalues, PropertyChecks, PropertyReport, NORMAL_MAX_DIM,
};
use crate::dilation::{nilpotency_index, CONTRACTION_TOL};
use crate::error::{Error, Result};
use crate::linalg::{spectral_norm, Matrix, HERMITIAN_TOL};
use crate::random::{random_isometry, random_matrix, random_unitary, seeded, unit_disc_point};

/// Every applicable check on `t` at rank `k`, randomised from `seed`.
///
/// P1–P6 always run. The Hermitian and normal oracles run when `t` has that
/// structure; the Haagerup bound runs when `t` is nilpotent, and the
/// dilation bound when it is also a contraction.
pub fn run_property_suite(
    t: &Matrix,
    k: usize,
    seed: u64,
    angles: usize,
) -> Result<Vec<PropertyReport>> {
    let n = t.require_square()?;
    t.check_finite()?;
    if k == 0 || k > n {
        return Err(Error::BadRank { k, dim: n });
    }
    let checks = PropertyChecks::new(angles);
    let mut rng = seeded(seed);
    let a = C64::from_polar(rng.random_range(0.5..2.0), rng.random_range(0.0..TAU));
    let b = unit_disc_point(&mut rng);
    let other = random_matrix(&mut rng, n);
    let u = random_unitary(&mut rng, n);
    let cols = rng.random_range(k..=n);
    let iso = random_isometry(&mut rng, n, cols);

    let mut out = vec![
        checks.check_affine(t, k, a, b)?,
        checks.check_adjoint(t, k)?,
        checks.check_direct_sum(t, &other, k)?,
        checks.check_unitary(t, &u, k)?,
        checks.check_compression(t, &iso, k)?,
        checks.check_nesting(t, n)?,
    ];

    let scale = t.frobenius_norm().max(1.0);
    if t.hermitian_defect() <= HERMITIAN_TOL * scale {
        out.push(check_hermitian(t, k, angles)?);
    } else if (2..=NORMAL_MAX_DIM).contains(&n) && normal_eigenvalues(t)?.is_some() {
        out.push(check_normal(t, k, angles)?);
    }
    if nilpotency_index(t).is_ok() {
        out.push(haagerup_bound_check(t, angles)?.report);
        if spectral_norm(t)? <= 1.0 + CONTRACTION_TOL {
            out.push(dilation_inclusion_check(t, angles)?.report);
        }
    }
    for rep in &mut out {
        rep.digest.seed = Some(seed);
    }
    Ok(out)
}
