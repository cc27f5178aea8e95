use std::f64::consts::{PI, TAU};

use itertools::Itertools;
use num_complex::Complex64 as C64;
use rand::Rng;

use super::{InputDigest, PropertyId, PropertyReport};
use crate::dilation::{build_dilation, nilpotency_index, DilationPack};
use crate::engine::{numerical_radius, pencil, rank_k_range, RangeReport};
use crate::error::{Error, Result};
use crate::geometry::{convex_hull, hausdorff, intersect_halfplanes, ConvexRegion, POINT_TOL};
use crate::linalg::{hermitian_eig, hermitian_eigvals, spectral_norm, Matrix};
use crate::random::{random_unit_vector, seeded};
use crate::shift::rho;

/// Tolerance of the Hermitian interval oracle.
pub const HERMITIAN_TOL: f64 = 1e-6;
/// Tolerance of the normal hull-intersection oracle.
pub const NORMAL_TOL: f64 = 1e-4;
/// Largest dimension the normal oracle enumerates subsets for.
pub const NORMAL_MAX_DIM: usize = 8;
/// Slack on the dilation disc bound.
pub const INCLUSION_TOL: f64 = 5e-6;
/// Loose slack of the Monte-Carlo smoke test on top of twice the outer error.
pub const MONTE_CARLO_SLACK: f64 = 0.02;
const HAAGERUP_TOL: f64 = 1e-6;
const NORMALITY_TOL: f64 = 1e-10;
const DILATION_RESIDUAL_TOL: f64 = 1e-10;
const POWER_STEPS: usize = 24;
const BIAS_STREAM: u64 = 0x9e37_79b9_7f4a_7c15;

fn gap_or_infinite(a: &ConvexRegion, b: &ConvexRegion) -> f64 {
    match (a.is_empty(), b.is_empty()) {
        (true, true) => 0.0,
        (false, false) => hausdorff(a, b).expect("both non-empty"),
        _ => f64::INFINITY,
    }
}

/// `Λ_k` of a Hermitian matrix: the interval between the k-th smallest and
/// the k-th largest eigenvalue, empty once they cross.
pub fn hermitian_oracle(h: &Matrix, k: usize) -> Result<ConvexRegion> {
    let n = h.require_square()?;
    if k == 0 || k > n {
        return Err(Error::BadRank { k, dim: n });
    }
    let values = hermitian_eigvals(h)?;
    let hi = values[k - 1];
    let lo = values[n - k];
    let width = hi - lo;
    let scale = values[0].abs().max(values[n - 1].abs()).max(1.0);
    Ok(if width.abs() <= POINT_TOL * scale {
        ConvexRegion::Point(C64::new(0.5 * (hi + lo), 0.0))
    } else if width < 0.0 {
        ConvexRegion::Empty
    } else {
        ConvexRegion::Segment(C64::new(lo, 0.0), C64::new(hi, 0.0))
    })
}

/// Engine against [`hermitian_oracle`].
pub fn check_hermitian(h: &Matrix, k: usize, angles: usize) -> Result<PropertyReport> {
    let oracle = hermitian_oracle(h, k)?;
    let engine = rank_k_range(h, k, angles)?;
    Ok(PropertyReport::new(
        PropertyId::Hermitian,
        gap_or_infinite(&engine.region, &oracle),
        HERMITIAN_TOL,
        InputDigest::new(vec![h.rows()], Some(k)),
    ))
}

/// `Λ_k` of a normal matrix with eigenvalues `eigs`: the intersection of the
/// convex hulls of all `(n-k+1)`-element subsets.
pub fn normal_oracle(eigs: &[C64], k: usize) -> Result<ConvexRegion> {
    let n = eigs.len();
    if !(2..=NORMAL_MAX_DIM).contains(&n) {
        return Err(Error::TooLarge(format!(
            "normal oracle needs 2 <= n <= {NORMAL_MAX_DIM}, got {n}"
        )));
    }
    if k == 0 || k > n {
        return Err(Error::BadRank { k, dim: n });
    }
    let bound = eigs.iter().map(|z| z.norm()).fold(0.0, f64::max) + 1.0;
    let planes: Vec<_> = eigs
        .iter()
        .copied()
        .combinations(n - k + 1)
        .flat_map(|subset| convex_hull(&subset).to_halfplanes())
        .collect();
    Ok(intersect_halfplanes(&planes, bound))
}

/// Eigenvalues of a normal matrix, or `None` if `T T* ≠ T* T`.
///
/// The Hermitian and skew parts of a normal matrix commute, so the
/// eigenvectors of a generic real combination of them diagonalize `T`.
pub fn normal_eigenvalues(t: &Matrix) -> Result<Option<Vec<C64>>> {
    let n = t.require_square()?;
    let scale = t.frobenius_norm().max(1.0);
    let tt = t.matmul(&t.adjoint())?;
    let ttt = t.adjoint().matmul(t)?;
    if tt.sub(&ttt)?.frobenius_norm() > NORMALITY_TOL * scale * scale {
        return Ok(None);
    }
    let re = t.add(&t.adjoint())?.scale_real(0.5);
    let im = t.sub(&t.adjoint())?.scale(C64::new(0.0, -0.5));
    let mix = re.add(&im.scale_real(0.618_033_988_749_895))?;
    let eig = hermitian_eig(&mix)?;
    let eigs = (0..n)
        .map(|j| {
            let v: Vec<C64> = (0..n).map(|i| eig.vectors[(i, j)]).collect();
            let tv = t.mul_vec(&v)?;
            Ok(v.iter().zip(&tv).map(|(a, b)| a.conj() * b).sum())
        })
        .collect::<Result<_>>()?;
    Ok(Some(eigs))
}

/// Engine at `angles` against [`normal_oracle`] on the eigenvalues of `t`.
pub fn check_normal(t: &Matrix, k: usize, angles: usize) -> Result<PropertyReport> {
    let eigs = normal_eigenvalues(t)?
        .ok_or_else(|| Error::InvalidArgument("matrix is not normal".into()))?;
    let oracle = normal_oracle(&eigs, k)?;
    let engine = rank_k_range(t, k, angles)?;
    Ok(PropertyReport::new(
        PropertyId::Normal,
        gap_or_infinite(&engine.region, &oracle),
        NORMAL_TOL,
        InputDigest::new(vec![t.rows()], Some(k)),
    ))
}

fn rayleigh(t: &Matrix, x: &[C64]) -> Result<C64> {
    let tx = t.mul_vec(x)?;
    Ok(x.iter().zip(&tx).map(|(a, b)| a.conj() * b).sum())
}

/// Rayleigh quotients `x* T x` at `samples` uniformly random unit vectors.
pub fn sampled_numerical_range(t: &Matrix, samples: usize, seed: u64) -> Result<Vec<C64>> {
    let n = t.require_square()?;
    let mut rng = seeded(seed);
    (0..samples)
        .map(|_| rayleigh(t, &random_unit_vector(&mut rng, n)))
        .collect()
}

/// Rayleigh quotients at unit vectors pushed towards the boundary of `W(T)`.
///
/// Each sample starts from a uniform unit vector and applies a random number
/// (0 to 24) of power steps with `H_φ + c I` for a random direction `φ`,
/// where `c = ||H_φ||_F` keeps the shifted pencil positive semidefinite.
pub fn boundary_biased_range(t: &Matrix, samples: usize, seed: u64) -> Result<Vec<C64>> {
    let n = t.require_square()?;
    let mut rng = seeded(seed);
    (0..samples)
        .map(|_| {
            let phi = rng.random_range(0.0..TAU);
            let steps = rng.random_range(0..=POWER_STEPS);
            let h = pencil(t, phi);
            let h = h.shift_diag(C64::new(h.frobenius_norm(), 0.0));
            let mut x = random_unit_vector(&mut rng, n);
            for _ in 0..steps {
                let y = h.mul_vec(&x)?;
                let norm = y.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
                if norm == 0.0 {
                    break;
                }
                x = y.into_iter().map(|z| z / norm).collect();
            }
            rayleigh(t, &x)
        })
        .collect()
}

/// Smoke test: Hausdorff distance between the computed `W(T)` and the convex
/// hull of `samples` Rayleigh quotients, half from uniform unit vectors and
/// half from [`boundary_biased_range`].
pub fn monte_carlo_check(
    t: &Matrix,
    samples: usize,
    seed: u64,
    angles: usize,
) -> Result<(PropertyReport, RangeReport)> {
    let range = rank_k_range(t, 1, angles)?;
    let uniform = samples / 2;
    let mut points = sampled_numerical_range(t, uniform, seed)?;
    points.extend(boundary_biased_range(
        t,
        samples - uniform,
        seed ^ BIAS_STREAM,
    )?);
    let hull = convex_hull(&points);
    let report = PropertyReport::new(
        PropertyId::MonteCarlo,
        gap_or_infinite(&range.region, &hull),
        2.0 * range.outer_error_bound + MONTE_CARLO_SLACK,
        InputDigest::new(vec![t.rows()], Some(1)).with_seed(Some(seed)),
    );
    Ok((report, range))
}

#[derive(Debug, Clone)]
pub struct HaagerupReport {
    pub report: PropertyReport,
    /// Sampled numerical radius.
    pub radius: f64,
    /// `||T||_2 cos(π/(n+1))` with `n` the nilpotency index.
    pub bound: f64,
    /// Radius within `1e-6` of the bound.
    pub equality: bool,
}

/// `ω(T) <= ||T||_2 cos(π/(n+1))` for `T` nilpotent of index `n`.
pub fn haagerup_bound_check(t: &Matrix, angles: usize) -> Result<HaagerupReport> {
    let d = t.require_square()?;
    let n = nilpotency_index(t)?;
    let radius = numerical_radius(t, angles)?;
    let bound = spectral_norm(t)? * (PI / (n as f64 + 1.0)).cos();
    let report = PropertyReport::new(
        PropertyId::Haagerup,
        (radius - bound).max(0.0),
        HAAGERUP_TOL,
        InputDigest::new(vec![d], None),
    );
    Ok(HaagerupReport {
        report,
        radius,
        bound,
        equality: (radius - bound).abs() <= HAAGERUP_TOL,
    })
}

/// One rank of a [`DilationCheck`].
#[derive(Debug, Clone)]
pub struct InclusionSample {
    pub k: usize,
    /// `cos(ρ(k,r)π/(n+1))`; negative when the bounding disc is empty.
    pub bound: f64,
    /// Largest vertex modulus, `None` for an empty range.
    pub max_modulus: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct DilationCheck {
    pub report: PropertyReport,
    pub pack: DilationPack,
    pub samples: Vec<InclusionSample>,
}

/// Dilation residuals plus `Λ_k(T) ⊆ {|z| <= cos(ρ(k,r)π/(n+1))}` for every `k`.
///
/// When `ρ(k,r) > ⌊(n+1)/2⌋` only `|z| <= 0` is asserted, and emptiness is
/// asserted only for `k > n·r`. The discrepancy is the largest modulus excess,
/// or `+∞` if a residual exceeds `1e-10 · dim`.
pub fn dilation_inclusion_check(t: &Matrix, angles: usize) -> Result<DilationCheck> {
    let d = t.require_square()?;
    let pack = build_dilation(t)?;
    let (n, r) = (pack.n, pack.r.max(1));
    let residual_limit = DILATION_RESIDUAL_TOL * d as f64;
    let mut worst: f64 = 0.0;
    if pack.isometry_residual > residual_limit || pack.intertwine_residual > residual_limit {
        worst = f64::INFINITY;
    }
    let mut samples = Vec::with_capacity(d);
    for k in 1..=d {
        let range = rank_k_range(t, k, angles)?;
        let bound = (rho(k, r) as f64 * PI / (n as f64 + 1.0)).cos();
        let max_modulus = range.region.max_modulus();
        if let Some(m) = max_modulus {
            worst = worst.max(m - bound.max(0.0));
            if k > n * r {
                worst = f64::INFINITY;
            }
        }
        samples.push(InclusionSample {
            k,
            bound,
            max_modulus,
        });
    }
    let report = PropertyReport::new(
        PropertyId::Thm14,
        worst,
        INCLUSION_TOL,
        InputDigest::new(vec![d], None),
    );
    Ok(DilationCheck {
        report,
        pack,
        samples,
    })
}
