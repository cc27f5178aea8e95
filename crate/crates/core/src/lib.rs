//! Rank-k numerical ranges of complex matrices.
//!
//! [`engine::rank_k_range`] computes an outer polygonal approximation of
//! `Λ_k(T) = {λ : PTP = λP for some rank-k projection P}` from the k-th
//! eigenvalues of the Hermitian pencil `e^{iθ}T + e^{-iθ}T*`. Around it sit
//! closed forms for shift matrices ([`shift`]), the isometric dilation of
//! nilpotent contractions ([`dilation`]) and a set of independent
//! cross-checks ([`verifier`]).

mod error;

pub mod dilation;
pub mod engine;
pub mod geometry;
pub mod linalg;
pub mod random;
pub mod shift;
pub mod verifier;

pub use num_complex::Complex64 as C64;

pub use engine::{numerical_radius, rank_k_range, RangeReport};
pub use error::{Error, Result};
pub use geometry::{ConvexRegion, HalfPlane};
pub use linalg::Matrix;
pub use shift::ClosedFormRange;
pub use verifier::{PropertyId, PropertyReport};
