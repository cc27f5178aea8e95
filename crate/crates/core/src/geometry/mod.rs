//! Convex planar geometry over `ℂ`: half-planes, clipping, hulls and
//! set distances.

mod halfplane;
mod hull;
mod region;

pub use halfplane::{normalize_angle, HalfPlane};
pub use hull::convex_hull;
pub use region::{
    clip, hausdorff, intersect_halfplanes, support, ConvexRegion, AREA_TOL, COLLINEAR_TOL,
    HAUSDORFF_SAMPLES, INSIDE_TOL, POINT_TOL, WIDTH_TOL,
};
