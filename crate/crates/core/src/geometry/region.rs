use std::f64::consts::TAU;

use num_complex::Complex64 as C64;

use super::HalfPlane;
use crate::error::{Error, Result};

/// A vertex with excess below this is kept by [`clip`].
pub const INSIDE_TOL: f64 = 1e-12;
/// Vertices whose cross product with their neighbours' chord is at most this are pruned.
pub const COLLINEAR_TOL: f64 = 1e-12;
/// Polygons with smaller area are reclassified as a point or a segment.
pub const AREA_TOL: f64 = 1e-18;
/// Degenerate regions with smaller diameter collapse to a point.
pub const POINT_TOL: f64 = 1e-9;
/// Angles sampled by [`hausdorff`].
pub const HAUSDORFF_SAMPLES: usize = 4096;

/// Polygons thinner than this (`2·area / diameter`) are reclassified as a
/// segment or point. Clipping keeps vertices up to [`INSIDE_TOL`] outside a
/// plane, so a true segment comes back as a sliver of about that width.
pub const WIDTH_TOL: f64 = 1e-10;

const DUPLICATE_TOL: f64 = 1e-15;
const SLIVER_GATE: f64 = 1e-6;

/// Compact convex subset of the plane.
#[derive(Debug, Clone, PartialEq)]
pub enum ConvexRegion {
    Empty,
    Point(C64),
    Segment(C64, C64),
    /// Counter-clockwise, strictly convex, at least three vertices.
    Polygon(Vec<C64>),
}

fn cross(a: C64, b: C64) -> f64 {
    a.re * b.im - a.im * b.re
}

fn dot(a: C64, b: C64) -> f64 {
    a.re * b.re + a.im * b.im
}

fn point_segment_distance(z: C64, a: C64, b: C64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (z - a).norm();
    }
    let t = (dot(z - a, ab) / len2).clamp(0.0, 1.0);
    (z - (a + ab * t)).norm()
}

fn segment_or_point(a: C64, b: C64) -> ConvexRegion {
    if (a - b).norm() < POINT_TOL {
        ConvexRegion::Point((a + b) * 0.5)
    } else {
        ConvexRegion::Segment(a, b)
    }
}

fn signed_area(vs: &[C64]) -> f64 {
    let n = vs.len();
    (0..n).map(|i| cross(vs[i], vs[(i + 1) % n])).sum::<f64>() * 0.5
}

fn farthest_pair(vs: &[C64]) -> (C64, C64, f64) {
    let mut best = (vs[0], vs[0], 0.0);
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            let d = (vs[i] - vs[j]).norm();
            if d > best.2 {
                best = (vs[i], vs[j], d);
            }
        }
    }
    best
}

/// Drops duplicate and collinear vertices and classifies the result.
pub(crate) fn normalize_polygon(mut vs: Vec<C64>) -> ConvexRegion {
    // consecutive duplicates, cyclically
    vs.dedup_by(|b, a| (*b - *a).norm() <= DUPLICATE_TOL);
    while vs.len() > 1 && (vs[0] - vs[vs.len() - 1]).norm() <= DUPLICATE_TOL {
        vs.pop();
    }

    // A vertex is pruned when it is within the collinear tolerance of the
    // chord joining its neighbours and projects inside that chord, so removal
    // moves the boundary by a rounding-level amount only. The cross product is
    // compared against `COLLINEAR_TOL · min(|chord|, 1)`: absolute for long
    // chords, a distance for short ones, where a raw cross product says nothing.
    // Neighbours that coincide mark a spike, and the duplicate goes instead.
    let mut changed = true;
    while changed && vs.len() >= 3 {
        changed = false;
        let mut i = 0;
        while i < vs.len() && vs.len() >= 3 {
            let n = vs.len();
            let a = vs[(i + n - 1) % n];
            let b = vs[i];
            let c = vs[(i + 1) % n];
            let ac = c - a;
            let len = ac.norm();
            if len <= DUPLICATE_TOL {
                vs.remove((i + 1) % n);
                changed = true;
                continue;
            }
            let t = dot(b - a, ac) / (len * len);
            if cross(b - a, ac) <= COLLINEAR_TOL * len.min(1.0) && (0.0..=1.0).contains(&t) {
                vs.remove(i);
                changed = true;
            } else {
                i += 1;
            }
        }
    }

    match vs.len() {
        0 => ConvexRegion::Empty,
        1 => ConvexRegion::Point(vs[0]),
        2 => segment_or_point(vs[0], vs[1]),
        _ => {
            let area = signed_area(&vs).abs();
            // cheap gate before the quadratic diameter
            let degenerate = area < AREA_TOL
                || (area < SLIVER_GATE && 2.0 * area < WIDTH_TOL * farthest_pair(&vs).2);
            if degenerate {
                let (a, b, d) = farthest_pair(&vs);
                if d < POINT_TOL {
                    let n = vs.len() as f64;
                    ConvexRegion::Point(vs.iter().sum::<C64>() / n)
                } else {
                    ConvexRegion::Segment(a, b)
                }
            } else {
                ConvexRegion::Polygon(vs)
            }
        }
    }
}

impl ConvexRegion {
    /// Axis-aligned square `[-r, r]²`.
    pub fn square(half_width: f64) -> Self {
        let r = half_width;
        ConvexRegion::Polygon(vec![
            C64::new(-r, -r),
            C64::new(r, -r),
            C64::new(r, r),
            C64::new(-r, r),
        ])
    }

    /// Validates and classifies an arbitrary counter-clockwise vertex list.
    pub fn from_ccw_vertices(vs: Vec<C64>) -> Self {
        normalize_polygon(vs)
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, ConvexRegion::Empty)
    }

    pub fn tag(&self) -> &'static str {
        match self {
            ConvexRegion::Empty => "empty",
            ConvexRegion::Point(_) => "point",
            ConvexRegion::Segment(..) => "segment",
            ConvexRegion::Polygon(_) => "polygon",
        }
    }

    pub fn vertices(&self) -> Vec<C64> {
        match self {
            ConvexRegion::Empty => Vec::new(),
            ConvexRegion::Point(p) => vec![*p],
            ConvexRegion::Segment(a, b) => vec![*a, *b],
            ConvexRegion::Polygon(vs) => vs.clone(),
        }
    }

    /// Largest `|z|` over the region, `None` when empty.
    pub fn max_modulus(&self) -> Option<f64> {
        self.vertices()
            .into_iter()
            .map(|z| z.norm())
            .reduce(f64::max)
    }

    pub fn area(&self) -> f64 {
        match self {
            ConvexRegion::Polygon(vs) => signed_area(vs),
            _ => 0.0,
        }
    }

    pub fn diameter(&self) -> f64 {
        let vs = self.vertices();
        if vs.is_empty() {
            0.0
        } else {
            farthest_pair(&vs).2
        }
    }

    /// Image under `z ↦ a z + b`.
    pub fn map_affine(&self, a: C64, b: C64) -> ConvexRegion {
        let f = |z: &C64| a * z + b;
        match self {
            ConvexRegion::Empty => ConvexRegion::Empty,
            ConvexRegion::Point(p) => ConvexRegion::Point(f(p)),
            ConvexRegion::Segment(p, q) => segment_or_point(f(p), f(q)),
            ConvexRegion::Polygon(vs) => {
                if a == C64::new(0.0, 0.0) {
                    ConvexRegion::Point(b)
                } else {
                    normalize_polygon(vs.iter().map(f).collect())
                }
            }
        }
    }

    /// Complex-conjugate reflection.
    pub fn conj(&self) -> ConvexRegion {
        match self {
            ConvexRegion::Empty => ConvexRegion::Empty,
            ConvexRegion::Point(p) => ConvexRegion::Point(p.conj()),
            ConvexRegion::Segment(p, q) => ConvexRegion::Segment(p.conj(), q.conj()),
            ConvexRegion::Polygon(vs) => {
                ConvexRegion::Polygon(vs.iter().rev().map(|z| z.conj()).collect())
            }
        }
    }

    /// Euclidean distance from `z` to the region.
    pub fn distance_to(&self, z: C64) -> Result<f64> {
        match self {
            ConvexRegion::Empty => Err(Error::EmptyRegion),
            ConvexRegion::Point(p) => Ok((z - p).norm()),
            ConvexRegion::Segment(a, b) => Ok(point_segment_distance(z, *a, *b)),
            ConvexRegion::Polygon(vs) => {
                let n = vs.len();
                let inside = (0..n).all(|i| cross(vs[(i + 1) % n] - vs[i], z - vs[i]) >= 0.0);
                if inside {
                    return Ok(0.0);
                }
                Ok((0..n)
                    .map(|i| point_segment_distance(z, vs[i], vs[(i + 1) % n]))
                    .fold(f64::INFINITY, f64::min))
            }
        }
    }

    /// Half-plane description whose intersection is this region.
    pub fn to_halfplanes(&self) -> Vec<HalfPlane> {
        let i = C64::new(0.0, 1.0);
        match self {
            ConvexRegion::Empty => Vec::new(),
            ConvexRegion::Point(p) => [C64::new(1.0, 0.0), i, -C64::new(1.0, 0.0), -i]
                .into_iter()
                .map(|nu| HalfPlane::from_normal(nu, *p))
                .collect(),
            ConvexRegion::Segment(a, b) => {
                let u = (b - a) / (b - a).norm();
                vec![
                    HalfPlane::from_normal(i * u, *a),
                    HalfPlane::from_normal(-i * u, *a),
                    HalfPlane::from_normal(-u, *a),
                    HalfPlane::from_normal(u, *b),
                ]
            }
            ConvexRegion::Polygon(vs) => {
                let n = vs.len();
                (0..n)
                    .map(|k| {
                        let edge = vs[(k + 1) % n] - vs[k];
                        // outward normal of a CCW edge
                        HalfPlane::from_normal(-i * edge, vs[k])
                    })
                    .collect()
            }
        }
    }

    /// Intersection of two convex regions.
    pub fn intersect(&self, other: &ConvexRegion) -> ConvexRegion {
        if other.is_empty() {
            return ConvexRegion::Empty;
        }
        other
            .to_halfplanes()
            .iter()
            .fold(self.clone(), |acc, hp| clip(&acc, hp))
    }
}

/// Intersection of a region with a closed half-plane.
///
/// Vertices with excess up to [`INSIDE_TOL`] count as inside, so clipping by
/// a half-plane the region already satisfies returns it unchanged and
/// repeated clipping is idempotent.
pub fn clip(region: &ConvexRegion, hp: &HalfPlane) -> ConvexRegion {
    let w = hp.phasor();
    let excess = |z: C64| (w * z).re - hp.offset();
    match region {
        ConvexRegion::Empty => ConvexRegion::Empty,
        // A point stands for anything up to POINT_TOL across and a segment for
        // anything up to WIDTH_TOL thick, so they get matching slack.
        ConvexRegion::Point(p) => {
            if excess(*p) <= POINT_TOL {
                region.clone()
            } else {
                ConvexRegion::Empty
            }
        }
        ConvexRegion::Segment(a, b) => {
            let (fa, fb) = (excess(*a), excess(*b));
            match (fa <= WIDTH_TOL, fb <= WIDTH_TOL) {
                (true, true) => region.clone(),
                (false, false) => ConvexRegion::Empty,
                (a_in, _) => {
                    let t = (fa / (fa - fb)).clamp(0.0, 1.0);
                    let cut = a + (b - a) * t;
                    if a_in {
                        segment_or_point(*a, cut)
                    } else {
                        segment_or_point(cut, *b)
                    }
                }
            }
        }
        ConvexRegion::Polygon(vs) => {
            let f: Vec<f64> = vs.iter().map(|&z| excess(z)).collect();
            if f.iter().all(|&x| x <= INSIDE_TOL) {
                return region.clone();
            }
            if f.iter().all(|&x| x > INSIDE_TOL) {
                return ConvexRegion::Empty;
            }
            let n = vs.len();
            let mut out = Vec::with_capacity(n + 1);
            for i in 0..n {
                let j = (i + 1) % n;
                let (cur_in, next_in) = (f[i] <= INSIDE_TOL, f[j] <= INSIDE_TOL);
                if cur_in {
                    out.push(vs[i]);
                }
                if cur_in != next_in {
                    let t = (f[i] / (f[i] - f[j])).clamp(0.0, 1.0);
                    out.push(vs[i] + (vs[j] - vs[i]) * t);
                }
            }
            normalize_polygon(out)
        }
    }
}

/// Intersects half-planes inside the square `[-bound, bound]²`, clipping in order.
pub fn intersect_halfplanes(planes: &[HalfPlane], bound: f64) -> ConvexRegion {
    planes.iter().fold(ConvexRegion::square(bound), |acc, hp| {
        if acc.is_empty() {
            acc
        } else {
            clip(&acc, hp)
        }
    })
}

/// Support function `max Re(e^{iθ} z)` over the region.
pub fn support(region: &ConvexRegion, theta: f64) -> Result<f64> {
    let w = C64::from_polar(1.0, theta);
    region
        .vertices()
        .into_iter()
        .map(|z| (w * z).re)
        .reduce(f64::max)
        .ok_or(Error::EmptyRegion)
}

/// Symmetric Hausdorff distance between two non-empty convex regions.
///
/// Takes the larger of the support-function gap sampled at
/// [`HAUSDORFF_SAMPLES`] angles and the vertex-to-region distances in both
/// directions. For convex polygons the latter is exact.
pub fn hausdorff(a: &ConvexRegion, b: &ConvexRegion) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyRegion);
    }
    let mut worst: f64 = 0.0;
    for j in 0..HAUSDORFF_SAMPLES {
        let theta = TAU * j as f64 / HAUSDORFF_SAMPLES as f64;
        worst = worst.max((support(a, theta)? - support(b, theta)?).abs());
    }
    for v in a.vertices() {
        worst = worst.max(b.distance_to(v)?);
    }
    for v in b.vertices() {
        worst = worst.max(a.distance_to(v)?);
    }
    Ok(worst)
}
