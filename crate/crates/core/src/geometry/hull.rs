use num_complex::Complex64 as C64;

use super::region::normalize_polygon;
use super::ConvexRegion;

fn turn(o: C64, a: C64, b: C64) -> f64 {
    let (u, v) = (a - o, b - o);
    u.re * v.im - u.im * v.re
}

/// Convex hull of a finite point set (Andrew's monotone chain).
///
/// Collinear hulls come back as a segment, coincident points as a point.
pub fn convex_hull(points: &[C64]) -> ConvexRegion {
    let mut pts: Vec<C64> = points.to_vec();
    pts.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    pts.dedup();
    if pts.len() < 3 {
        return normalize_polygon(pts);
    }
    let mut lower: Vec<C64> = Vec::with_capacity(pts.len());
    for &p in &pts {
        while lower.len() >= 2 && turn(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0.0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<C64> = Vec::with_capacity(pts.len());
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && turn(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    normalize_polygon(lower)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn square_with_interior_points() {
        let pts = [
            c(0.0, 0.0),
            c(1.0, 0.0),
            c(0.5, 0.5),
            c(1.0, 1.0),
            c(0.0, 1.0),
            c(0.5, 0.0),
        ];
        match convex_hull(&pts) {
            ConvexRegion::Polygon(vs) => {
                assert_eq!(vs.len(), 4);
                assert!(ConvexRegion::Polygon(vs).area() > 0.999);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn degenerate_hulls() {
        assert_eq!(convex_hull(&[]), ConvexRegion::Empty);
        assert_eq!(
            convex_hull(&[c(1.0, 2.0)]),
            ConvexRegion::Point(c(1.0, 2.0))
        );
        match convex_hull(&[c(0.0, 0.0), c(2.0, 0.0), c(1.0, 0.0)]) {
            ConvexRegion::Segment(a, b) => {
                assert_eq!((a - b).norm(), 2.0);
            }
            other => panic!("{other:?}"),
        }
    }
}
