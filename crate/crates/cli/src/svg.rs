//! Static SVG plot of a region in the complex plane.

use std::fmt::Write;

use crate::io::RegionFile;

const SIZE_PX: u32 = 480;

/// Region, both axes with ticks at ±1, and an optional dashed reference circle.
///
/// The view extends 20% past the largest of the vertex moduli and the reference
/// radius, so the picture is in plane coordinates with the imaginary axis up.
pub fn render(region: &RegionFile, ref_radius: Option<f64>) -> String {
    let extent = region
        .max_modulus()
        .into_iter()
        .chain(ref_radius)
        .fold(0.0_f64, f64::max);
    let half = if extent > 0.0 { 1.2 * extent } else { 1.2 };
    let stroke = half / 200.0;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE_PX}" height="{SIZE_PX}" viewBox="{} {} {} {}">"#,
        -half,
        -half,
        2.0 * half,
        2.0 * half
    );
    let _ = writeln!(s, r#"<g transform="scale(1,-1)" stroke-width="{stroke}">"#);
    let _ = writeln!(
        s,
        r##"<path d="M {a} 0 L {half} 0 M 0 {a} L 0 {half}" stroke="#888" fill="none"/>"##,
        a = -half
    );
    let tick = 4.0 * stroke;
    let mut ticks = String::new();
    for u in [-1.0_f64, 1.0] {
        if u.abs() < half {
            let _ = write!(
                ticks,
                "M {u} {} L {u} {tick} M {} {u} L {tick} {u} ",
                -tick, -tick
            );
        }
    }
    if !ticks.is_empty() {
        let _ = writeln!(
            s,
            r##"<path d="{}" stroke="#888" fill="none"/>"##,
            ticks.trim_end()
        );
    }
    if let Some(r) = ref_radius.filter(|r| *r > 0.0) {
        let _ = writeln!(
            s,
            r##"<circle cx="0" cy="0" r="{r}" stroke="#c33" fill="none" stroke-dasharray="{} {}"/>"##,
            4.0 * stroke,
            3.0 * stroke
        );
    }
    match region.vertices.as_slice() {
        [] => {}
        [[x, y]] => {
            let _ = writeln!(
                s,
                r##"<circle cx="{x}" cy="{y}" r="{}" fill="#236"/>"##,
                3.0 * stroke
            );
        }
        vs => {
            let mut d = String::new();
            for (i, [x, y]) in vs.iter().enumerate() {
                let _ = write!(d, "{} {x} {y} ", if i == 0 { "M" } else { "L" });
            }
            d.push('Z');
            let _ = writeln!(
                s,
                r##"<path d="{d}" stroke="#236" fill="#236" fill-opacity="0.25"/>"##
            );
        }
    }
    s.push_str("</g>\n</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> RegionFile {
        RegionFile {
            tag: "polygon".into(),
            k: 1,
            angles: 16,
            vertices: vec![[0.5, 0.0], [0.0, 0.5], [-0.5, 0.0], [0.0, -0.5]],
            outer_error_bound: 0.0,
            support_samples: vec![],
        }
    }

    #[test]
    fn view_box_padded_past_modulus() {
        let svg = render(&square(), None);
        assert!(svg.contains(r#"viewBox="-0.6 -0.6 1.2 1.2""#), "{svg}");
        assert!(svg.contains("M 0.5 0 L 0 0.5 L -0.5 0 L 0 -0.5 Z"));
        assert!(!svg.contains("stroke-dasharray"));
    }

    #[test]
    fn reference_circle_widens_view() {
        let svg = render(&square(), Some(1.0));
        assert!(svg.contains(r#"viewBox="-1.2 -1.2 2.4 2.4""#), "{svg}");
        assert!(svg.contains(r#"r="1""#));
        assert!(svg.contains("stroke-dasharray"));
    }

    #[test]
    fn empty_region_still_draws_axes() {
        let empty = RegionFile {
            tag: "empty".into(),
            vertices: vec![],
            ..square()
        };
        let svg = render(&empty, None);
        assert!(svg.contains(r#"viewBox="-1.2 -1.2 2.4 2.4""#));
        assert!(!svg.contains("fill-opacity"));
    }
}
