//! SVG rendering of an annular domain: the outer boundary with the
//! eigenfunction's boundary trace as a color band, the inner circle,
//! and the critical-radius circle. Output is a pure function of the
//! inputs (fixed number formatting), so repeated runs are byte-stable.

use std::fmt::Write;

use steklov_core::eigensolver::EigenSolveResult;
use steklov_core::geometry::AnnularDomain2D;
use steklov_core::shell;

const CANVAS: f64 = 640.0;
const TRACE_SAMPLES: usize = 256;

fn fmt(x: f64) -> String {
    format!("{x:.4}")
}

/// Map a trace value in [0, 1] to a cold-to-hot color.
fn band_color(v: f64) -> String {
    let v = v.clamp(0.0, 1.0);
    let r = (255.0 * v).round() as u8;
    let b = (255.0 * (1.0 - v)).round() as u8;
    format!("#{r:02x}40{b:02x}")
}

pub fn render(domain: &AnnularDomain2D, result: &EigenSolveResult) -> String {
    let r1 = domain.inner_radius();
    let rbar = shell::rbar(2, r1);
    let extent = 1.08 * rbar.max(domain.outer().max_rho());
    let scale = 0.5 * CANVAS / extent;
    let to_px = |p: [f64; 2]| {
        [
            0.5 * CANVAS + scale * p[0],
            0.5 * CANVAS - scale * p[1],
        ]
    };

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS}" height="{CANVAS}" viewBox="0 0 {CANVAS} {CANVAS}">"#
    );
    let _ = writeln!(
        svg,
        r#"<rect width="{CANVAS}" height="{CANVAS}" fill="white"/>"#
    );

    // boundary trace color band: thick segments under the outline
    let trace = result.boundary_trace(domain, TRACE_SAMPLES);
    let (lo, hi) = trace
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        });
    let span = (hi - lo).max(1e-300);
    for (j, &value) in trace.iter().enumerate() {
        let t0 = std::f64::consts::TAU * j as f64 / TRACE_SAMPLES as f64;
        let t1 = std::f64::consts::TAU * (j + 1) as f64 / TRACE_SAMPLES as f64;
        let p0 = to_px(domain.outer().boundary_point(t0));
        let p1 = to_px(domain.outer().boundary_point(t1));
        let v = (value - lo) / span;
        let _ = writeln!(
            svg,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{}" stroke-width="10" stroke-linecap="round"/>"#,
            fmt(p0[0]),
            fmt(p0[1]),
            fmt(p1[0]),
            fmt(p1[1]),
            band_color(v)
        );
    }

    // outer boundary outline (closed path)
    let mut d = String::new();
    for j in 0..TRACE_SAMPLES {
        let t = std::f64::consts::TAU * j as f64 / TRACE_SAMPLES as f64;
        let p = to_px(domain.outer().boundary_point(t));
        let _ = write!(d, "{}{},{} ", if j == 0 { "M" } else { "L" }, fmt(p[0]), fmt(p[1]));
    }
    d.push('Z');
    let _ = writeln!(
        svg,
        r#"<path d="{d}" fill="none" stroke="black" stroke-width="1.5"/>"#
    );

    // inner (Dirichlet) circle and the critical-radius circle
    let _ = writeln!(
        svg,
        r##"<circle cx="{0}" cy="{0}" r="{1}" fill="#d0d0d0" stroke="black" stroke-width="1"/>"##,
        fmt(0.5 * CANVAS),
        fmt(scale * r1)
    );
    let _ = writeln!(
        svg,
        r##"<circle cx="{0}" cy="{0}" r="{1}" fill="none" stroke="#606060" stroke-width="1" stroke-dasharray="6 4"/>"##,
        fmt(0.5 * CANVAS),
        fmt(scale * rbar)
    );
    let _ = writeln!(
        svg,
        r#"<text x="8" y="20" font-family="monospace" font-size="14">sigma1 = {:.10}</text>"#,
        result.sigma1
    );
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;
    use steklov_core::eigensolver::solve_sigma1;
    use steklov_core::geometry::{body_from_ellipse, AnnularDomain2D};

    #[test]
    fn renders_three_closed_curves_and_is_deterministic() {
        let outer = body_from_ellipse(1.0, 1.2, 256).unwrap();
        let domain = AnnularDomain2D::new(0.5, outer).unwrap();
        let result = solve_sigma1(&domain, 12, 256).unwrap();
        let svg = render(&domain, &result);
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<circle").count(), 2);
        assert_eq!(svg.matches("Z\"").count(), 1);
        // byte-stable
        assert_eq!(svg, render(&domain, &result));
    }
}
