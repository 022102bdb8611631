//! SVG picture of a two-dimensional twisted cube.
//!
//! Regions with density +1 are filled, density -1 regions are hatched.
//! Boundary edges that belong to `C` are solid, excluded edges are dashed,
//! polygon corners outside `C` are drawn hollow, and lattice points are dots.
//! One unit is 40 px; the canvas is the bounding box of the lattice points
//! and region corners with a one-unit margin.

use std::fmt::Write;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::twistedcube::{contains, density, lattice_points, Rational};
use crate::weightword::TwistData;

const UNIT: f64 = 40.0;

#[derive(Debug, Clone, Copy, PartialEq)]
enum Stroke {
    None,
    Solid,
    Dashed,
}

type Pt = (Rational, Rational);

struct Region {
    corners: Vec<Pt>,
    // stroke of the edge leaving corners[i]
    strokes: Vec<Stroke>,
    rho: i8,
}

fn q(v: i64) -> Rational {
    Rational::from_integer(v)
}

/// Splits `C` into pieces over which `A_1` keeps one sign; each piece is
/// bounded by `x_1 = 0`, `x_1 = A_1(x_2)` and two horizontal lines.
fn regions(d: &TwistData) -> Result<Vec<Region>> {
    let (l1, l2, c12) = (q(d.ell(1)), q(d.ell(2)), q(d.c(1, 2)));
    let a1 = |x2: Rational| l1 - c12 * x2;
    let band_closed = !l2.is_negative();
    let (lo, hi) = if band_closed { (q(0), l2) } else { (l2, q(0)) };
    let mut cuts = vec![lo];
    if !c12.is_zero() {
        let root = l1 / c12;
        if lo < root && root < hi {
            cuts.push(root);
        }
    }
    cuts.push(hi);

    let mut out = Vec::new();
    for w in cuts.windows(2) {
        let (a, b) = (w[0], w[1]);
        let mid = (a + b) / q(2);
        let weak_side = !a1(mid).is_negative();
        let side = if weak_side { Stroke::Solid } else { Stroke::Dashed };
        let horizontal = |y: Rational| {
            if y != lo && y != hi {
                Stroke::None
            } else if band_closed {
                Stroke::Solid
            } else {
                Stroke::Dashed
            }
        };
        let raw = [
            ((q(0), a), horizontal(a)),
            ((a1(a), a), side),
            ((a1(b), b), horizontal(b)),
            ((q(0), b), side),
        ];
        let mut corners: Vec<Pt> = Vec::new();
        let mut strokes = Vec::new();
        for (p, s) in raw {
            if corners.last() == Some(&p) {
                // the zero-length edge's stroke is dropped
                *strokes.last_mut().unwrap() = s;
                continue;
            }
            corners.push(p);
            strokes.push(s);
        }
        if corners.len() > 1 && corners.first() == corners.last() {
            corners.pop();
            strokes.pop();
        }
        let n = corners.len() as i64;
        let cx = corners.iter().map(|p| p.0).fold(q(0), |s, v| s + v) / q(n);
        let cy = corners.iter().map(|p| p.1).fold(q(0), |s, v| s + v) / q(n);
        let rho = if corners.len() >= 3 {
            density(d, &[cx, cy])?
        } else {
            0
        };
        out.push(Region { corners, strokes, rho });
    }
    Ok(out)
}

fn fmt_px(v: f64) -> String {
    let s = format!("{v:.2}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" { "0".into() } else { s.into() }
}

fn to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

pub fn render_svg(d: &TwistData) -> Result<String> {
    if d.n() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: d.n(),
        });
    }
    let census = lattice_points(d)?;
    let regions = regions(d)?;

    let mut xs: Vec<f64> = vec![0.0];
    let mut ys: Vec<f64> = vec![0.0];
    for p in &census.points {
        xs.push(p.x[0] as f64);
        ys.push(p.x[1] as f64);
    }
    for r in &regions {
        for c in &r.corners {
            xs.push(to_f64(c.0));
            ys.push(to_f64(c.1));
        }
    }
    let fold = |v: &[f64], f: fn(f64, f64) -> f64, init: f64| v.iter().copied().fold(init, f);
    let (min_x, max_x) = (fold(&xs, f64::min, f64::INFINITY), fold(&xs, f64::max, f64::NEG_INFINITY));
    let (min_y, max_y) = (fold(&ys, f64::min, f64::INFINITY), fold(&ys, f64::max, f64::NEG_INFINITY));
    let width = (max_x - min_x + 2.0) * UNIT;
    let height = (max_y - min_y + 2.0) * UNIT;
    let px = |x: f64| fmt_px((x - min_x + 1.0) * UNIT);
    let py = |y: f64| fmt_px((max_y - y + 1.0) * UNIT);
    let pt = |p: &Pt| format!("{},{}", px(to_f64(p.0)), py(to_f64(p.1)));

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = fmt_px(width),
        h = fmt_px(height)
    );
    svg.push_str(concat!(
        "  <defs>\n",
        r#"    <pattern id="hatch" patternUnits="userSpaceOnUse" width="8" height="8" patternTransform="rotate(45)">"#,
        "\n",
        r##"      <line x1="0" y1="0" x2="0" y2="8" stroke="#555" stroke-width="1.5"/>"##,
        "\n    </pattern>\n  </defs>\n",
        r#"  <rect width="100%" height="100%" fill="white"/>"#,
        "\n"
    ));
    let _ = writeln!(
        svg,
        r##"  <line x1="0" y1="{y}" x2="{w}" y2="{y}" stroke="#bbb" stroke-width="1"/>"##,
        y = py(0.0),
        w = fmt_px(width)
    );
    let _ = writeln!(
        svg,
        r##"  <line x1="{x}" y1="0" x2="{x}" y2="{h}" stroke="#bbb" stroke-width="1"/>"##,
        x = px(0.0),
        h = fmt_px(height)
    );

    for r in &regions {
        if r.corners.len() >= 3 && r.rho != 0 {
            let fill = if r.rho > 0 { "#9ecae1" } else { "url(#hatch)" };
            let points: Vec<String> = r.corners.iter().map(pt).collect();
            let _ = writeln!(
                svg,
                r#"  <polygon points="{}" fill="{fill}" stroke="none"/>"#,
                points.join(" ")
            );
        }
    }
    for r in &regions {
        let k = r.corners.len();
        let edges = if k == 2 { 1 } else { k };
        for i in 0..edges {
            let (a, b) = (&r.corners[i], &r.corners[(i + 1) % k]);
            let dash = match r.strokes[i] {
                Stroke::None => continue,
                Stroke::Solid => "",
                Stroke::Dashed => r#" stroke-dasharray="6,4""#,
            };
            let (x1, y1) = (px(to_f64(a.0)), py(to_f64(a.1)));
            let (x2, y2) = (px(to_f64(b.0)), py(to_f64(b.1)));
            let _ = writeln!(
                svg,
                r#"  <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" stroke-width="2"{dash}/>"#
            );
        }
    }
    for r in &regions {
        if r.corners.len() >= 3 && r.rho != 0 {
            let n = r.corners.len() as f64;
            let cx = r.corners.iter().map(|p| to_f64(p.0)).sum::<f64>() / n;
            let cy = r.corners.iter().map(|p| to_f64(p.1)).sum::<f64>() / n;
            let label = if r.rho > 0 { "+1" } else { "-1" };
            let _ = writeln!(
                svg,
                r#"  <text x="{}" y="{}" font-family="sans-serif" font-size="14" text-anchor="middle">{label}</text>"#,
                px(cx),
                py(cy)
            );
        }
    }
    let mut hollow: Vec<Pt> = Vec::new();
    for r in &regions {
        for c in &r.corners {
            if !contains(d, &[c.0, c.1])? && !hollow.contains(c) {
                hollow.push(*c);
            }
        }
    }
    for c in &hollow {
        let _ = writeln!(
            svg,
            r#"  <circle cx="{}" cy="{}" r="5" fill="white" stroke="black" stroke-width="1.5"/>"#,
            px(to_f64(c.0)),
            py(to_f64(c.1))
        );
    }
    for p in &census.points {
        let _ = writeln!(
            svg,
            r#"  <circle cx="{}" cy="{}" r="3.5" fill="black"/>"#,
            px(p.x[0] as f64),
            py(p.x[1] as f64)
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
