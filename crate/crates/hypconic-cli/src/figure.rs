//! SVG rendering of region boundaries in the three charts.
//!
//! Each layer becomes one or more polylines; the BCK chart always draws the
//! unit circle of the absolute for context, and the dual chart draws the
//! co-polar boundary arrangement. World coordinates map to SVG with the
//! y-axis flipped, and all numbers are printed with fixed precision so the
//! output is byte-stable.

use hypconic::models::{bph_to_bck, BphPoint};
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chart {
    Bck,
    Bph,
    Dual,
}

#[derive(Debug, Clone)]
pub struct FigureSpec {
    pub chart: Chart,
    pub layers: Vec<String>,
    pub c: f64,
    pub viewport: Option<[f64; 4]>,
    pub samples: usize,
}

impl Default for FigureSpec {
    fn default() -> Self {
        FigureSpec {
            chart: Chart::Bck,
            layers: Vec::new(),
            c: 0.6,
            viewport: None,
            samples: 512,
        }
    }
}

struct Polyline {
    color: &'static str,
    points: Vec<(f64, f64)>,
}

fn color_of(layer: &str) -> &'static str {
    match layer {
        "E" | "copolar_E" => "#c62828",
        "B" | "D" | "copolar_B" => "#1565c0",
        "V" => "#212121",
        "A" => "#2e7d32",
        "E1" => "#ef6c00",
        _ => "#555555",
    }
}

fn default_viewport(chart: Chart) -> [f64; 4] {
    match chart {
        Chart::Bck => [-1.1, -1.1, 1.1, 1.1],
        Chart::Bph => [-3.0, -0.2, 3.0, 3.8],
        Chart::Dual => [-4.0, -4.0, 4.0, 4.0],
    }
}

pub fn render(spec: &FigureSpec) -> Result<String, String> {
    let viewport = spec
        .viewport
        .unwrap_or_else(|| default_viewport(spec.chart));
    let mut lines: Vec<Polyline> = Vec::new();
    for layer in &spec.layers {
        let polys = match spec.chart {
            Chart::Bck => bck_layer(layer, spec.c, spec.samples)?,
            Chart::Bph => bph_layer(layer, spec.c, spec.samples, &viewport)?,
            Chart::Dual => dual_layer(layer, spec.c, spec.samples, &viewport)?,
        };
        for points in polys {
            lines.push(Polyline {
                color: color_of(layer),
                points,
            });
        }
    }
    Ok(emit_svg(spec.chart, &viewport, &lines))
}

fn samples_over(a: f64, b: f64, n: usize) -> impl Iterator<Item = f64> {
    let step = (b - a) / n as f64;
    (0..=n).map(move |i| a + step * i as f64)
}

// Boundary curves in the disk chart. Curves that touch the absolute are
// sampled up to a hair inside it.
fn bck_layer(layer: &str, c: f64, n: usize) -> Result<Vec<Vec<(f64, f64)>>, String> {
    let s = (1.0f64 - c * c).sqrt();
    let top = 1.0 - 1e-9;
    Ok(match layer {
        "E" | "E1" => {
            let k = if layer == "E" { c } else { 1.0 };
            // closed loop through the vertex and the asymptotic point
            let mut pts = Vec::with_capacity(2 * n + 2);
            for u in samples_over(-1.0, 1.0, 2 * n) {
                let y = u * u;
                let x = k * u.signum() * (2.0 * y * (1.0 - y)).sqrt();
                pts.push((x, y));
            }
            vec![pts]
        }
        "B" => {
            let mut arc = Vec::with_capacity(2 * n + 2);
            for t in samples_over(-1.0, 1.0, 2 * n) {
                // sweep down the left arc and up the right one
                let y = top * (1.0 - t.abs());
                let x = t.signum() * c * ((1.0 - y) * (1.0 + y)).sqrt();
                arc.push(if t <= 0.0 {
                    (-x.abs(), y)
                } else {
                    (x.abs(), y)
                });
            }
            vec![arc]
        }
        "D" => {
            let y_f = c * c / (2.0 - c * c);
            let mut pts = Vec::with_capacity(2 * n + 2);
            for t in samples_over(-1.0, 1.0, 2 * n) {
                let y = top * (1.0 - t.abs());
                let w_band = c * ((1.0 - y) * (1.0 + y)).sqrt();
                let w_horo = (2.0 * y * (1.0 - y)).sqrt();
                let x = if y >= y_f { w_band } else { w_horo };
                pts.push((t.signum() * x, y));
            }
            pts.push((0.0, 0.0));
            vec![pts]
        }
        "V" => {
            // map the half-plane wedge rays back to the disk
            let mut left = Vec::with_capacity(n + 1);
            let mut right = Vec::with_capacity(n + 1);
            for t in samples_over(0.0, 60.0, n) {
                let y = 1.0 + s / c * t;
                let p = bph_to_bck(BphPoint::new(t, y).map_err(stringify)?).map_err(stringify)?;
                right.push((p.x(), p.y()));
                left.push((-p.x(), p.y()));
            }
            left.reverse();
            left.extend(right);
            vec![left]
        }
        "A" => {
            let apex = (0.0, 1.0 - 1e-9);
            vec![vec![(-c, 0.0), apex, (c, 0.0), (-c, 0.0)]]
        }
        other => return Err(format!("layer `{other}` is not drawable in the bck chart")),
    })
}

fn bph_layer(
    layer: &str,
    c: f64,
    n: usize,
    viewport: &[f64; 4],
) -> Result<Vec<Vec<(f64, f64)>>, String> {
    let s = (1.0f64 - c * c).sqrt();
    let (x0, x1, y1) = (viewport[0], viewport[2], viewport[3]);
    Ok(match layer {
        "E" => {
            // upper hyperbola branch y̌ = √(1 + ((1−C²)/C²)x̌²)
            let mut pts = Vec::with_capacity(n + 1);
            for x in samples_over(x0, x1, n) {
                let y = (1.0 + (s * s) / (c * c) * x * x).sqrt();
                pts.push((x, y));
            }
            vec![pts]
        }
        "B" => {
            // the band cone y̌ = (√(1−C²)/C)|x̌| clipped by the unit circle,
            // plus the circle arc between the cone rays
            let slope = s / c;
            let x_top = y1 / slope;
            let x_c = c; // the ray meets x̌² + y̌² = 1 at x̌ = C
            let mut left = Vec::with_capacity(n + 1);
            let mut right = Vec::with_capacity(n + 1);
            for x in samples_over(x_c, x_top.min(x1), n) {
                right.push((x, slope * x));
                left.push((-x, slope * x));
            }
            left.reverse();
            let mut arc = Vec::with_capacity(n + 1);
            let t0 = (s).atan2(c); // angle of the cone-circle contact
            for t in samples_over(t0, std::f64::consts::PI - t0, n) {
                arc.push((t.cos(), t.sin()));
            }
            vec![left, right, arc]
        }
        "D" => {
            let slope = s / c;
            let x_top = y1 / slope;
            let x_base = 1.0 / slope;
            let mut left = Vec::with_capacity(n + 1);
            let mut right = Vec::with_capacity(n + 1);
            for x in samples_over(x_base, x_top.min(x1), n) {
                right.push((x, slope * x));
                left.push((-x, slope * x));
            }
            left.reverse();
            let base = vec![(-x_base, 1.0), (x_base, 1.0)];
            vec![left, right, base]
        }
        "V" => {
            let slope = s / c;
            let x_top = (y1 - 1.0) / slope;
            let mut left = Vec::with_capacity(n + 1);
            let mut right = Vec::with_capacity(n + 1);
            for x in samples_over(0.0, x_top.min(x1), n) {
                right.push((x, 1.0 + slope * x));
                left.push((-x, 1.0 + slope * x));
            }
            left.reverse();
            left.extend(right);
            vec![left]
        }
        "E1" => vec![vec![(x0, 1.0), (x1, 1.0)]],
        other => return Err(format!("layer `{other}` is not drawable in the bph chart")),
    })
}

fn dual_layer(
    layer: &str,
    c: f64,
    n: usize,
    viewport: &[f64; 4],
) -> Result<Vec<Vec<(f64, f64)>>, String> {
    let (x0, y0, x1) = (viewport[0], viewport[1], viewport[2]);
    Ok(match layer {
        "copolar_E" => {
            // C²x² + 2y − 2 = 0
            let mut pts = Vec::with_capacity(n + 1);
            for x in samples_over(x0, x1, n) {
                pts.push((x, (2.0 - c * c * x * x) / 2.0));
            }
            vec![pts]
        }
        "copolar_B" => {
            // the dual hypercycle C²x² + y² = 1 and the vertex polars
            // x = ±1/C carrying the corner pencils downward
            let mut ellipse = Vec::with_capacity(n + 1);
            for t in samples_over(0.0, std::f64::consts::TAU, n) {
                ellipse.push((t.cos() / c, t.sin()));
            }
            let left = vec![(-1.0 / c, 0.0), (-1.0 / c, y0)];
            let right = vec![(1.0 / c, 0.0), (1.0 / c, y0)];
            vec![ellipse, left, right]
        }
        other => return Err(format!("layer `{other}` is not drawable in the dual chart")),
    })
}

fn stringify(e: hypconic::Error) -> String {
    e.to_string()
}

fn fmt_num(v: f64) -> String {
    // fixed precision keeps output byte-stable; strip the negative zero
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.6}")
}

fn emit_svg(chart: Chart, viewport: &[f64; 4], lines: &[Polyline]) -> String {
    let [wx0, wy0, wx1, wy1] = *viewport;
    let (w, h) = (wx1 - wx0, wy1 - wy0);
    // world → svg: flip y
    let (vx, vy) = (wx0, -wy1);
    let stroke = 0.004 * w.max(h);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">",
        fmt_num(vx),
        fmt_num(vy),
        fmt_num(w),
        fmt_num(h)
    );
    if chart == Chart::Bck {
        let _ = writeln!(
            out,
            "  <circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#9e9e9e\" stroke-width=\"{}\"/>",
            fmt_num(stroke)
        );
    }
    for line in lines {
        let mut points = String::new();
        for &(x, y) in &line.points {
            if !points.is_empty() {
                points.push(' ');
            }
            let _ = write!(points, "{},{}", fmt_num(x), fmt_num(-y));
        }
        let _ = writeln!(
            out,
            "  <polyline fill=\"none\" stroke=\"{}\" stroke-width=\"{}\" points=\"{}\"/>",
            line.color,
            fmt_num(stroke),
            points
        );
    }
    out.push_str("</svg>\n");
    out
}
