//! SVG and PGM figures. Output depends only on the inputs: no timestamps,
//! fixed float formatting, deterministic iteration order.

use std::f64::consts::PI;
use std::fmt::Write as _;

use nodal_core::chessboard::{blue_recolor, build_chessboard, CellColor, CornerKind};
use nodal_core::nodal::{
    eval_phi, f_ratio, sweep_theta, EigenfunctionParams, FRatio, SweepOptions, Theta,
};
use nodal_core::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum RenderKind {
    /// Sign regions of Φ and its zero contour.
    Nodal,
    /// Graph of `cos px / cos qx` on `[0, π]`.
    Fgraph,
    /// Sign rectangles, outer (blue) cells and admissible corners.
    Chessboard,
    /// Nodal count against θ from a sweep.
    SweepProfile,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ImageFormat {
    Svg,
    Pgm,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenderSpec {
    pub kind: RenderKind,
    pub p: u32,
    pub q: u32,
    pub theta: Theta,
    /// Image width and height in pixels.
    pub size: u32,
    /// Sampling grid cells per side for contours; `None` is `64 · max(p, q, 1)`.
    pub resolution: Option<u32>,
    pub format: ImageFormat,
}

const BLUE: &str = "#3b6fd4";
const CONTOUR: &str = "#d62728";

pub fn render(spec: &RenderSpec) -> Result<Vec<u8>> {
    if spec.size < 16 || spec.size > 8192 {
        return Err(Error::Domain(format!(
            "size {} outside 16..=8192",
            spec.size
        )));
    }
    match (spec.kind, spec.format) {
        (RenderKind::Nodal, ImageFormat::Svg) => Ok(nodal_svg(spec).into_bytes()),
        (RenderKind::Nodal, ImageFormat::Pgm) => Ok(nodal_pgm(spec)),
        (RenderKind::Fgraph, ImageFormat::Svg) => fgraph_svg(spec).map(String::into_bytes),
        (RenderKind::Chessboard, ImageFormat::Svg) => chessboard_svg(spec).map(String::into_bytes),
        (RenderKind::SweepProfile, ImageFormat::Svg) => sweep_svg(spec).map(String::into_bytes),
        (kind, ImageFormat::Pgm) => Err(Error::Domain(format!(
            "PGM output is only available for nodal, not {kind:?}"
        ))),
    }
}

fn header(size: u32) -> String {
    format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">\n"
    )
}

fn resolution(spec: &RenderSpec) -> usize {
    spec.resolution
        .unwrap_or(64 * spec.p.max(spec.q).max(1))
        .max(2) as usize
}

/// `Φ` on the `(n+1)²` lattice, row `j` is `y = jπ/n`.
fn sample(params: &EigenfunctionParams, n: usize) -> Vec<f64> {
    let h = PI / n as f64;
    let mut v = Vec::with_capacity((n + 1) * (n + 1));
    for j in 0..=n {
        for i in 0..=n {
            v.push(eval_phi(params, i as f64 * h, j as f64 * h));
        }
    }
    v
}

/// Zero-contour segments by marching squares with linear interpolation,
/// in lattice coordinates.
pub fn marching_squares(values: &[f64], n: usize) -> Vec<[(f64, f64); 2]> {
    let at = |i: usize, j: usize| values[j * (n + 1) + i];
    let cross = |a: f64, b: f64| if a == b { 0.5 } else { a / (a - b) };
    let mut segs = Vec::new();
    for j in 0..n {
        for i in 0..n {
            let (v0, v1, v2, v3) = (at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1));
            let pos = |v: f64| (v > 0.0) as u8;
            let case = pos(v0) | pos(v1) << 1 | pos(v2) << 2 | pos(v3) << 3;
            let (x, y) = (i as f64, j as f64);
            // edges: bottom, right, top, left
            let e = [
                (x + cross(v0, v1), y),
                (x + 1.0, y + cross(v1, v2)),
                (x + cross(v3, v2), y + 1.0),
                (x, y + cross(v0, v3)),
            ];
            let mut link = |a: usize, b: usize| segs.push([e[a], e[b]]);
            match case {
                0 | 15 => {}
                1 | 14 => link(3, 0),
                2 | 13 => link(0, 1),
                3 | 12 => link(3, 1),
                4 | 11 => link(1, 2),
                6 | 9 => link(0, 2),
                7 | 8 => link(2, 3),
                5 | 10 => {
                    let centre = (v0 + v1 + v2 + v3) / 4.0;
                    if (centre > 0.0) == (case == 5) {
                        link(3, 2);
                        link(0, 1);
                    } else {
                        link(3, 0);
                        link(1, 2);
                    }
                }
                _ => unreachable!(),
            }
        }
    }
    segs
}

fn nodal_svg(spec: &RenderSpec) -> String {
    let params = EigenfunctionParams::new(spec.p, spec.q, spec.theta);
    let n = resolution(spec);
    let values = sample(&params, n);
    let size = spec.size as f64;
    let scale = size / n as f64;
    let mut s = header(spec.size);
    let _ = writeln!(
        s,
        "<title>Phi({},{}) theta={}</title>\n<rect width=\"{3}\" height=\"{3}\" fill=\"white\"/>",
        spec.p, spec.q, spec.theta, spec.size
    );
    let _ = writeln!(s, "<g fill=\"black\" shape-rendering=\"crispEdges\">");
    // sign of each cell centre, merged into horizontal runs
    let h = PI / n as f64;
    for j in 0..n {
        let yc = (j as f64 + 0.5) * h;
        let mut run_start: Option<usize> = None;
        for i in 0..=n {
            let negative = i < n && eval_phi(&params, (i as f64 + 0.5) * h, yc) < 0.0;
            match (negative, run_start) {
                (true, None) => run_start = Some(i),
                (false, Some(start)) => {
                    let _ = writeln!(
                        s,
                        "<rect x=\"{:.3}\" y=\"{:.3}\" width=\"{:.3}\" height=\"{:.3}\"/>",
                        start as f64 * scale,
                        size - (j + 1) as f64 * scale,
                        (i - start) as f64 * scale,
                        scale
                    );
                    run_start = None;
                }
                _ => {}
            }
        }
    }
    let _ = writeln!(s, "</g>");
    let _ = write!(
        s,
        "<path fill=\"none\" stroke=\"{CONTOUR}\" stroke-width=\"1.5\" d=\""
    );
    for [(x0, y0), (x1, y1)] in marching_squares(&values, n) {
        let _ = write!(
            s,
            "M{:.3} {:.3}L{:.3} {:.3}",
            x0 * scale,
            size - y0 * scale,
            x1 * scale,
            size - y1 * scale
        );
    }
    s.push_str("\"/>\n</svg>\n");
    s
}

/// Binary PGM, white where `Φ ≥ 0`.
fn nodal_pgm(spec: &RenderSpec) -> Vec<u8> {
    let params = EigenfunctionParams::new(spec.p, spec.q, spec.theta);
    let n = spec.size as usize;
    let h = PI / n as f64;
    let mut out = format!("P5\n{n} {n}\n255\n").into_bytes();
    for row in 0..n {
        let y = PI - (row as f64 + 0.5) * h;
        for i in 0..n {
            let v = eval_phi(&params, (i as f64 + 0.5) * h, y);
            out.push(if v < 0.0 { 0 } else { 255 });
        }
    }
    out
}

fn fgraph_svg(spec: &RenderSpec) -> Result<String> {
    let (p, q) = (spec.p, spec.q);
    if p <= q {
        return Err(Error::Domain(format!("f graph needs p > q, got ({p},{q})")));
    }
    let samples = 4000;
    let xs: Vec<f64> = (0..=samples)
        .map(|k| k as f64 * PI / samples as f64)
        .collect();
    let vals: Vec<FRatio> = xs.iter().map(|&x| f_ratio(p, q, x)).collect();
    let finite_max = vals
        .iter()
        .filter_map(|v| v.value())
        .map(f64::abs)
        .filter(|v| *v <= 4.0 * p as f64)
        .fold(1.0, f64::max);
    let ymax = (1.25 * finite_max).max(2.0);
    let size = spec.size as f64;
    let (mx, my) = (
        |x: f64| x / PI * size,
        |y: f64| size / 2.0 - y / ymax * size / 2.0,
    );
    let mut s = header(spec.size);
    let _ = writeln!(s, "<title>f({p},{q}) = cos {p}x / cos {q}x</title>");
    let _ = writeln!(
        s,
        "<rect width=\"{0}\" height=\"{0}\" fill=\"white\"/>",
        spec.size
    );
    let _ = writeln!(
        s,
        "<line x1=\"0\" y1=\"{0:.3}\" x2=\"{1}\" y2=\"{0:.3}\" stroke=\"grey\"/>",
        my(0.0),
        spec.size
    );
    for level in [1.0, -1.0] {
        let _ = writeln!(
            s,
            "<line x1=\"0\" y1=\"{0:.3}\" x2=\"{1}\" y2=\"{0:.3}\" stroke=\"grey\" stroke-dasharray=\"4 4\"/>",
            my(level),
            spec.size
        );
    }
    // poles: zeros of cos qx that cos px does not share
    for k in 0..q {
        let x = (2 * k + 1) as f64 * PI / (2 * q) as f64;
        if matches!(f_ratio(p, q, x), FRatio::Pole { .. }) {
            let _ = writeln!(
                s,
                "<line x1=\"{0:.3}\" y1=\"0\" x2=\"{0:.3}\" y2=\"{1}\" stroke=\"{BLUE}\" stroke-dasharray=\"2 6\"/>",
                mx(x),
                spec.size
            );
        }
    }
    let mut d = String::new();
    let mut pen_down = false;
    for (x, v) in xs.iter().zip(&vals) {
        match v.value() {
            Some(y) if y.abs() <= ymax => {
                let _ = write!(
                    d,
                    "{}{:.3} {:.3}",
                    if pen_down { "L" } else { "M" },
                    mx(*x),
                    my(y)
                );
                pen_down = true;
            }
            _ => pen_down = false,
        }
    }
    let _ = writeln!(
        s,
        "<path fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" d=\"{d}\"/>"
    );
    s.push_str("</svg>\n");
    Ok(s)
}

fn frac_px(r: num_rational::Ratio<i64>, size: f64) -> f64 {
    *r.numer() as f64 / *r.denom() as f64 * size
}

fn chessboard_svg(spec: &RenderSpec) -> Result<String> {
    let board = build_chessboard(spec.p, spec.q)?;
    let mask = blue_recolor(&board);
    let size = spec.size as f64;
    let side = board.side();
    let mut s = header(spec.size);
    let _ = writeln!(s, "<title>chessboard ({},{})</title>", spec.p, spec.q);
    for j in 0..side {
        let (y0, y1) = board.interval(j);
        for i in 0..side {
            let (x0, x1) = board.interval(i);
            let fill = if mask.blue[j * side + i] {
                BLUE
            } else if board.color(i, j) == CellColor::White {
                "white"
            } else {
                "black"
            };
            let _ = writeln!(
                s,
                "<rect x=\"{:.3}\" y=\"{:.3}\" width=\"{:.3}\" height=\"{:.3}\" fill=\"{fill}\" stroke=\"grey\" stroke-width=\"0.5\"/>",
                frac_px(x0, size),
                size - frac_px(y1, size),
                frac_px(x1 - x0, size),
                frac_px(y1 - y0, size)
            );
        }
    }
    let r = (size / (4.0 * side as f64)).clamp(1.5, 4.0);
    for c in board
        .corners()
        .iter()
        .filter(|c| c.kind == CornerKind::Admissible)
    {
        let _ = writeln!(
            s,
            "<circle class=\"admissible\" cx=\"{:.3}\" cy=\"{:.3}\" r=\"{r:.3}\" fill=\"{CONTOUR}\"/>",
            frac_px(c.x, size),
            size - frac_px(c.y, size)
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}

fn sweep_svg(spec: &RenderSpec) -> Result<String> {
    let report = sweep_theta(
        spec.p,
        spec.q,
        &SweepOptions {
            resolution: spec.resolution,
            ..SweepOptions::default()
        },
    )?;
    let size = spec.size as f64;
    let margin = 0.08 * size;
    let top = report.max_count as f64 + 2.0;
    let mx = |t: f64| margin + t / report.domain_end * (size - 2.0 * margin);
    let my = |c: f64| size - margin - c / top * (size - 2.0 * margin);
    let mut s = header(spec.size);
    let _ = writeln!(
        s,
        "<title>nodal count of ({},{}) against theta</title>",
        spec.p, spec.q
    );
    let _ = writeln!(
        s,
        "<rect width=\"{0}\" height=\"{0}\" fill=\"white\"/>",
        spec.size
    );
    let _ = writeln!(
        s,
        "<path fill=\"none\" stroke=\"grey\" d=\"M{m:.3} {m:.3}L{m:.3} {b:.3}L{r:.3} {b:.3}\"/>",
        m = margin,
        b = size - margin,
        r = size - margin
    );
    for t in &report.critical_thetas {
        let _ = writeln!(
            s,
            "<line x1=\"{0:.3}\" y1=\"{1:.3}\" x2=\"{0:.3}\" y2=\"{2:.3}\" stroke=\"{BLUE}\" stroke-dasharray=\"2 4\"/>",
            mx(*t),
            margin,
            size - margin
        );
    }
    for pt in &report.points {
        let fill = if pt.certified { "black" } else { CONTOUR };
        let _ = writeln!(
            s,
            "<circle cx=\"{:.3}\" cy=\"{:.3}\" r=\"3\" fill=\"{fill}\"><title>theta={:.6} count={}</title></circle>",
            mx(pt.theta),
            my(pt.count as f64),
            pt.theta,
            pt.count
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(kind: RenderKind, p: u32, q: u32, theta: Theta) -> RenderSpec {
        RenderSpec {
            kind,
            p,
            q,
            theta,
            size: 256,
            resolution: None,
            format: ImageFormat::Svg,
        }
    }

    #[test]
    fn marching_squares_single_line() {
        // Φ = x − 1.5 on a 3×3 lattice crosses every row once
        let n = 3;
        let values: Vec<f64> = (0..=n)
            .flat_map(|_| (0..=n).map(|i| i as f64 - 1.5))
            .collect();
        let segs = marching_squares(&values, n);
        assert_eq!(segs.len(), 3);
        for [(x0, _), (x1, _)] in segs {
            assert_eq!((x0, x1), (1.5, 1.5));
        }
    }

    #[test]
    fn chessboard_corner_dots() {
        let svg =
            String::from_utf8(render(&spec(RenderKind::Chessboard, 9, 4, Theta::ZERO)).unwrap())
                .unwrap();
        assert_eq!(svg.matches("class=\"admissible\"").count(), 97);
        assert!(svg.contains(BLUE));
    }

    #[test]
    fn pgm_header_and_size() {
        let mut sp = spec(RenderKind::Nodal, 4, 0, Theta::QUARTER_PI);
        sp.format = ImageFormat::Pgm;
        let bytes = render(&sp).unwrap();
        let head = b"P5\n256 256\n255\n";
        assert!(bytes.starts_with(head));
        assert_eq!(bytes.len(), head.len() + 256 * 256);
    }

    #[test]
    fn fgraph_has_pole_for_two_one() {
        let svg = String::from_utf8(render(&spec(RenderKind::Fgraph, 2, 1, Theta::ZERO)).unwrap())
            .unwrap();
        assert_eq!(svg.matches("stroke-dasharray=\"2 6\"").count(), 1);
        assert!(render(&spec(RenderKind::Fgraph, 1, 2, Theta::ZERO)).is_err());
    }

    #[test]
    fn deterministic() {
        for kind in [
            RenderKind::Nodal,
            RenderKind::Fgraph,
            RenderKind::Chessboard,
        ] {
            let sp = spec(kind, 5, 2, Theta::new(0.3).unwrap());
            assert_eq!(render(&sp).unwrap(), render(&sp).unwrap());
        }
    }
}
