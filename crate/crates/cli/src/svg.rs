//! Dependency-free SVG scatter plots of root clouds.

use std::fmt::Write as _;
use std::io;
use std::path::Path;

use bichroma_core::EnumerationRecord;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const PAD: f64 = 40.0;
const MAX_TICKS: f64 = 16.0;

/// Data range widened by 5% on each side, or to unit width around a
/// degenerate range.
fn padded(lo: f64, hi: f64) -> (f64, f64) {
    if hi > lo {
        let m = 0.05 * (hi - lo);
        (lo - m, hi + m)
    } else {
        (lo - 1.0, hi + 1.0)
    }
}

fn tick_step(lo: f64, hi: f64) -> i64 {
    ((hi - lo) / MAX_TICKS).ceil().max(1.0) as i64
}

fn ticks(lo: f64, hi: f64) -> impl Iterator<Item = i64> {
    let step = tick_step(lo, hi);
    let first = (lo / step as f64).ceil() as i64 * step;
    (0..)
        .map(move |i| first + i * step)
        .take_while(move |&t| t as f64 <= hi)
}

/// A scatter of `(re, im)` points with axes and integer ticks; `None` for
/// no points.
pub fn render(points: &[(f64, f64)]) -> Option<String> {
    if points.is_empty() {
        return None;
    }
    let fold = |f: fn(&(f64, f64)) -> f64| {
        points
            .iter()
            .map(f)
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| {
                (a.min(v), b.max(v))
            })
    };
    let (x0, x1) = fold(|p| p.0);
    let (y0, y1) = fold(|p| p.1);
    let (x0, x1) = padded(x0, x1);
    let (y0, y1) = padded(y0, y1);
    let sx = |x: f64| PAD + (x - x0) / (x1 - x0) * (WIDTH - 2.0 * PAD);
    let sy = |y: f64| HEIGHT - PAD - (y - y0) / (y1 - y0) * (HEIGHT - 2.0 * PAD);
    // Axes through the origin when it is in view, else along the frame.
    let axis_y = if (y0..=y1).contains(&0.0) {
        sy(0.0)
    } else {
        HEIGHT - PAD
    };
    let axis_x = if (x0..=x1).contains(&0.0) {
        sx(0.0)
    } else {
        PAD
    };

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        out,
        r#"<g stroke="black" stroke-width="1" font-family="sans-serif" font-size="10">"#
    );
    let _ = writeln!(
        out,
        r#"<line class="axis" x1="{PAD}" y1="{axis_y:.2}" x2="{}" y2="{axis_y:.2}"/>"#,
        WIDTH - PAD
    );
    let _ = writeln!(
        out,
        r#"<line class="axis" x1="{axis_x:.2}" y1="{PAD}" x2="{axis_x:.2}" y2="{}"/>"#,
        HEIGHT - PAD
    );
    for t in ticks(x0, x1) {
        let x = sx(t as f64);
        let _ = writeln!(
            out,
            r#"<line x1="{x:.2}" y1="{axis_y:.2}" x2="{x:.2}" y2="{:.2}"/>"#,
            axis_y + 4.0
        );
        let _ = writeln!(
            out,
            r#"<text x="{x:.2}" y="{:.2}" text-anchor="middle" stroke="none">{t}</text>"#,
            axis_y + 15.0
        );
    }
    for t in ticks(y0, y1) {
        let y = sy(t as f64);
        let _ = writeln!(
            out,
            r#"<line x1="{:.2}" y1="{y:.2}" x2="{axis_x:.2}" y2="{y:.2}"/>"#,
            axis_x - 4.0
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end" stroke="none">{t}</text>"#,
            axis_x - 6.0,
            y + 3.0
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<g fill="navy">"#);
    for &(x, y) in points {
        let _ = writeln!(
            out,
            r#"<circle cx="{:.2}" cy="{:.2}" r="1.5"/>"#,
            sx(x),
            sy(y)
        );
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    Some(out)
}

pub fn record_points(records: &[EnumerationRecord]) -> Vec<(f64, f64)> {
    records
        .iter()
        .flat_map(|r| r.roots.all_roots())
        .map(|(z, _)| (z.re, z.im))
        .collect()
}

/// Writes the scatter of every root of `records` to `path`.
pub fn emit_svg(records: &[EnumerationRecord], path: &Path) -> io::Result<()> {
    let svg = render(&record_points(records))
        .ok_or_else(|| io::Error::new(io::ErrorKind::InvalidInput, "no roots to plot"))?;
    std::fs::write(path, svg)
}

/// `(re, im)` pairs from cloud CSV text.
pub fn csv_points(csv: &str) -> Vec<(f64, f64)> {
    csv.lines()
        .skip(1)
        .filter_map(|line| {
            let f: Vec<&str> = line.split(',').collect();
            Some((f.get(4)?.parse().ok()?, f.get(5)?.parse().ok()?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use bichroma_core::{root_cloud, Universe};

    fn attr(line: &str, name: &str) -> f64 {
        let start = line.find(&format!("{name}=\"")).unwrap() + name.len() + 2;
        let end = start + line[start..].find('"').unwrap();
        line[start..end].parse().unwrap()
    }

    #[test]
    fn two_roots_sit_on_the_real_axis() {
        let records = root_cloud(2, Universe::Monochromatic, false).unwrap();
        let svg = render(&record_points(&records)).unwrap();
        let circles: Vec<&str> = svg.lines().filter(|l| l.starts_with("<circle")).collect();
        assert_eq!(circles.len(), 2);
        let axis = svg.lines().find(|l| l.contains(r#"class="axis""#)).unwrap();
        for c in circles {
            assert_eq!(attr(c, "cy"), attr(axis, "y1"));
        }
        assert!(svg.contains(">0</text>") && svg.contains(">1</text>"));
    }

    #[test]
    fn empty_input_is_refused() {
        assert!(render(&[]).is_none());
        let dir = tempfile::tempdir().unwrap();
        let err = emit_svg(&[], &dir.path().join("x.svg")).unwrap_err();
        assert_eq!(err.kind(), io::ErrorKind::InvalidInput);
    }

    #[test]
    fn ticks_are_integers_within_range() {
        let t: Vec<i64> = ticks(-2.3, 3.9).collect();
        assert_eq!(t, vec![-2, -1, 0, 1, 2, 3]);
        let wide: Vec<i64> = ticks(-100.0, 100.0).collect();
        assert!(wide.len() <= 17 && wide.contains(&0));
    }

    #[test]
    fn csv_points_read_back() {
        let csv = "graph_key,colouring_id,degree,coeffs,re,im,residual\nA_,0,2,0/-1/1,0,0,0\nA_,0,2,0/-1/1,1,-0.5,0\n";
        assert_eq!(csv_points(csv), vec![(0.0, 0.0), (1.0, -0.5)]);
    }
}
