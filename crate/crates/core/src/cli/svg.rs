use std::fmt::Write;

use crate::assemble::CyclePair;
use crate::geometry::{convex_hull, line_intersection, segments_cross, Color, Point, Pos};

const SIZE: f64 = 800.0;
const MARGIN: f64 = 40.0;
const RED: &str = "#c62828";
const BLUE: &str = "#1565c0";

fn stroke(c: Color) -> &'static str {
    match c {
        Color::Red => RED,
        Color::Blue => BLUE,
    }
}

struct Frame {
    min_x: f64,
    max_y: f64,
    scale: f64,
}

impl Frame {
    fn new(points: &[Point], extra: Option<&Pos>) -> Frame {
        let mut xs: Vec<(f64, f64)> = points.iter().map(|p| p.pos.to_f64()).collect();
        xs.extend(extra.map(|p| p.to_f64()));
        let min_x = xs.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
        let max_x = xs.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
        let min_y = xs.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
        let max_y = xs.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
        let span = (max_x - min_x).max(max_y - min_y).max(1e-9);
        Frame { min_x, max_y, scale: (SIZE - 2.0 * MARGIN) / span }
    }

    fn map(&self, p: &Pos) -> (f64, f64) {
        let (x, y) = p.to_f64();
        (MARGIN + (x - self.min_x) * self.scale, MARGIN + (self.max_y - y) * self.scale)
    }
}

fn polygon(out: &mut String, frame: &Frame, verts: &[&Pos], attrs: &str) {
    let pts: Vec<String> = verts
        .iter()
        .map(|p| {
            let (x, y) = frame.map(p);
            format!("{x:.2},{y:.2}")
        })
        .collect();
    let _ = writeln!(out, r#"  <polygon points="{}" {attrs}/>"#, pts.join(" "));
}

fn line(out: &mut String, frame: &Frame, a: &Pos, b: &Pos, attrs: &str) {
    let (x1, y1) = frame.map(a);
    let (x2, y2) = frame.map(b);
    let _ = writeln!(out, r#"  <line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" {attrs}/>"#);
}

/// SVG 1.1 drawing of both cycles with crossings circled; with `trace`,
/// also the pivot, dotted blob hulls and dashed jump edges.
pub fn render(points: &[Point], pair: &CyclePair, trace: bool) -> String {
    let pivot = if trace { pair.trace.pivot.as_ref() } else { None };
    let frame = Frame::new(points, pivot);
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(out, r#"  <rect width="100%" height="100%" fill="white"/>"#);
    if trace {
        for blob in &pair.trace.blobs {
            let pos: Vec<Pos> = blob.points.iter().map(|&i| points[i].pos.clone()).collect();
            let hull = convex_hull(&pos);
            let verts: Vec<&Pos> = hull.vertices().iter().collect();
            let attrs = format!(r#"fill="none" stroke="{}" stroke-width="1" stroke-dasharray="1,3""#, stroke(blob.color));
            polygon(&mut out, &frame, &verts, &attrs);
        }
        for e in &pair.trace.jump_edges {
            let attrs = format!(r#"stroke="{}" stroke-width="1.5" stroke-dasharray="6,4" opacity="0.6""#, stroke(e.color));
            line(&mut out, &frame, &points[e.from].pos, &points[e.to].pos, &attrs);
        }
    }
    for (color, cycle) in [(Color::Red, &pair.red_cycle), (Color::Blue, &pair.blue_cycle)] {
        let verts: Vec<&Pos> = cycle.iter().map(|&i| &points[i].pos).collect();
        let attrs = format!(r#"fill="none" stroke="{}" stroke-width="2" stroke-linejoin="round""#, stroke(color));
        polygon(&mut out, &frame, &verts, &attrs);
    }
    let edges = |c: &[usize]| -> Vec<(usize, usize)> { (0..c.len()).map(|i| (c[i], c[(i + 1) % c.len()])).collect() };
    for (a, b) in edges(&pair.red_cycle) {
        for (c, d) in edges(&pair.blue_cycle) {
            let (pa, pb, pc, pd) = (&points[a].pos, &points[b].pos, &points[c].pos, &points[d].pos);
            if segments_cross(pa, pb, pc, pd).unwrap_or(false) {
                if let Some(x) = line_intersection(pa, pb, pc, pd) {
                    let (cx, cy) = frame.map(&x);
                    let _ = writeln!(out, r#"  <circle cx="{cx:.2}" cy="{cy:.2}" r="4" fill="none" stroke="black" stroke-width="1"/>"#);
                }
            }
        }
    }
    for p in points {
        let (cx, cy) = frame.map(&p.pos);
        let _ = writeln!(out, r#"  <circle cx="{cx:.2}" cy="{cy:.2}" r="3.5" fill="{}"/>"#, stroke(p.color));
    }
    if let Some(p) = pivot {
        let (cx, cy) = frame.map(p);
        let _ = writeln!(
            out,
            r#"  <path d="M {:.2} {:.2} L {:.2} {:.2} M {:.2} {:.2} L {:.2} {:.2}" stroke="black" stroke-width="2"/>"#,
            cx - 5.0,
            cy - 5.0,
            cx + 5.0,
            cy + 5.0,
            cx - 5.0,
            cy + 5.0,
            cx + 5.0,
            cy - 5.0
        );
    }
    out.push_str("</svg>\n");
    out
}
