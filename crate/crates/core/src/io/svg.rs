//! SVG figures: the triangle with its three regions, the perpendiculars from the
//! point (or the two cut lines when the point is outside), right-angle marks at the
//! feet, and labelled vertices.

use std::fmt::Write;

use crate::geometry::{bounding_box, foot_of_perpendicular, ConvexPolygon, Point, Side, Triangle, Vertex};
use crate::partition::{Kind, Location};

use super::report::{MassOutcome, Outcome, Report, TriangleOutcome};

const FILLS: [&str; 3] = ["#e41a1c", "#377eb8", "#4daf4a"];

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SvgOptions {
    /// Drawing width in pixels; the height follows the aspect ratio.
    pub width: f64,
    pub margin: f64,
    pub show_areas: bool,
}

impl Default for SvgOptions {
    fn default() -> Self {
        Self {
            width: 640.0,
            margin: 40.0,
            show_areas: true,
        }
    }
}

/// World (y-up) to SVG (y-down) mapping.
struct Frame {
    origin: Point,
    top: f64,
    scale: f64,
    margin: f64,
    width: f64,
    height: f64,
}

impl Frame {
    fn fit(points: &[Point], opts: &SvgOptions) -> Self {
        let (lo, hi) = bounding_box(points).unwrap_or((Point::ORIGIN, Point::new(1.0, 1.0)));
        let span = (hi.x - lo.x).max(hi.y - lo.y).max(f64::MIN_POSITIVE);
        let scale = (opts.width - 2.0 * opts.margin) / span;
        Self {
            origin: lo,
            top: hi.y,
            scale,
            margin: opts.margin,
            width: (hi.x - lo.x) * scale + 2.0 * opts.margin,
            height: (hi.y - lo.y) * scale + 2.0 * opts.margin,
        }
    }

    fn map(&self, p: Point) -> (f64, f64) {
        (
            self.margin + self.scale * (p.x - self.origin.x),
            self.margin + self.scale * (self.top - p.y),
        )
    }

    fn xy(&self, p: Point) -> String {
        let (x, y) = self.map(p);
        format!("{} {}", num(x), num(y))
    }

    fn header(&self, out: &mut String) {
        let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            out,
            "<!-- y-up input coordinates drawn y-down: X = {m} + {s} * (x - {x0}), Y = {m} + {s} * ({y1} - y) -->",
            m = num(self.margin),
            s = num6(self.scale),
            x0 = num6(self.origin.x),
            y1 = num6(self.top),
        );
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
            w = num(self.width),
            h = num(self.height)
        );
        let _ = writeln!(out, r#"<rect x="0" y="0" width="{}" height="{}" fill="white"/>"#, num(self.width), num(self.height));
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

fn num6(v: f64) -> String {
    let s = format!("{v:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

fn polygon_path(frame: &Frame, poly: &ConvexPolygon) -> String {
    let mut d = String::new();
    for (i, &p) in poly.vertices().iter().enumerate() {
        let _ = write!(d, "{}{} ", if i == 0 { "M " } else { "L " }, frame.xy(p));
    }
    d.push('Z');
    d
}

fn segment(out: &mut String, frame: &Frame, p: Point, q: Point, style: &str) {
    let _ = writeln!(out, r#"<path d="M {} L {}" {style}/>"#, frame.xy(p), frame.xy(q));
}

fn label(out: &mut String, frame: &Frame, at: Point, dx: f64, dy: f64, text: &str, size: u32) {
    let (x, y) = frame.map(at);
    let _ = writeln!(
        out,
        r#"<text x="{}" y="{}" font-family="serif" font-size="{size}" text-anchor="middle">{text}</text>"#,
        num(x + dx),
        num(y + dy)
    );
}

/// Right-angle mark at `foot`, spanned by unit vectors `u` (along the side) and `w`
/// (along the perpendicular), with world size `m`.
fn right_angle(out: &mut String, frame: &Frame, foot: Point, u: Point, w: Point, m: f64) {
    let _ = writeln!(
        out,
        r#"<path d="M {} L {} L {}" fill="none" stroke="black" stroke-width="0.8"/>"#,
        frame.xy(foot + u * m),
        frame.xy(foot + u * m + w * m),
        frame.xy(foot + w * m)
    );
}

fn regions(out: &mut String, frame: &Frame, regions: &[ConvexPolygon; 3]) {
    for (poly, fill) in regions.iter().zip(FILLS) {
        if poly.is_empty() {
            continue;
        }
        let _ = writeln!(
            out,
            r#"<path d="{}" fill="{fill}" fill-opacity="0.3" stroke="none"/>"#,
            polygon_path(frame, poly)
        );
    }
}

fn area_labels(out: &mut String, frame: &Frame, regions: &[ConvexPolygon; 3], names: [&str; 3]) {
    for (poly, name) in regions.iter().zip(names) {
        if let (false, Some(c)) = (poly.is_empty(), poly.centroid()) {
            label(out, frame, c, 0.0, 4.0, &format!("{name} = {}", num6(poly.area())), 11);
        }
    }
}

fn triangle_figure(t: &TriangleOutcome, opts: &SvgOptions) -> String {
    let tri = Triangle::from_array(t.triangle).expect("report triangle is valid");
    let diam = tri.diameter();
    let x = t.point;
    let exterior = t.classification.kind == Kind::ObtuseExterior || t.location == Location::Exterior;
    let ext = 0.08 * diam;

    let feet: Vec<(Side, Point)> = Side::ALL
        .iter()
        .map(|&s| {
            let (p, q) = tri.side(s);
            (s, foot_of_perpendicular(x, p, q))
        })
        .collect();

    let mut pts: Vec<Point> = tri.vertices().to_vec();
    pts.push(x);
    for &(s, f) in &feet {
        pts.push(f);
        if exterior {
            let dir = tri.outward_normal(s);
            pts.extend([x - dir * ext, x + dir * ext, f - dir * ext, f + dir * ext]);
        }
    }
    let frame = Frame::fit(&pts, opts);
    let mut out = String::new();
    frame.header(&mut out);
    regions(&mut out, &frame, &t.regions);
    let _ = writeln!(
        out,
        r#"<path d="{}" fill="none" stroke="black" stroke-width="1.5"/>"#,
        polygon_path(&frame, &tri.as_polygon())
    );

    let obtuse = t.classification.obtuse_vertex;
    let mark = 0.035 * diam;
    for &(s, f) in &feet {
        let gap = x.distance(f);
        if gap <= 1e-9 * diam {
            continue;
        }
        let w = (x - f) * (1.0 / gap);
        let u = tri.side_direction(s);
        let m = mark.min(0.5 * gap);
        if exterior {
            let cut_line = obtuse.is_some_and(|c| s.contains(c));
            if cut_line {
                // full cut line through the point, past the foot on the far side
                let dir = -w;
                segment(&mut out, &frame, x - dir * ext, f + dir * ext, r#"stroke="black" stroke-width="1""#);
                let name = if obtuse.is_some_and(|c| s == c.outgoing_side()) { "a" } else { "b" };
                label(&mut out, &frame, f + dir * ext, 0.0, -6.0, name, 14);
            } else {
                segment(&mut out, &frame, x, f, r#"stroke="black" stroke-width="1" stroke-dasharray="5 4""#);
            }
        } else {
            segment(&mut out, &frame, x, f, r#"stroke="black" stroke-width="1""#);
        }
        right_angle(&mut out, &frame, f, u, w, m);
    }

    let c = tri.centroid();
    for v in Vertex::ALL {
        let p = tri.vertex(v);
        let away = (p - c).normalized().unwrap_or(Point::new(0.0, 1.0));
        let (dx, dy) = (14.0 * away.x, -14.0 * away.y + 5.0);
        label(&mut out, &frame, p, dx, dy, &v.to_string(), 16);
    }
    let (px, py) = frame.map(x);
    let _ = writeln!(out, r#"<circle cx="{}" cy="{}" r="3" fill="black"/>"#, num(px), num(py));
    label(&mut out, &frame, x, 14.0, -8.0, "X0", 14);
    if opts.show_areas {
        area_labels(&mut out, &frame, &t.regions, ["P(A)", "P(B)", "P(C)"]);
    }
    out.push_str("</svg>\n");
    out
}

fn mass_figure(m: &MassOutcome, opts: &SvgOptions) -> String {
    let poly = &m.polygon;
    let apex = m.apex;
    let reach = poly
        .vertices()
        .iter()
        .map(|p| p.distance(apex))
        .fold(0.0, f64::max)
        + 0.1 * poly.diameter();
    let dirs = m.rays_deg.map(|a| Point::from_angle(a.to_radians()));
    let mut pts = poly.vertices().to_vec();
    pts.push(apex);
    pts.extend(dirs.iter().map(|&d| apex + d * reach));
    let frame = Frame::fit(&pts, opts);
    let mut out = String::new();
    frame.header(&mut out);
    regions(&mut out, &frame, &m.regions);
    let _ = writeln!(
        out,
        r#"<path d="{}" fill="none" stroke="black" stroke-width="1.5"/>"#,
        polygon_path(&frame, poly)
    );
    for d in dirs {
        segment(&mut out, &frame, apex, apex + d * reach, r#"stroke="black" stroke-width="1""#);
    }
    let (px, py) = frame.map(apex);
    let _ = writeln!(out, r#"<circle cx="{}" cy="{}" r="3" fill="black"/>"#, num(px), num(py));
    if opts.show_areas {
        area_labels(&mut out, &frame, &m.regions, ["r1", "r2", "r3"]);
    }
    out.push_str("</svg>\n");
    out
}

/// Renders a report as an SVG 1.1 document; sweeps have no figure.
pub fn emit_svg(report: &Report, opts: &SvgOptions) -> Option<String> {
    match &report.outcome {
        Outcome::Triangle(t) => Some(triangle_figure(t, opts)),
        Outcome::MassPartition(m) => Some(mass_figure(m, opts)),
        Outcome::Sweep(_) => None,
    }
}
