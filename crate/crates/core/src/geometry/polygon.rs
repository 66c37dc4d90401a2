use serde::{Deserialize, Serialize};

use super::Point;
use crate::error::{Error, Result};

/// Relative tolerance under which a vertex counts as lying on a clipping line.
const ON_LINE_REL: f64 = 1e-14;

/// Closed half-plane `{ p : normal · p <= offset }` with a unit normal.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HalfPlane {
    pub normal: Point,
    pub offset: f64,
}

impl HalfPlane {
    /// Builds a half-plane from any non-zero normal; the pair is rescaled so that
    /// the stored normal has unit length.
    pub fn new(normal: Point, offset: f64) -> Result<Self> {
        let n = normal.norm();
        if !n.is_finite() || n <= 0.0 || !offset.is_finite() {
            return Err(Error::InvalidArgument(
                "half-plane normal must be finite and non-zero".into(),
            ));
        }
        Ok(Self {
            normal: normal * (1.0 / n),
            offset: offset / n,
        })
    }

    /// The half-plane whose boundary passes through `point`, with outward `unit_normal`.
    pub fn through(point: Point, unit_normal: Point) -> Self {
        Self {
            normal: unit_normal,
            offset: unit_normal.dot(point),
        }
    }

    /// Signed distance: negative inside, positive outside.
    pub fn signed_distance(&self, p: Point) -> f64 {
        self.normal.dot(p) - self.offset
    }

    pub fn contains(&self, p: Point) -> bool {
        self.signed_distance(p) <= 0.0
    }

    /// The complementary closed half-plane.
    pub fn flipped(&self) -> Self {
        Self {
            normal: -self.normal,
            offset: -self.offset,
        }
    }

    pub fn translated(&self, v: Point) -> Self {
        Self {
            normal: self.normal,
            offset: self.offset + self.normal.dot(v),
        }
    }
}

/// A convex polygon with counter-clockwise vertices, or the empty polygon.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

impl ConvexPolygon {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Validates convexity and normalizes the orientation to counter-clockwise.
    ///
    /// Consecutive duplicates are dropped. Fewer than three distinct vertices, or zero
    /// enclosed area, is rejected.
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        if vertices.iter().any(|p| !p.is_finite()) {
            return Err(Error::NonFinite);
        }
        let mut vertices = dedup_cyclic(vertices, 0.0);
        if vertices.len() < 3 {
            return Err(Error::NonConvex("fewer than three distinct vertices".into()));
        }
        let signed = signed_area(&vertices);
        let scale = diameter_of(&vertices);
        if signed.abs() <= 1e-12 * scale * scale {
            return Err(Error::DegenerateGeometry {
                area: signed.abs(),
                threshold: 1e-12 * scale * scale,
            });
        }
        if signed < 0.0 {
            vertices.reverse();
        }
        let n = vertices.len();
        let tol = 1e-12 * scale * scale;
        for i in 0..n {
            let p = vertices[i];
            let q = vertices[(i + 1) % n];
            let r = vertices[(i + 2) % n];
            if (q - p).cross(r - q) < -tol {
                return Err(Error::NonConvex(format!("reflex turn at vertex {}", (i + 1) % n)));
            }
        }
        // A star-shaped self-intersecting vertex list passes the local test; the total
        // turning of a simple convex polygon is exactly one revolution.
        let turning: f64 = (0..n)
            .map(|i| {
                let e0 = vertices[(i + 1) % n] - vertices[i];
                let e1 = vertices[(i + 2) % n] - vertices[(i + 1) % n];
                e0.cross(e1).atan2(e0.dot(e1))
            })
            .sum();
        if (turning - std::f64::consts::TAU).abs() > 1e-6 {
            return Err(Error::NonConvex("vertex list winds more than once".into()));
        }
        Ok(Self { vertices })
    }

    /// Wraps vertices already known to be convex and counter-clockwise.
    pub(crate) fn from_ccw_unchecked(vertices: Vec<Point>) -> Self {
        Self { vertices }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Shoelace area, measured from the first vertex to limit cancellation.
    pub fn area(&self) -> f64 {
        if self.vertices.len() < 3 {
            return 0.0;
        }
        signed_area(&self.vertices).abs()
    }

    /// Area centroid; for degenerate input falls back to the vertex average.
    pub fn centroid(&self) -> Option<Point> {
        let n = self.vertices.len();
        if n == 0 {
            return None;
        }
        let o = self.vertices[0];
        let mut acc = Point::ORIGIN;
        let mut twice_area = 0.0;
        for i in 1..n.saturating_sub(1) {
            let p = self.vertices[i] - o;
            let q = self.vertices[i + 1] - o;
            let w = p.cross(q);
            twice_area += w;
            acc += (p + q) * w;
        }
        if twice_area.abs() > 0.0 {
            Some(o + acc * (1.0 / (3.0 * twice_area)))
        } else {
            let sum = self.vertices.iter().fold(Point::ORIGIN, |a, &p| a + p);
            Some(sum * (1.0 / n as f64))
        }
    }

    pub fn diameter(&self) -> f64 {
        diameter_of(&self.vertices)
    }

    /// Axis-aligned bounding box as `(min, max)`.
    pub fn bounding_box(&self) -> Option<(Point, Point)> {
        bounding_box(&self.vertices)
    }

    pub fn translated(&self, v: Point) -> Self {
        Self {
            vertices: self.vertices.iter().map(|&p| p + v).collect(),
        }
    }

    /// Intersection with a closed half-plane.
    ///
    /// Vertices within a relative `1e-14` of the cut line are kept as they are and no
    /// intersection point is generated next to them, so the output has no slivers.
    pub fn clip(&self, h: &HalfPlane) -> ConvexPolygon {
        let n = self.vertices.len();
        if n == 0 {
            return Self::empty();
        }
        let scale = self
            .vertices
            .iter()
            .map(|p| p.x.abs().max(p.y.abs()))
            .fold(h.offset.abs(), f64::max)
            .max(f64::MIN_POSITIVE);
        let eps = ON_LINE_REL * scale;
        let dist: Vec<f64> = self.vertices.iter().map(|&p| h.signed_distance(p)).collect();
        if dist.iter().all(|&d| d <= eps) {
            return self.clone();
        }
        if dist.iter().all(|&d| d >= -eps) {
            return Self::empty();
        }
        let mut out = Vec::with_capacity(n + 1);
        for i in 0..n {
            let j = (i + 1) % n;
            let (p, q) = (self.vertices[i], self.vertices[j]);
            let (dp, dq) = (dist[i], dist[j]);
            if dp <= eps {
                out.push(p);
            }
            if (dp < -eps && dq > eps) || (dp > eps && dq < -eps) {
                out.push(p + (q - p) * (dp / (dp - dq)));
            }
        }
        let out = dedup_cyclic(out, 0.0);
        if out.len() < 3 {
            Self::empty()
        } else {
            Self { vertices: out }
        }
    }

    /// Merges consecutive vertices closer than `tol`, and drops the result if it no
    /// longer encloses a polygon.
    pub fn merged(&self, tol: f64) -> ConvexPolygon {
        let out = dedup_cyclic(self.vertices.clone(), tol);
        if out.len() < 3 {
            Self::empty()
        } else {
            Self { vertices: out }
        }
    }

    pub fn contains(&self, p: Point) -> bool {
        let n = self.vertices.len();
        n >= 3
            && (0..n).all(|i| {
                let a = self.vertices[i];
                let b = self.vertices[(i + 1) % n];
                (b - a).cross(p - a) >= 0.0
            })
    }
}

pub(crate) fn signed_area(vertices: &[Point]) -> f64 {
    let n = vertices.len();
    if n < 3 {
        return 0.0;
    }
    let o = vertices[0];
    let mut twice = 0.0;
    for i in 1..n - 1 {
        twice += (vertices[i] - o).cross(vertices[i + 1] - o);
    }
    0.5 * twice
}

pub(crate) fn diameter_of(vertices: &[Point]) -> f64 {
    let mut d: f64 = 0.0;
    for (i, &p) in vertices.iter().enumerate() {
        for &q in &vertices[i + 1..] {
            d = d.max(p.distance(q));
        }
    }
    d
}

pub(crate) fn bounding_box(points: &[Point]) -> Option<(Point, Point)> {
    let first = *points.first()?;
    Some(points.iter().fold((first, first), |(lo, hi), p| {
        (
            Point::new(lo.x.min(p.x), lo.y.min(p.y)),
            Point::new(hi.x.max(p.x), hi.y.max(p.y)),
        )
    }))
}

fn dedup_cyclic(mut vertices: Vec<Point>, tol: f64) -> Vec<Point> {
    vertices.dedup_by(|b, a| a.distance(*b) <= tol);
    while vertices.len() > 1 && vertices[0].distance(*vertices.last().unwrap()) <= tol {
        vertices.pop();
    }
    vertices
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_square() -> ConvexPolygon {
        ConvexPolygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap()
    }

    fn x_at_most(c: f64) -> HalfPlane {
        HalfPlane::new(Point::new(1.0, 0.0), c).unwrap()
    }

    #[test]
    fn areas() {
        assert_eq!(unit_square().area(), 1.0);
        let tri = ConvexPolygon::new(vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(0.0, 1.0)])
            .unwrap();
        assert_eq!(tri.area(), 0.5);
        assert_eq!(ConvexPolygon::empty().area(), 0.0);
    }

    #[test]
    fn clip_cases() {
        let sq = unit_square();
        let half = sq.clip(&x_at_most(0.5));
        assert!((half.area() - 0.5).abs() < 1e-15);
        assert_eq!(half.len(), 4);
        assert_eq!(sq.clip(&x_at_most(2.0)), sq);
        assert!(sq.clip(&x_at_most(-1.0)).is_empty());
    }

    #[test]
    fn clip_through_vertices_adds_no_slivers() {
        let sq = unit_square();
        // diagonal x + y <= 1 passes exactly through two corners
        let h = HalfPlane::new(Point::new(1.0, 1.0), 1.0).unwrap();
        let t = sq.clip(&h);
        assert_eq!(t.len(), 3);
        assert!((t.area() - 0.5).abs() < 1e-15);
        // touching along an edge keeps the square
        assert_eq!(sq.clip(&x_at_most(1.0)), sq);
        assert!(sq.clip(&x_at_most(0.0)).is_empty());
    }

    #[test]
    fn orientation_is_normalized() {
        let cw = ConvexPolygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(0.0, 1.0),
            Point::new(1.0, 1.0),
            Point::new(1.0, 0.0),
        ])
        .unwrap();
        assert!(signed_area(cw.vertices()) > 0.0);
    }

    #[test]
    fn rejects_non_convex_and_degenerate() {
        let dart = vec![
            Point::new(0.0, 0.0),
            Point::new(2.0, 1.0),
            Point::new(0.0, 2.0),
            Point::new(0.5, 1.0),
        ];
        assert!(matches!(ConvexPolygon::new(dart), Err(Error::NonConvex(_))));
        let line = vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(2.0, 0.0)];
        assert!(ConvexPolygon::new(line).is_err());
        let pentagram: Vec<Point> = (0..5)
            .map(|k| Point::from_angle(k as f64 * 4.0 * std::f64::consts::PI / 5.0))
            .collect();
        assert!(matches!(ConvexPolygon::new(pentagram), Err(Error::NonConvex(_))));
    }

    #[test]
    fn half_plane_normal_is_unit() {
        let h = HalfPlane::new(Point::new(3.0, 4.0), 10.0).unwrap();
        assert!((h.normal.norm() - 1.0).abs() < 1e-12);
        assert!((h.offset - 2.0).abs() < 1e-15);
        assert!(HalfPlane::new(Point::ORIGIN, 1.0).is_err());
    }

    #[test]
    fn centroid_of_square() {
        let c = unit_square().centroid().unwrap();
        assert!(c.distance(Point::new(0.5, 0.5)) < 1e-15);
    }
}
