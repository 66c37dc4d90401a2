use std::fmt;

use serde::{Deserialize, Serialize};

use super::{ConvexPolygon, Point};
use crate::error::{Error, Result};

/// Triangles with `|signed area| < DEGENERACY_REL · diam²` are rejected.
pub const DEGENERACY_REL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Vertex {
    A,
    B,
    C,
}

impl Vertex {
    pub const ALL: [Vertex; 3] = [Vertex::A, Vertex::B, Vertex::C];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Vertex {
        Self::ALL[i % 3]
    }

    pub fn next(self) -> Vertex {
        Self::from_index(self.index() + 1)
    }

    pub fn prev(self) -> Vertex {
        Self::from_index(self.index() + 2)
    }

    /// The side not touching this vertex.
    pub fn opposite_side(self) -> Side {
        match self {
            Vertex::A => Side::BC,
            Vertex::B => Side::CA,
            Vertex::C => Side::AB,
        }
    }

    /// The side that starts at this vertex (counter-clockwise).
    pub fn outgoing_side(self) -> Side {
        match self {
            Vertex::A => Side::AB,
            Vertex::B => Side::BC,
            Vertex::C => Side::CA,
        }
    }

    /// The side that ends at this vertex.
    pub fn incoming_side(self) -> Side {
        self.prev().outgoing_side()
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Vertex::A => "A",
            Vertex::B => "B",
            Vertex::C => "C",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    AB,
    BC,
    CA,
}

impl Side {
    pub const ALL: [Side; 3] = [Side::AB, Side::BC, Side::CA];

    /// `(start, end)` in counter-clockwise order.
    pub fn endpoints(self) -> (Vertex, Vertex) {
        match self {
            Side::AB => (Vertex::A, Vertex::B),
            Side::BC => (Vertex::B, Vertex::C),
            Side::CA => (Vertex::C, Vertex::A),
        }
    }

    pub fn opposite_vertex(self) -> Vertex {
        self.endpoints().1.next()
    }

    pub fn contains(self, v: Vertex) -> bool {
        let (s, e) = self.endpoints();
        s == v || e == v
    }
}

/// A non-degenerate triangle with counter-clockwise vertices.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Triangle {
    a: Point,
    b: Point,
    c: Point,
}

impl Triangle {
    /// Validates and orients the triangle. A clockwise input has `b` and `c` swapped.
    pub fn new(a: Point, b: Point, c: Point) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(Error::NonFinite);
        }
        let signed = 0.5 * (b - a).cross(c - a);
        let diam = a.distance(b).max(b.distance(c)).max(c.distance(a));
        let threshold = DEGENERACY_REL * diam * diam;
        if signed.is_nan() || signed.abs() < threshold || diam == 0.0 {
            return Err(Error::DegenerateGeometry {
                area: signed.abs(),
                threshold,
            });
        }
        Ok(if signed > 0.0 {
            Self { a, b, c }
        } else {
            Self { a, b: c, c: b }
        })
    }

    pub fn from_array(p: [Point; 3]) -> Result<Self> {
        Self::new(p[0], p[1], p[2])
    }

    pub fn vertices(&self) -> [Point; 3] {
        [self.a, self.b, self.c]
    }

    pub fn vertex(&self, v: Vertex) -> Point {
        match v {
            Vertex::A => self.a,
            Vertex::B => self.b,
            Vertex::C => self.c,
        }
    }

    pub fn side(&self, s: Side) -> (Point, Point) {
        let (p, q) = s.endpoints();
        (self.vertex(p), self.vertex(q))
    }

    pub fn side_length(&self, s: Side) -> f64 {
        let (p, q) = self.side(s);
        p.distance(q)
    }

    /// Unit vector along the side, from its start to its end vertex.
    pub fn side_direction(&self, s: Side) -> Point {
        let (p, q) = self.side(s);
        (q - p) * (1.0 / p.distance(q))
    }

    /// Unit normal of the side pointing away from the opposite vertex.
    pub fn outward_normal(&self, s: Side) -> Point {
        self.side_direction(s).right_normal()
    }

    /// Interior angle at `v`, in `(0, π)`.
    pub fn angle(&self, v: Vertex) -> f64 {
        let p = self.vertex(v);
        let u = self.vertex(v.next()) - p;
        let w = self.vertex(v.prev()) - p;
        u.cross(w).abs().atan2(u.dot(w))
    }

    pub fn angles(&self) -> [f64; 3] {
        Vertex::ALL.map(|v| self.angle(v))
    }

    pub fn area(&self) -> f64 {
        0.5 * (self.b - self.a).cross(self.c - self.a)
    }

    pub fn diameter(&self) -> f64 {
        Side::ALL
            .iter()
            .map(|&s| self.side_length(s))
            .fold(0.0, f64::max)
    }

    pub fn centroid(&self) -> Point {
        Point::new(
            (self.a.x + self.b.x + self.c.x) / 3.0,
            (self.a.y + self.b.y + self.c.y) / 3.0,
        )
    }

    pub fn as_polygon(&self) -> ConvexPolygon {
        ConvexPolygon::from_ccw_unchecked(vec![self.a, self.b, self.c])
    }

    /// Signed distance from `p` to the supporting line of `s`; positive on the side of
    /// the triangle.
    pub fn inward_distance(&self, s: Side, p: Point) -> f64 {
        let (start, _) = self.side(s);
        -self.outward_normal(s).dot(p - start)
    }

    /// Smallest inward distance over the three sides: positive strictly inside,
    /// negative outside the closed triangle.
    pub fn depth(&self, p: Point) -> f64 {
        Side::ALL
            .iter()
            .map(|&s| self.inward_distance(s, p))
            .fold(f64::INFINITY, f64::min)
    }

    /// Euclidean distance from `p` to the segment of side `s`.
    pub fn distance_to_side(&self, s: Side, p: Point) -> f64 {
        let (u, v) = self.side(s);
        let d = v - u;
        let t = ((p - u).dot(d) / d.dot(d)).clamp(0.0, 1.0);
        p.distance(u + d * t)
    }

    /// Cyclic relabeling so that `v` becomes vertex C; orientation is preserved.
    pub fn relabeled_with_c_at(&self, v: Vertex) -> Triangle {
        match v {
            Vertex::C => *self,
            Vertex::A => Triangle { a: self.b, b: self.c, c: self.a },
            Vertex::B => Triangle { a: self.c, b: self.a, c: self.b },
        }
    }

    pub fn map_points(&self, f: impl Fn(Point) -> Point) -> Result<Triangle> {
        Triangle::new(f(self.a), f(self.b), f(self.c))
    }
}

/// Maps a vertex label of `relabeled_with_c_at(pivot)` back to the original labeling.
pub fn original_label(pivot: Vertex, relabeled: Vertex) -> Vertex {
    // relabeled C == pivot, relabeled A == pivot.next(), relabeled B == pivot.prev()
    Vertex::from_index(relabeled.index() + pivot.index() + 1)
}

impl<'de> Deserialize<'de> for Triangle {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            a: Point,
            b: Point,
            c: Point,
        }
        let raw = Raw::deserialize(d)?;
        Triangle::new(raw.a, raw.b, raw.c).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn right() -> Triangle {
        Triangle::new(Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(0.0, 1.0)).unwrap()
    }

    #[test]
    fn outward_normals_of_right_triangle() {
        let t = right();
        assert_eq!(t.outward_normal(Side::AB), Point::new(0.0, -1.0));
        assert_eq!(t.outward_normal(Side::CA), Point::new(-1.0, 0.0));
        let n = t.outward_normal(Side::BC);
        assert!((n - Point::new(1.0, 1.0) * std::f64::consts::FRAC_1_SQRT_2).norm() < 1e-15);
    }

    #[test]
    fn normals_point_away_from_opposite_vertex() {
        let t = Triangle::new(Point::new(0.3, -1.0), Point::new(2.0, 0.4), Point::new(-0.5, 1.7)).unwrap();
        for s in Side::ALL {
            let (p, q) = t.side(s);
            let opp = t.vertex(s.opposite_vertex());
            assert!(t.outward_normal(s).dot(opp - p.midpoint(q)) < 0.0);
        }
    }

    #[test]
    fn clockwise_input_is_reoriented() {
        let t = Triangle::new(Point::new(0.0, 0.0), Point::new(0.0, 1.0), Point::new(1.0, 0.0)).unwrap();
        assert!(t.area() > 0.0);
        assert_eq!(t.vertex(Vertex::B), Point::new(1.0, 0.0));
    }

    #[test]
    fn degenerate_rejected() {
        let e = Triangle::new(Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(2.0, 0.0));
        assert!(matches!(e, Err(Error::DegenerateGeometry { .. })));
        let e = Triangle::new(Point::new(0.0, 0.0), Point::new(f64::NAN, 0.0), Point::new(2.0, 1.0));
        assert!(matches!(e, Err(Error::NonFinite)));
    }

    #[test]
    fn angles_sum_to_pi() {
        let t = right();
        let [a, b, c] = t.angles();
        assert!((a - FRAC_PI_2).abs() < 1e-15);
        assert!((a + b + c - PI).abs() < 1e-15);
    }

    #[test]
    fn relabeling_round_trips() {
        let t = Triangle::new(Point::new(0.0, 0.0), Point::new(3.0, 0.0), Point::new(1.0, 2.0)).unwrap();
        for pivot in Vertex::ALL {
            let r = t.relabeled_with_c_at(pivot);
            assert!(r.area() > 0.0);
            for v in Vertex::ALL {
                assert_eq!(r.vertex(v), t.vertex(original_label(pivot, v)));
            }
        }
    }

    #[test]
    fn depth_sign() {
        let t = right();
        assert!(t.depth(Point::new(0.2, 0.2)) > 0.0);
        assert!(t.depth(Point::new(0.5, -0.1)) < 0.0);
        assert!(t.depth(Point::new(0.5, 0.0)).abs() < 1e-15);
    }
}
