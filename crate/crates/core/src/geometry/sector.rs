//! Angular sectors and the three perpendicular-bounded regions of a triangle.
//!
//! For a point `x` and a triangle `ABC`, draw through `x` the lines perpendicular to
//! the three sides. The region at vertex `V` is the part of the triangle in the sector
//! at `x` bounded by the perpendiculars to the two sides meeting at `V`, opening
//! toward `V`. Its boundary rays point along the outward normals of those two sides,
//! so the sector at `V` has angular width `π − ∠V` and the three sectors tile the
//! plane. The definition applies to every `x` in the plane, inside or not.

use serde::{Deserialize, Serialize};

use super::{ConvexPolygon, HalfPlane, Point, Triangle, Vertex};

/// Convex angular region at `apex`, swept counter-clockwise from the ray bounded by
/// `right` to the ray bounded by `left`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Sector {
    pub apex: Point,
    pub right: HalfPlane,
    pub left: HalfPlane,
    from_dir: Point,
    to_dir: Point,
}

impl Sector {
    /// Sector from ray `from_dir` counter-clockwise to ray `to_dir`. Both directions must
    /// be unit vectors with a counter-clockwise gap strictly below `π`.
    pub fn between(apex: Point, from_dir: Point, to_dir: Point) -> Self {
        // left of `from_dir`: cross(from, u) >= 0; right of `to_dir`: cross(to, u) <= 0
        Self {
            apex,
            right: HalfPlane::through(apex, from_dir.right_normal()),
            left: HalfPlane::through(apex, to_dir.perp()),
            from_dir,
            to_dir,
        }
    }

    pub fn width(&self) -> f64 {
        self.from_dir.ccw_angle_to(self.to_dir)
    }

    pub fn rays(&self) -> (Point, Point) {
        (self.from_dir, self.to_dir)
    }

    pub fn contains(&self, p: Point) -> bool {
        self.right.contains(p) && self.left.contains(p)
    }

    pub fn translated(&self, v: Point) -> Self {
        Self {
            apex: self.apex + v,
            right: self.right.translated(v),
            left: self.left.translated(v),
            ..*self
        }
    }

    pub fn clip(&self, poly: &ConvexPolygon) -> ConvexPolygon {
        poly.clip(&self.right).clip(&self.left)
    }
}

/// The sector at `x` belonging to vertex `v`.
pub fn sector_at_vertex(tri: &Triangle, v: Vertex, x: Point) -> Sector {
    Sector::between(
        x,
        tri.outward_normal(v.incoming_side()),
        tri.outward_normal(v.outgoing_side()),
    )
}

/// Values of the three region areas at a point.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegionAreas {
    pub at_a: f64,
    pub at_b: f64,
    pub at_c: f64,
}

impl RegionAreas {
    pub fn get(&self, v: Vertex) -> f64 {
        match v {
            Vertex::A => self.at_a,
            Vertex::B => self.at_b,
            Vertex::C => self.at_c,
        }
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.at_a, self.at_b, self.at_c]
    }

    pub fn from_array([at_a, at_b, at_c]: [f64; 3]) -> Self {
        Self { at_a, at_b, at_c }
    }

    pub fn sum(&self) -> f64 {
        self.at_a + self.at_b + self.at_c
    }

    pub fn min(&self) -> f64 {
        self.at_a.min(self.at_b).min(self.at_c)
    }

    /// Label of the smallest area; ties go to the earliest vertex.
    pub fn argmin(&self) -> Vertex {
        let arr = self.as_array();
        let mut best = 0;
        for i in 1..3 {
            if arr[i] < arr[best] {
                best = i;
            }
        }
        Vertex::from_index(best)
    }

    /// `max_i |area_i − target|`.
    pub fn max_deviation(&self, target: f64) -> f64 {
        self.as_array()
            .iter()
            .map(|a| (a - target).abs())
            .fold(0.0, f64::max)
    }
}

/// Works in a frame centred on the triangle's centroid so that clipping offsets stay
/// small relative to the triangle even for far-away coordinates.
struct LocalFrame {
    origin: Point,
    tri: Triangle,
    poly: ConvexPolygon,
}

impl LocalFrame {
    fn new(tri: &Triangle) -> Self {
        let origin = tri.centroid();
        let [a, b, c] = tri.vertices();
        // translation preserves orientation and non-degeneracy up to rounding
        let local = Triangle::new(a - origin, b - origin, c - origin).unwrap_or(*tri);
        Self {
            origin,
            poly: local.as_polygon(),
            tri: local,
        }
    }

    fn region(&self, v: Vertex, x: Point) -> ConvexPolygon {
        sector_at_vertex(&self.tri, v, x - self.origin).clip(&self.poly)
    }
}

pub fn region_area(tri: &Triangle, v: Vertex, x: Point) -> f64 {
    LocalFrame::new(tri).region(v, x).area()
}

/// The region itself, as a polygon in the caller's coordinates.
pub fn region_polygon(tri: &Triangle, v: Vertex, x: Point) -> ConvexPolygon {
    let frame = LocalFrame::new(tri);
    frame.region(v, x).translated(frame.origin)
}

pub fn region_polygons(tri: &Triangle, x: Point) -> [ConvexPolygon; 3] {
    let frame = LocalFrame::new(tri);
    Vertex::ALL.map(|v| frame.region(v, x).translated(frame.origin))
}

/// All three region areas at `x`.
pub fn region_areas(tri: &Triangle, x: Point) -> RegionAreas {
    let frame = LocalFrame::new(tri);
    RegionAreas::from_array(Vertex::ALL.map(|v| frame.region(v, x).area()))
}

/// Smallest of the three region areas at `x`.
pub fn min_area_f(tri: &Triangle, x: Point) -> f64 {
    region_areas(tri, x).min()
}
