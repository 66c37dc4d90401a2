use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::geometry::{Triangle, Vertex};

/// Band used for the right-angle test (radians) and for the boundary test on the
/// criterion margin.
pub const CLASSIFY_TOL: f64 = 1e-9;

/// Where the equal-area point of a triangle lies, as decided from its angles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Acute,
    Right,
    ObtuseInterior,
    ObtuseBoundary,
    ObtuseExterior,
}

impl Kind {
    pub fn is_obtuse(self) -> bool {
        matches!(self, Kind::ObtuseInterior | Kind::ObtuseBoundary | Kind::ObtuseExterior)
    }

    /// Kinds whose equal-area point is strictly inside the triangle.
    pub fn is_interior(self) -> bool {
        matches!(self, Kind::Acute | Kind::Right | Kind::ObtuseInterior)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Acute => "acute",
            Kind::Right => "right",
            Kind::ObtuseInterior => "obtuse-interior",
            Kind::ObtuseBoundary => "obtuse-boundary",
            Kind::ObtuseExterior => "obtuse-exterior",
        }
    }
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    pub kind: Kind,
    /// Vertex carrying the largest angle; for obtuse kinds this is the obtuse vertex.
    pub max_angle_vertex: Vertex,
    pub obtuse_vertex: Option<Vertex>,
    /// `lhs − rhs` of the tangent criterion; zero for non-obtuse triangles.
    pub criterion_margin: f64,
}

/// Both sides of the tangent criterion for a triangle whose obtuse vertex is `C`:
///
/// `sqrt((1 + tan²A)·tanB) + sqrt((1 + tan²B)·tanA)` versus `sqrt(3·(tanA + tanB))`.
pub fn criterion_sides(tan_a: f64, tan_b: f64) -> (f64, f64) {
    let lhs = ((1.0 + tan_a * tan_a) * tan_b).sqrt() + ((1.0 + tan_b * tan_b) * tan_a).sqrt();
    let rhs = (3.0 * (tan_a + tan_b)).sqrt();
    (lhs, rhs)
}

pub fn max_angle_vertex(tri: &Triangle) -> Vertex {
    let angles = tri.angles();
    let mut best = 0;
    for i in 1..3 {
        if angles[i] > angles[best] {
            best = i;
        }
    }
    Vertex::from_index(best)
}

pub fn classify(tri: &Triangle, tol: f64) -> Classification {
    let c = max_angle_vertex(tri);
    let angle_c = tri.angle(c);
    if angle_c <= FRAC_PI_2 + tol {
        let kind = if (angle_c - FRAC_PI_2).abs() <= tol {
            Kind::Right
        } else {
            Kind::Acute
        };
        return Classification {
            kind,
            max_angle_vertex: c,
            obtuse_vertex: None,
            criterion_margin: 0.0,
        };
    }
    let rel = tri.relabeled_with_c_at(c);
    let (lhs, rhs) = criterion_sides(rel.angle(Vertex::A).tan(), rel.angle(Vertex::B).tan());
    let margin = lhs - rhs;
    let kind = if margin.abs() <= tol {
        Kind::ObtuseBoundary
    } else if margin > 0.0 {
        Kind::ObtuseInterior
    } else {
        Kind::ObtuseExterior
    };
    Classification {
        kind,
        max_angle_vertex: c,
        obtuse_vertex: Some(c),
        criterion_margin: margin,
    }
}
