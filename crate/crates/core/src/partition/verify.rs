use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{region_areas, region_polygons, Point, RegionAreas, Side, Triangle};

/// Position of a point relative to a triangle, up to a tolerance band.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Location {
    Interior,
    Boundary { side: Side },
    Exterior,
}

/// Classifies `x` as interior, boundary, or exterior with a band of `band` length
/// units around the triangle's boundary.
pub fn locate(tri: &Triangle, x: Point, band: f64) -> Location {
    let depth = tri.depth(x);
    if depth > band {
        Location::Interior
    } else if depth < -band {
        Location::Exterior
    } else {
        let side = Side::ALL
            .into_iter()
            .min_by(|&s, &t| tri.distance_to_side(s, x).total_cmp(&tri.distance_to_side(t, x)))
            .unwrap();
        if tri.distance_to_side(side, x) <= band {
            Location::Boundary { side }
        } else {
            Location::Exterior
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub point: Point,
    pub areas: RegionAreas,
    pub target: f64,
    /// `max_i |P_i − |T|/3|`.
    pub deviation: f64,
    pub tolerance: f64,
    pub location: Location,
    pub region_vertex_counts: [usize; 3],
    pub pass: bool,
}

/// Recomputes the areas at `x` and checks them against `|T|/3` with tolerance
/// `tol·|T|`; the location band is `tol·diam`.
pub fn verify_partition(tri: &Triangle, x: Point, tol: f64) -> VerifyReport {
    let areas = region_areas(tri, x);
    let target = tri.area() / 3.0;
    let deviation = areas.max_deviation(target);
    let tolerance = tol * tri.area();
    let diam = tri.diameter();
    let polys = region_polygons(tri, x);
    VerifyReport {
        point: x,
        areas,
        target,
        deviation,
        tolerance,
        location: locate(tri, x, tol * diam),
        region_vertex_counts: polys.map(|p| p.merged(1e-12 * diam).len()),
        pass: deviation <= tolerance,
    }
}

/// `P(opposite, x) − min(other two)` for `x` on a side of the triangle.
pub fn lemma_margin(tri: &Triangle, x: Point) -> Result<f64> {
    let diam = tri.diameter();
    let side = Side::ALL
        .into_iter()
        .min_by(|&s, &t| tri.distance_to_side(s, x).total_cmp(&tri.distance_to_side(t, x)))
        .unwrap();
    if tri.distance_to_side(side, x) > 1e-12 * diam {
        return Err(Error::InvalidArgument("point is not on the triangle's boundary".into()));
    }
    let areas = region_areas(tri, x);
    let opposite = side.opposite_vertex();
    let (s, e) = side.endpoints();
    Ok(areas.get(opposite) - areas.get(s).min(areas.get(e)))
}

/// Whether, at the boundary point `x`, the region at the vertex opposite the side
/// through `x` exceeds one of the other two regions.
pub fn lemma_check(tri: &Triangle, x: Point) -> Result<bool> {
    Ok(lemma_margin(tri, x)? > 0.0)
}
