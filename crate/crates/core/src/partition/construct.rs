//! Exact constructions for obtuse triangles: the closed-form point on the longest
//! side in the boundary case, and the two perpendicular cut lines whose intersection
//! is the equal-area point in the exterior case.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::geometry::{HalfPlane, Point, Side, Triangle, Vertex};

use super::classify::{max_angle_vertex, CLASSIFY_TOL};

fn obtuse_relabeled(tri: &Triangle) -> Result<(Vertex, Triangle)> {
    let c = max_angle_vertex(tri);
    if tri.angle(c) <= FRAC_PI_2 + CLASSIFY_TOL {
        return Err(Error::InvalidArgument(
            "the construction requires an obtuse triangle".into(),
        ));
    }
    Ok((c, tri.relabeled_with_c_at(c)))
}

/// `(|AX0|, |BX0|)` from the closed form, with `C` the obtuse vertex. At the boundary
/// case the two distances add up to `|AB|`.
pub fn boundary_distances(tri: &Triangle) -> Result<(f64, f64)> {
    let (_, rel) = obtuse_relabeled(tri)?;
    let ta = rel.angle(Vertex::A).tan();
    let tb = rel.angle(Vertex::B).tan();
    let ab = rel.side_length(Side::AB);
    let denom = 3.0 * (ta + tb);
    Ok((
        ((1.0 + ta * ta) * tb / denom).sqrt() * ab,
        ((1.0 + tb * tb) * ta / denom).sqrt() * ab,
    ))
}

/// The point on the side opposite the obtuse vertex at distance `|AX0|` from `A`.
pub fn boundary_point_closed_form(tri: &Triangle) -> Result<Point> {
    let (_, rel) = obtuse_relabeled(tri)?;
    let (ax, _) = boundary_distances(tri)?;
    Ok(rel.vertex(Vertex::A) + rel.side_direction(Side::AB) * ax)
}

/// Unit vector along `side` pointing away from its endpoint `keep`.
fn away_from(tri: &Triangle, side: Side, keep: Vertex) -> Result<Point> {
    let (start, end) = side.endpoints();
    if keep == start {
        Ok(tri.side_direction(side))
    } else if keep == end {
        Ok(-tri.side_direction(side))
    } else {
        Err(Error::InvalidArgument(format!(
            "vertex {keep} is not an endpoint of side {side:?}"
        )))
    }
}

/// Offset `d` of the line perpendicular to `side` such that `{p : n·p <= d}`, with `n`
/// the unit direction along the side pointing away from `keep`, cuts off exactly
/// `target_area` of the triangle on the side of `keep`.
///
/// The cut area grows monotonically in `d`; it is found by bisection down to adjacent
/// floating-point offsets.
pub fn cut_line_offset(tri: &Triangle, side: Side, keep: Vertex, target_area: f64) -> Result<f64> {
    let total = tri.area();
    if !(target_area > 0.0 && target_area < total) {
        return Err(Error::InvalidArgument(format!(
            "target area {target_area} outside (0, {total})"
        )));
    }
    let n = away_from(tri, side, keep)?;
    // bisection in a frame centred on the triangle
    let origin = tri.centroid();
    let poly = tri.as_polygon().translated(-origin);
    let proj: Vec<f64> = poly.vertices().iter().map(|&p| n.dot(p)).collect();
    let mut lo = proj.iter().copied().fold(f64::INFINITY, f64::min);
    let mut hi = proj.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let area_at = |d: f64| poly.clip(&HalfPlane::through(n * d, n)).area();
    for _ in 0..2000 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if area_at(mid) < target_area {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let d = if (area_at(lo) - target_area).abs() <= (area_at(hi) - target_area).abs() {
        lo
    } else {
        hi
    };
    Ok(d + n.dot(origin))
}

/// The cutting half-plane itself (containing `keep`).
pub fn cut_half_plane(tri: &Triangle, side: Side, keep: Vertex, target_area: f64) -> Result<HalfPlane> {
    let n = away_from(tri, side, keep)?;
    let d = cut_line_offset(tri, side, keep, target_area)?;
    Ok(HalfPlane { normal: n, offset: d })
}

/// Lines `a` (perpendicular to `CA`, cutting a third at `A`) and `b` (perpendicular to
/// `BC`, cutting a third at `B`) for the triangle relabeled so `C` is obtuse, in the
/// caller's labeling: `(obtuse vertex, line a, line b)`.
pub fn exterior_cut_lines(tri: &Triangle) -> Result<(Vertex, HalfPlane, HalfPlane)> {
    let (c, rel) = obtuse_relabeled(tri)?;
    let third = rel.area() / 3.0;
    let a = cut_half_plane(&rel, Side::CA, Vertex::A, third)?;
    let b = cut_half_plane(&rel, Side::BC, Vertex::B, third)?;
    Ok((c, a, b))
}

/// Intersection of the boundary lines of two half-planes.
pub fn line_intersection(h: &HalfPlane, k: &HalfPlane) -> Option<Point> {
    let det = h.normal.cross(k.normal);
    if det.abs() < 1e-12 {
        return None;
    }
    let x = (h.offset * k.normal.y - k.offset * h.normal.y) / det;
    let y = (h.normal.x * k.offset - k.normal.x * h.offset) / det;
    let p = Point::new(x, y);
    p.is_finite().then_some(p)
}

/// Intersection of the two cut lines.
pub fn exterior_point(tri: &Triangle) -> Result<Point> {
    let (_, a, b) = exterior_cut_lines(tri)?;
    line_intersection(&a, &b)
        .ok_or_else(|| Error::InvalidArgument("cut lines are parallel".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::region_areas;

    fn boundary_isosceles() -> Triangle {
        Triangle::new(Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(0.5, 0.5 * 0.5f64.sqrt())).unwrap()
    }

    fn right() -> Triangle {
        Triangle::new(Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(0.0, 1.0)).unwrap()
    }

    #[test]
    fn boundary_point_is_midpoint_for_isosceles() {
        let t = boundary_isosceles();
        let p = boundary_point_closed_form(&t).unwrap();
        assert!(p.distance(Point::new(0.5, 0.0)) < 1e-15);
        let (ax, bx) = boundary_distances(&t).unwrap();
        assert!((ax + bx - 1.0).abs() < 1e-12);
        let areas = region_areas(&t, p);
        assert!(areas.max_deviation(t.area() / 3.0) < 1e-9 * t.area());
    }

    #[test]
    fn boundary_point_lies_on_ab() {
        let t = Triangle::new(Point::new(0.0, 0.0), Point::new(3.0, 0.0), Point::new(1.0, 0.4)).unwrap();
        let p = boundary_point_closed_form(&t).unwrap();
        let (a, b) = t.side(Side::AB);
        assert!((b - a).normalized().unwrap().cross(p - a).abs() < 1e-12);
    }

    #[test]
    fn closed_form_rejects_acute() {
        let t = Triangle::new(Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(0.4, 0.9)).unwrap();
        assert!(boundary_point_closed_form(&t).is_err());
        assert!(exterior_point(&t).is_err());
    }

    #[test]
    fn cut_line_matches_quadratic() {
        // horizontal lines; area above y is (1 − y)²/2, area below is 1/2 − (1 − y)²/2
        let t = right();
        let target = 1.0 / 6.0;
        let d = cut_line_offset(&t, Side::CA, Vertex::C, target).unwrap();
        // n points from C toward A, i.e. (0, −1): region is −y <= d
        let y = -d;
        assert!((y - (1.0 - (1.0f64 / 3.0).sqrt())).abs() < 1e-14, "{y}");
        let d = cut_line_offset(&t, Side::CA, Vertex::A, target).unwrap();
        assert!((d - (1.0 - (2.0f64 / 3.0).sqrt())).abs() < 1e-14, "{d}");

        let h = cut_half_plane(&t, Side::CA, Vertex::A, target).unwrap();
        let area = t.as_polygon().clip(&h).area();
        assert!((area - target).abs() <= 1e-14 * t.area());
    }

    #[test]
    fn cut_line_is_monotone_in_target() {
        let t = Triangle::new(Point::new(0.0, 0.0), Point::new(2.0, 0.0), Point::new(0.3, 1.1)).unwrap();
        let mut prev = f64::NEG_INFINITY;
        for k in 1..20 {
            let target = t.area() * k as f64 / 20.0;
            let d = cut_line_offset(&t, Side::AB, Vertex::A, target).unwrap();
            assert!(d > prev);
            prev = d;
        }
        assert!(cut_line_offset(&t, Side::AB, Vertex::A, t.area()).is_err());
        assert!(cut_line_offset(&t, Side::AB, Vertex::A, 0.0).is_err());
        assert!(cut_line_offset(&t, Side::AB, Vertex::C, 0.1).is_err());
    }

    #[test]
    fn half_area_cut_of_isosceles_hits_axis() {
        // brute-force sweep oracle: the axis of symmetry x = 1 halves the triangle
        let t = Triangle::new(Point::new(0.0, 0.0), Point::new(2.0, 0.0), Point::new(1.0, 0.7)).unwrap();
        let d = cut_line_offset(&t, Side::AB, Vertex::A, t.area() / 2.0).unwrap();
        assert!((d - 1.0).abs() < 1e-14);
        let sweep = (0..=20000)
            .map(|i| i as f64 / 10000.0)
            .min_by(|&x, &y| {
                let f = |s: f64| {
                    let h = HalfPlane::new(Point::new(1.0, 0.0), s).unwrap();
                    (t.as_polygon().clip(&h).area() - t.area() / 2.0).abs()
                };
                f(x).partial_cmp(&f(y)).unwrap()
            })
            .unwrap();
        assert!((sweep - d).abs() <= 1e-4);
    }

    #[test]
    fn exterior_point_below_thin_triangle() {
        let t = Triangle::new(Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(0.5, 0.05)).unwrap();
        let p = exterior_point(&t).unwrap();
        assert!(p.y < 0.0);
        let areas = region_areas(&t, p);
        assert!(areas.max_deviation(t.area() / 3.0) <= 1e-12 * t.area(), "{areas:?}");
    }
}
