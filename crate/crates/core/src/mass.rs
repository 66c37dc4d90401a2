//! Three-ray mass partition: place the common apex of three fixed rays so that the
//! sectors between consecutive rays cut prescribed areas out of a convex polygon.
//! Moving the apex by `v` is the same as translating the polygon by `−v`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{ConvexPolygon, Point, Sector, Side, Triangle};
use crate::solve2d::{solve_with_restarts, Method, SolverConfig, SolverReport};

/// Smallest admissible distance of a gap from `π`.
pub const GAP_GUARD: f64 = 1e-9;

/// Three unit ray directions in counter-clockwise order; sector `i` runs from ray `i`
/// to ray `i + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SectorConfig {
    directions: [Point; 3],
}

impl SectorConfig {
    /// Normalizes the directions and checks every counter-clockwise gap is in
    /// `(0, π − GAP_GUARD)`.
    pub fn new(directions: [Point; 3]) -> Result<Self> {
        let mut unit = [Point::ORIGIN; 3];
        for (u, d) in unit.iter_mut().zip(directions) {
            *u = d
                .normalized()
                .ok_or_else(|| Error::InvalidConfig("ray direction must be finite and non-zero".into()))?;
        }
        let cfg = Self { directions: unit };
        let gaps = cfg.gaps();
        let total: f64 = gaps.iter().sum();
        if gaps.iter().any(|&g| g <= 1e-12) {
            return Err(Error::InvalidConfig("coincident rays".into()));
        }
        if (total - std::f64::consts::TAU).abs() > 1e-9 {
            return Err(Error::InvalidConfig("rays are not in counter-clockwise order".into()));
        }
        if let Some(g) = gaps.iter().find(|&&g| g >= std::f64::consts::PI - GAP_GUARD) {
            return Err(Error::InvalidConfig(format!(
                "gap of {:.6}° is not below 180°",
                g.to_degrees()
            )));
        }
        Ok(cfg)
    }

    /// Rays at the given angles in degrees.
    pub fn from_degrees(angles: [f64; 3]) -> Result<Self> {
        if angles.iter().any(|a| !a.is_finite()) {
            return Err(Error::InvalidConfig("ray angles must be finite".into()));
        }
        Self::new(angles.map(|a| Point::from_angle(a.to_radians())))
    }

    /// The rays bounding the perpendicular regions of a triangle: outward normals of
    /// `CA`, `AB`, `BC`, so that sector `i` is the region at vertex `i`.
    pub fn from_triangle(tri: &Triangle) -> Self {
        Self {
            directions: [Side::CA, Side::AB, Side::BC].map(|s| tri.outward_normal(s)),
        }
    }

    pub fn directions(&self) -> [Point; 3] {
        self.directions
    }

    /// Counter-clockwise gaps `[α1, α2, α3]` in radians.
    pub fn gaps(&self) -> [f64; 3] {
        let d = self.directions;
        [0, 1, 2].map(|i| d[i].ccw_angle_to(d[(i + 1) % 3]))
    }

    pub fn sector(&self, i: usize, apex: Point) -> Sector {
        Sector::between(apex, self.directions[i % 3], self.directions[(i + 1) % 3])
    }
}

/// Target areas, each non-negative, summing to the polygon's area.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Targets {
    areas: [f64; 3],
}

impl Targets {
    pub fn new(areas: [f64; 3], total: f64) -> Result<Self> {
        if areas.iter().any(|a| !a.is_finite() || *a < 0.0) {
            return Err(Error::InvalidTargets("targets must be finite and non-negative".into()));
        }
        let sum: f64 = areas.iter().sum();
        if (sum - total).abs() > 1e-12 * total.abs().max(f64::MIN_POSITIVE) {
            return Err(Error::InvalidTargets(format!(
                "targets sum to {sum} but the polygon area is {total}"
            )));
        }
        Ok(Self { areas })
    }

    /// Targets given as fractions of `total`; fractions must sum to one within `1e-9`.
    pub fn from_fractions(fractions: [f64; 3], total: f64) -> Result<Self> {
        if fractions.iter().any(|a| !a.is_finite() || *a < 0.0) {
            return Err(Error::InvalidTargets("fractions must be finite and non-negative".into()));
        }
        let sum: f64 = fractions.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidTargets(format!("fractions sum to {sum}, not 1")));
        }
        // rescale so the sum is exact
        Ok(Self {
            areas: fractions.map(|f| f / sum * total),
        })
    }

    pub fn areas(&self) -> [f64; 3] {
        self.areas
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TranslationSolution {
    pub apex: Point,
    pub achieved: [f64; 3],
    /// Translation of the polygon that brings the solution apex to the origin.
    pub translation: Point,
    pub residual: f64,
    pub report: SolverReport,
}

/// Areas of `poly` inside each of the three sectors at `apex`.
pub fn sector_areas(poly: &ConvexPolygon, cfg: &SectorConfig, apex: Point) -> [f64; 3] {
    let Some(origin) = poly.centroid() else {
        return [0.0; 3];
    };
    let local = poly.translated(-origin);
    let apex = apex - origin;
    [0, 1, 2].map(|i| cfg.sector(i, apex).clip(&local).area())
}

/// The three pieces of `poly`.
pub fn sector_pieces(poly: &ConvexPolygon, cfg: &SectorConfig, apex: Point) -> [ConvexPolygon; 3] {
    [0, 1, 2].map(|i| cfg.sector(i, apex).clip(poly))
}

/// Finds an apex whose sectors cut `targets` out of `poly`, by damped Newton with
/// grid restarts over the bounding box grown by two diameters.
///
/// Convergence is guaranteed only for targets of at least `1e-6·|T|` each; zero
/// targets are attempted but may fail.
pub fn solve_translation(
    poly: &ConvexPolygon,
    cfg: &SectorConfig,
    targets: &Targets,
    solver: &SolverConfig,
) -> Result<TranslationSolution> {
    solver.validate()?;
    let total = poly.area();
    if total <= 0.0 {
        return Err(Error::InvalidArgument("polygon is empty".into()));
    }
    let sum: f64 = targets.areas().iter().sum();
    if (sum - total).abs() > 1e-12 * total {
        return Err(Error::InvalidTargets(format!(
            "targets sum to {sum} but the polygon area is {total}"
        )));
    }
    let r = targets.areas();
    let diam = poly.diameter();
    let seed = poly.centroid().expect("non-empty polygon");
    let tol = solver.area_tolerance(total, diam, seed);
    let g = |x: Point| {
        let a = sector_areas(poly, cfg, x);
        [a[0] - r[0], a[1] - r[1], a[2] - r[2]]
    };
    let (lo, hi) = poly.bounding_box().expect("non-empty polygon");
    let pad = Point::new(2.0 * diam, 2.0 * diam);
    match solve_with_restarts(
        &g,
        &[seed],
        (lo - pad, hi + pad),
        tol,
        solver.max_iters,
        solver.fd_step_rel * diam,
        Method::TranslationNewton,
    ) {
        Ok((run, report)) => Ok(TranslationSolution {
            apex: run.point,
            achieved: sector_areas(poly, cfg, run.point),
            translation: -run.point,
            residual: run.residual,
            report,
        }),
        Err(report) => Err(report.into_error("translation search did not converge")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Vertex;

    fn unit_square() -> ConvexPolygon {
        ConvexPolygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap()
    }

    fn regular(n: usize, center: Point) -> ConvexPolygon {
        ConvexPolygon::new(
            (0..n)
                .map(|k| center + Point::from_angle(k as f64 * std::f64::consts::TAU / n as f64))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn config_validation() {
        let c = SectorConfig::from_degrees([90.0, 210.0, 330.0]).unwrap();
        for g in c.gaps() {
            assert!((g - 2.0 * std::f64::consts::PI / 3.0).abs() < 1e-12);
        }
        assert!(SectorConfig::from_degrees([0.0, 10.0, 20.0]).is_err());
        assert!(SectorConfig::from_degrees([0.0, 0.0, 180.0]).is_err());
        assert!(SectorConfig::from_degrees([0.0, 180.0, 270.0]).is_err());
        // clockwise listing
        assert!(SectorConfig::from_degrees([330.0, 210.0, 90.0]).is_err());
    }

    #[test]
    fn triangle_config_gaps_are_supplements() {
        let t = Triangle::new(Point::new(0.0, 0.0), Point::new(3.0, 0.0), Point::new(1.0, 1.5)).unwrap();
        let c = SectorConfig::from_triangle(&t);
        let checked = SectorConfig::new(c.directions()).unwrap();
        let gaps = checked.gaps();
        for v in Vertex::ALL {
            assert!((gaps[v.index()] - (std::f64::consts::PI - t.angle(v))).abs() < 1e-12);
        }
        assert!((gaps.iter().sum::<f64>() - std::f64::consts::TAU).abs() < 1e-12);
    }

    #[test]
    fn far_apex_in_first_sector_sees_everything() {
        let c = SectorConfig::from_degrees([90.0, 210.0, 330.0]).unwrap();
        let sq = unit_square();
        // the polygon must sit inside sector 0 as seen from the apex: apex far along −bisector
        let bisector = Point::from_angle(150f64.to_radians());
        let apex = Point::new(0.5, 0.5) - bisector * 1e4;
        let a = sector_areas(&sq, &c, apex);
        assert!((a[0] - 1.0).abs() < 1e-12 && a[1].abs() < 1e-12 && a[2].abs() < 1e-12, "{a:?}");
    }

    #[test]
    fn symmetric_config_on_regular_polygon() {
        let c = SectorConfig::from_degrees([90.0, 210.0, 330.0]).unwrap();
        let center = Point::new(2.0, -1.0);
        let p = regular(96, center);
        let a = sector_areas(&p, &c, center);
        for x in a {
            assert!((x - p.area() / 3.0).abs() < 1e-12);
        }
        let targets = Targets::from_fractions([1.0 / 3.0; 3], p.area()).unwrap();
        let s = solve_translation(&p, &c, &targets, &SolverConfig::default()).unwrap();
        assert!(s.apex.distance(center) < 1e-9);
    }

    #[test]
    fn targets_validation() {
        assert!(Targets::new([0.5, 0.3, 0.3], 1.0).is_err());
        assert!(Targets::new([-0.1, 0.6, 0.5], 1.0).is_err());
        assert!(Targets::from_fractions([0.5, 0.3, 0.3], 2.0).is_err());
        let t = Targets::from_fractions([0.5, 0.25, 0.25], 2.0).unwrap();
        assert_eq!(t.areas(), [1.0, 0.5, 0.5]);
    }

    #[test]
    fn square_with_uneven_targets() {
        let c = SectorConfig::from_degrees([10.0, 140.0, 250.0]).unwrap();
        let sq = unit_square();
        let targets = Targets::new([0.5, 0.2, 0.3], 1.0).unwrap();
        let s = solve_translation(&sq, &c, &targets, &SolverConfig::default()).unwrap();
        for (a, r) in s.achieved.iter().zip(targets.areas()) {
            assert!((a - r).abs() < 1e-10);
        }
        assert_eq!(s.translation, -s.apex);
    }
}
