//! Equal-area partitions of a triangle by perpendiculars from a point.

mod classify;
mod construct;
mod kkm;
mod maximin;
mod newton;
mod verify;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{region_areas, region_polygons, ConvexPolygon, Point, RegionAreas, Triangle};
use crate::solve2d::{Method, SolverConfig, SolverReport};

pub use classify::{classify, criterion_sides, max_angle_vertex, Classification, Kind, CLASSIFY_TOL};
pub use construct::{
    boundary_distances, boundary_point_closed_form, cut_half_plane, cut_line_offset, exterior_cut_lines,
    exterior_point, line_intersection,
};
pub use kkm::{label, solve_kkm, LabeledGrid};
pub use maximin::{solve_maximin, MAXIMIN_AREA_TOL_REL};
pub use newton::solve_newton;
pub use verify::{lemma_check, lemma_margin, locate, verify_partition, Location, VerifyReport};

/// Distance (in diameters) within which the maximin cross-check must agree.
pub const CROSS_CHECK_DIST_REL: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PartitionSolution {
    pub point: Point,
    pub areas: RegionAreas,
    /// Regions at `A`, `B`, `C`.
    pub regions: [ConvexPolygon; 3],
    pub classification: Classification,
    /// `max_i |P_i − |T|/3|`.
    pub residual: f64,
    pub method: Method,
    pub report: SolverReport,
}

impl PartitionSolution {
    pub(crate) fn assemble(tri: &Triangle, point: Point, method: Method, mut report: SolverReport) -> Self {
        let areas = region_areas(tri, point);
        let residual = areas.max_deviation(tri.area() / 3.0);
        report.best_point = point;
        report.best_residual = residual;
        report.verified = residual <= report.tolerance;
        Self {
            point,
            areas,
            regions: region_polygons(tri, point),
            classification: classify(tri, CLASSIFY_TOL),
            residual,
            method,
            report,
        }
    }

    /// Region polygons with vertices closer than `tol` merged.
    pub fn merged_regions(&self, tol: f64) -> [ConvexPolygon; 3] {
        self.regions.clone().map(|p| p.merged(tol))
    }
}

/// Intersection of the two perpendicular cut lines, each slicing a third off the
/// triangle next to one of the acute vertices. Falls back to Newton seeded at the
/// intersection if the areas there miss the tolerance.
pub fn solve_exterior(tri: &Triangle, cfg: &SolverConfig) -> Result<PartitionSolution> {
    cfg.validate()?;
    let class = classify(tri, CLASSIFY_TOL);
    if class.kind != Kind::ObtuseExterior {
        return Err(Error::InvalidArgument(format!(
            "exterior construction requires an obtuse-exterior triangle, got {}",
            class.kind
        )));
    }
    let (_, a, b) = exterior_cut_lines(tri)?;
    let point = line_intersection(&a, &b).ok_or_else(|| {
        let c = tri.centroid();
        let r = region_areas(tri, c).max_deviation(tri.area() / 3.0);
        SolverReport::new(Method::ExteriorConstruction, c, r, 0.0).into_error("cut lines are parallel")
    })?;
    let tol = cfg.area_tolerance(tri.area(), tri.diameter(), tri.centroid());
    let report = SolverReport::new(Method::ExteriorConstruction, point, 0.0, tol);
    let solution = PartitionSolution::assemble(tri, point, Method::ExteriorConstruction, report);
    if solution.residual <= tol {
        return Ok(solution);
    }
    solve_newton(tri, cfg, Some(point))
}

/// Solves the equal-area problem for any triangle, dispatching on its
/// classification. The residual is always re-verified against
/// [`SolverConfig::area_tolerance`].
pub fn equal_partition(tri: &Triangle, cfg: &SolverConfig) -> Result<PartitionSolution> {
    cfg.validate()?;
    let class = classify(tri, CLASSIFY_TOL);
    let tol = cfg.area_tolerance(tri.area(), tri.diameter(), tri.centroid());
    let mut solution = match class.kind {
        Kind::Acute | Kind::Right | Kind::ObtuseInterior => solve_newton(tri, cfg, None)?,
        Kind::ObtuseExterior => solve_exterior(tri, cfg)?,
        Kind::ObtuseBoundary => {
            let point = boundary_point_closed_form(tri)?;
            let report = SolverReport::new(Method::ClosedForm, point, 0.0, tol);
            let s = PartitionSolution::assemble(tri, point, Method::ClosedForm, report);
            if s.residual <= tol {
                s
            } else {
                // inside the band but off the exact manifold
                solve_newton(tri, cfg, Some(point))?
            }
        }
    };
    if solution.residual > tol {
        let mut report = solution.report;
        report.best_residual = solution.residual;
        return Err(report.into_error("residual above tolerance after solving"));
    }
    if cfg.cross_check && !class.kind.is_obtuse() {
        let other = solve_maximin(tri, cfg)?;
        let dist = other.point.distance(solution.point);
        let limit = CROSS_CHECK_DIST_REL * tri.diameter();
        if dist > limit {
            return Err(solution
                .report
                .into_error(format!("maximin cross-check disagrees by {dist:e} (limit {limit:e})")));
        }
        solution.report.message = format!("maximin cross-check agrees within {dist:e}");
    }
    Ok(solution)
}
