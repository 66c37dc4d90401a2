use crate::error::Result;
use crate::geometry::{bounding_box, region_areas, Point, Triangle};
use crate::solve2d::{solve_with_restarts, Method, SolverConfig};

use super::PartitionSolution;

/// The area-balance system: deviations of the three region areas from a third.
pub(crate) fn deviations(tri: &Triangle) -> impl Fn(Point) -> [f64; 3] + '_ {
    let third = tri.area() / 3.0;
    move |x| region_areas(tri, x).as_array().map(|a| a - third)
}

/// Solves `P(A,x) = P(B,x) = P(C,x)` by damped Newton with a forward-difference
/// Jacobian, starting from `seed` (default: the centroid). On stagnation it restarts
/// from grid searches over the bounding box grown by one diameter on every side.
pub fn solve_newton(tri: &Triangle, cfg: &SolverConfig, seed: Option<Point>) -> Result<PartitionSolution> {
    cfg.validate()?;
    let diam = tri.diameter();
    let tol = cfg.area_tolerance(tri.area(), tri.diameter(), tri.centroid());
    let seed = seed.unwrap_or_else(|| tri.centroid());
    let (lo, hi) = bounding_box(&tri.vertices()).expect("three vertices");
    let pad = Point::new(diam, diam);
    let g = deviations(tri);
    match solve_with_restarts(
        &g,
        &[seed],
        (lo - pad, hi + pad),
        tol,
        cfg.max_iters,
        cfg.fd_step_rel * diam,
        Method::Newton,
    ) {
        Ok((run, report)) => Ok(PartitionSolution::assemble(tri, run.point, Method::Newton, report)),
        Err(report) => Err(report.into_error("newton did not converge")),
    }
}
