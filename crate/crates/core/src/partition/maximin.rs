use crate::error::{Error, Result};
use crate::geometry::{min_area_f, Point, Side, Triangle};
use crate::solve2d::{Method, SolverConfig, SolverReport};

use super::classify::{classify, CLASSIFY_TOL};
use super::PartitionSolution;

/// Area tolerance (relative to the triangle) certified by the maximin search.
pub const MAXIMIN_AREA_TOL_REL: f64 = 1e-8;

const MAX_EVALUATIONS: usize = 2_000_000;

/// Maximizes `f = min(P(A,x), P(B,x), P(C,x))` over the closed triangle by a
/// deterministic pattern search, seeded at the centroid.
///
/// Poll directions are the six side normals (`±n_AB`, `±n_BC`, `±n_CA`) and the four
/// axis directions. Moving inward across side `VW` grows the regions at `V` and `W`
/// together, so whenever the minimum is not balanced some polled direction improves.
/// The step starts at a quarter of the diameter and halves after every unsuccessful
/// poll, down to `1e-12` diameters.
pub fn solve_maximin(tri: &Triangle, cfg: &SolverConfig) -> Result<PartitionSolution> {
    cfg.validate()?;
    let kind = classify(tri, CLASSIFY_TOL).kind;
    if kind.is_obtuse() {
        return Err(Error::InvalidArgument(format!(
            "maximin search requires an acute or right triangle, got {kind}"
        )));
    }
    let diam = tri.diameter();
    let total = tri.area();
    let mut dirs: Vec<Point> = Side::ALL
        .iter()
        .flat_map(|&s| {
            let n = tri.outward_normal(s);
            [n, -n]
        })
        .collect();
    dirs.extend([
        Point::new(1.0, 0.0),
        Point::new(-1.0, 0.0),
        Point::new(0.0, 1.0),
        Point::new(0.0, -1.0),
    ]);

    let mut x = tri.centroid();
    let mut fx = min_area_f(tri, x);
    let mut step = 0.25 * diam;
    let min_step = 1e-12 * diam;
    let mut iterations = 0;
    let mut evaluations = 1;
    let mut history = vec![total / 3.0 - fx];
    while step >= min_step && evaluations < MAX_EVALUATIONS {
        iterations += 1;
        let mut best: Option<(Point, f64)> = None;
        for &d in &dirs {
            let trial = x + d * step;
            if tri.depth(trial) < 0.0 {
                continue;
            }
            evaluations += 1;
            let ft = min_area_f(tri, trial);
            if ft > best.map_or(fx, |b| b.1) {
                best = Some((trial, ft));
            }
        }
        match best {
            Some((p, fp)) => {
                x = p;
                fx = fp;
                history.push(total / 3.0 - fx);
            }
            None => step *= 0.5,
        }
    }

    let tol = MAXIMIN_AREA_TOL_REL * total;
    let mut report = SolverReport::new(Method::Maximin, x, 0.0, tol);
    report.iterations = iterations;
    report.residual_history = history;
    let solution = PartitionSolution::assemble(tri, x, Method::Maximin, report);
    if solution.residual > tol {
        let mut report = solution.report;
        report.best_residual = solution.residual;
        return Err(report.into_error(format!(
            "maximin point leaves residual {:e} above {:e}",
            solution.residual, tol
        )));
    }
    Ok(solution)
}
