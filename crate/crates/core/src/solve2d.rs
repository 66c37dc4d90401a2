//! Shared numerical machinery: damped Newton on a two-unknown area-balance system,
//! coarse-to-fine grid search, and the solver configuration and report types.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Point;

/// Maximum number of step halvings in the Newton line search.
const MAX_HALVINGS: usize = 30;

/// Rounding steps of slack in [`SolverConfig::area_tolerance`].
const REPRESENTABLE_ULPS: f64 = 16.0;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SolverConfig {
    /// Residual tolerance, relative to the total area.
    pub area_tol_rel: f64,
    /// Newton iterations per start.
    pub max_iters: usize,
    /// Forward-difference step, relative to the diameter.
    pub fd_step_rel: f64,
    pub kkm_initial_grid: usize,
    /// KKM stops when the fully labeled cell is smaller than this times the diameter.
    pub kkm_target_diam_rel: f64,
    /// Re-solve acute and right triangles by maximin search and compare.
    pub cross_check: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            area_tol_rel: 1e-12,
            max_iters: 100,
            fd_step_rel: 1e-7,
            kkm_initial_grid: 64,
            kkm_target_diam_rel: 1e-10,
            cross_check: false,
        }
    }
}

impl SolverConfig {
    /// Absolute residual tolerance for a shape of the given area and diameter centred
    /// at `center`: `area_tol_rel·area`, raised if needed to the area change caused by
    /// rounding the point's coordinates, which grows with the distance from the origin.
    pub fn area_tolerance(&self, area: f64, diam: f64, center: Point) -> f64 {
        let offset = center.x.abs().max(center.y.abs());
        let floor = REPRESENTABLE_ULPS * f64::EPSILON * (offset / diam + 1.0);
        self.area_tol_rel.max(floor) * area
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |v: f64| v > 0.0 && v.is_finite();
        if !positive(self.area_tol_rel) {
            return Err(Error::InvalidArgument("area_tol_rel must be positive".into()));
        }
        if !positive(self.fd_step_rel) {
            return Err(Error::InvalidArgument("fd_step_rel must be positive".into()));
        }
        if !positive(self.kkm_target_diam_rel) {
            return Err(Error::InvalidArgument("kkm_target_diam_rel must be positive".into()));
        }
        if self.max_iters == 0 || self.kkm_initial_grid == 0 {
            return Err(Error::InvalidArgument(
                "max_iters and kkm_initial_grid must be positive".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Newton,
    Kkm,
    Maximin,
    ClosedForm,
    ExteriorConstruction,
    TranslationNewton,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Method::Newton => "newton",
            Method::Kkm => "kkm",
            Method::Maximin => "maximin",
            Method::ClosedForm => "closed-form",
            Method::ExteriorConstruction => "exterior-construction",
            Method::TranslationNewton => "translation-newton",
        };
        f.write_str(s)
    }
}

/// What a solver did, attached to both successes and failures.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolverReport {
    pub method: Method,
    pub iterations: usize,
    pub restarts: usize,
    pub residual_history: Vec<f64>,
    pub best_point: Point,
    pub best_residual: f64,
    pub tolerance: f64,
    pub verified: bool,
    pub message: String,
}

impl SolverReport {
    pub(crate) fn new(method: Method, point: Point, residual: f64, tolerance: f64) -> Self {
        Self {
            method,
            iterations: 0,
            restarts: 0,
            residual_history: vec![residual],
            best_point: point,
            best_residual: residual,
            tolerance,
            verified: residual <= tolerance,
            message: String::new(),
        }
    }

    pub(crate) fn into_error(mut self, message: impl Into<String>) -> Error {
        self.verified = false;
        self.message = message.into();
        Error::SolverFailure(Box::new(self))
    }
}

/// Outcome of one Newton run.
#[derive(Clone, Debug)]
pub(crate) struct NewtonRun {
    pub point: Point,
    pub residual: f64,
    pub iterations: usize,
    pub history: Vec<f64>,
    pub converged: bool,
}

pub(crate) fn max_abs(v: [f64; 3]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

/// Damped Newton for `g(x) = 0` where `g` returns three deviations that sum to zero;
/// the first two are driven to zero and the merit is the largest absolute deviation.
///
/// The Jacobian is built by forward differences with step `fd_step`. Each step is
/// halved until the merit decreases; if no halving helps the run stops.
pub(crate) fn damped_newton<F>(g: &F, seed: Point, tol: f64, max_iters: usize, fd_step: f64) -> NewtonRun
where
    F: Fn(Point) -> [f64; 3],
{
    let mut x = seed;
    let mut gx = g(x);
    let mut r = max_abs(gx);
    let mut history = vec![r];
    let mut iterations = 0;
    while r > tol && iterations < max_iters && r.is_finite() {
        iterations += 1;
        let gx1 = g(x + Point::new(fd_step, 0.0));
        let gy1 = g(x + Point::new(0.0, fd_step));
        let (j00, j10) = ((gx1[0] - gx[0]) / fd_step, (gx1[1] - gx[1]) / fd_step);
        let (j01, j11) = ((gy1[0] - gx[0]) / fd_step, (gy1[1] - gx[1]) / fd_step);
        let det = j00 * j11 - j01 * j10;
        if det == 0.0 || !det.is_finite() {
            break;
        }
        let step = Point::new(
            -(j11 * gx[0] - j01 * gx[1]) / det,
            -(-j10 * gx[0] + j00 * gx[1]) / det,
        );
        if !step.is_finite() {
            break;
        }
        let mut lambda = 1.0;
        let mut accepted = None;
        for _ in 0..=MAX_HALVINGS {
            let trial = x + step * lambda;
            let gt = g(trial);
            let rt = max_abs(gt);
            if rt < r {
                accepted = Some((trial, gt, rt));
                break;
            }
            lambda *= 0.5;
        }
        match accepted {
            Some((trial, gt, rt)) => {
                x = trial;
                gx = gt;
                r = rt;
                history.push(r);
            }
            None => break,
        }
    }
    NewtonRun {
        point: x,
        residual: r,
        iterations,
        history,
        converged: r <= tol,
    }
}

/// Coarse-to-fine search for the minimum of `f` over the box `[lo, hi]`: an `n × n`
/// grid per level, each level zooming to two cells around the incumbent.
pub(crate) fn grid_search<F>(f: &F, lo: Point, hi: Point, n: usize, levels: usize) -> (Point, f64)
where
    F: Fn(Point) -> f64,
{
    let n = n.max(2);
    let (mut lo, mut hi) = (lo, hi);
    let mut best = (lo.midpoint(hi), f(lo.midpoint(hi)));
    for _ in 0..levels {
        let span = hi - lo;
        let cell = Point::new(span.x / (n - 1) as f64, span.y / (n - 1) as f64);
        for i in 0..n {
            for j in 0..n {
                let p = Point::new(lo.x + cell.x * i as f64, lo.y + cell.y * j as f64);
                let v = f(p);
                if v < best.1 {
                    best = (p, v);
                }
            }
        }
        lo = best.0 - cell * 2.0;
        hi = best.0 + cell * 2.0;
    }
    best
}

/// Newton from each seed in turn, then from grid-search incumbents of increasing
/// resolution over `[lo, hi]`. Returns the first converged run, or the best run and
/// the accumulated report on failure.
pub(crate) fn solve_with_restarts<F>(
    g: &F,
    seeds: &[Point],
    (lo, hi): (Point, Point),
    tol: f64,
    max_iters: usize,
    fd_step: f64,
    method: Method,
) -> std::result::Result<(NewtonRun, SolverReport), SolverReport>
where
    F: Fn(Point) -> [f64; 3],
{
    let merit = |p: Point| max_abs(g(p));
    let first = damped_newton(g, seeds.first().copied().unwrap_or(lo.midpoint(hi)), tol, max_iters, fd_step);
    let mut report = SolverReport::new(method, first.point, first.residual, tol);
    report.iterations = first.iterations;
    report.residual_history = first.history.clone();
    let mut best = first;

    let grid_starts = [(33, 6), (65, 8), (129, 10)];
    let mut remaining_seeds = seeds.iter().skip(1).copied();
    let mut grid = grid_starts.iter();
    while !best.converged {
        let start = match remaining_seeds.next() {
            Some(s) => s,
            None => match grid.next() {
                Some(&(n, levels)) => grid_search(&merit, lo, hi, n, levels).0,
                None => break,
            },
        };
        let run = damped_newton(g, start, tol, max_iters, fd_step);
        report.restarts += 1;
        report.iterations += run.iterations;
        report.residual_history.extend_from_slice(&run.history);
        if run.converged || run.residual < best.residual {
            best = run;
        }
    }
    report.best_point = best.point;
    report.best_residual = best.residual;
    report.verified = best.converged;
    if best.converged {
        Ok((best, report))
    } else {
        report.message = format!(
            "no convergence after {} restarts; best residual {:e} exceeds tolerance {:e}",
            report.restarts, report.best_residual, tol
        );
        Err(report)
    }
}
