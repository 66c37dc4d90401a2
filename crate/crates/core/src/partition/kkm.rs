//! Sperner-lemma search for the common point of the three label sets
//! `R_V = { x : P(V,x) = min }`.

use crate::error::{Error, Result};
use crate::geometry::{region_areas, Point, Triangle, Vertex};
use crate::solve2d::{Method, SolverConfig, SolverReport};

use super::classify::{classify, CLASSIFY_TOL};
use super::PartitionSolution;

/// Number of resolution doublings tried when a level has no fully labeled cell.
const MAX_DOUBLINGS: usize = 4;
/// Circumradius of the refinement triangle, in diameters of the selected cell.
const ZOOM_RADIUS: f64 = 8.0;
const MAX_LEVELS: usize = 200;

/// Label of `x`: the vertex whose region is smallest, ties to the earliest vertex.
pub fn label(tri: &Triangle, x: Point) -> Vertex {
    region_areas(tri, x).argmin()
}

/// A barycentric grid of resolution `n` over the triangle `corners`, with one label per
/// node.
pub struct LabeledGrid {
    corners: [Point; 3],
    n: usize,
    labels: Vec<Vertex>,
}

impl LabeledGrid {
    pub fn new(tri: &Triangle, corners: [Point; 3], n: usize) -> Self {
        let mut labels = Vec::with_capacity((n + 1) * (n + 2) / 2);
        let mut grid = Self { corners, n, labels: Vec::new() };
        for i in 0..=n {
            for j in 0..=n - i {
                labels.push(label(tri, grid.node(i, j)));
            }
        }
        grid.labels = labels;
        grid
    }

    fn index(&self, i: usize, j: usize) -> usize {
        // rows of decreasing length n + 1, n, ..., 1
        i * (self.n + 1) - i * (i.saturating_sub(1)) / 2 + j
    }

    /// Node `(i, j)` at `P0 + (i/n)·(P1 − P0) + (j/n)·(P2 − P0)`.
    pub fn node(&self, i: usize, j: usize) -> Point {
        let [p0, p1, p2] = self.corners;
        let n = self.n as f64;
        p0 + (p1 - p0) * (i as f64 / n) + (p2 - p0) * (j as f64 / n)
    }

    pub fn label_at(&self, i: usize, j: usize) -> Vertex {
        self.labels[self.index(i, j)]
    }

    /// Iterates over the nodes on the edge from corner `k` to corner `k + 1`.
    pub fn edge_nodes(&self, k: usize) -> Vec<(Point, Vertex)> {
        (0..=self.n)
            .map(|t| {
                let (i, j) = match k % 3 {
                    0 => (t, 0),
                    1 => (self.n - t, t),
                    _ => (0, self.n - t),
                };
                (self.node(i, j), self.label_at(i, j))
            })
            .collect()
    }

    /// All elementary cells whose three corners carry three distinct labels.
    pub fn fully_labeled_cells(&self) -> Vec<[Point; 3]> {
        let n = self.n;
        let mut out = Vec::new();
        let distinct = |a: Vertex, b: Vertex, c: Vertex| a != b && b != c && a != c;
        for i in 0..n {
            for j in 0..n - i {
                let (l0, l1, l2) = (self.label_at(i, j), self.label_at(i + 1, j), self.label_at(i, j + 1));
                if distinct(l0, l1, l2) {
                    out.push([self.node(i, j), self.node(i + 1, j), self.node(i, j + 1)]);
                }
                if i + j + 2 <= n {
                    let l3 = self.label_at(i + 1, j + 1);
                    if distinct(l1, l2, l3) {
                        out.push([self.node(i + 1, j), self.node(i, j + 1), self.node(i + 1, j + 1)]);
                    }
                }
            }
        }
        out
    }
}

fn cell_diameter(c: &[Point; 3]) -> f64 {
    c[0].distance(c[1]).max(c[1].distance(c[2])).max(c[2].distance(c[0]))
}

fn centroid(c: &[Point; 3]) -> Point {
    (c[0] + c[1] + c[2]) * (1.0 / 3.0)
}

/// Finds the equal-area point of an acute or right triangle from fully labeled cells.
///
/// The first level grids the triangle itself; its boundary labeling satisfies
/// Sperner's condition, so a fully labeled cell exists. Each further level grids an
/// equilateral triangle around the best such cell (smallest area residual at its
/// centroid) until the cell is below `kkm_target_diam_rel` diameters.
pub fn solve_kkm(tri: &Triangle, cfg: &SolverConfig) -> Result<PartitionSolution> {
    cfg.validate()?;
    let kind = classify(tri, CLASSIFY_TOL).kind;
    if kind.is_obtuse() {
        return Err(Error::InvalidArgument(format!(
            "the KKM search requires an acute or right triangle, got {kind}"
        )));
    }
    let diam = tri.diameter();
    let third = tri.area() / 3.0;
    let target = cfg.kkm_target_diam_rel * diam;
    let residual = |p: Point| region_areas(tri, p).max_deviation(third);
    // Lipschitz bound on the areas: 4·diam per unit of displacement
    let tol = 4.0 * diam * 10.0 * target;

    let mut corners = tri.vertices();
    let mut history = Vec::new();
    let mut levels = 0;
    let mut best_cell: Option<[Point; 3]> = None;
    while levels < MAX_LEVELS {
        levels += 1;
        let mut n = cfg.kkm_initial_grid;
        let mut cells = Vec::new();
        for _ in 0..=MAX_DOUBLINGS {
            cells = LabeledGrid::new(tri, corners, n).fully_labeled_cells();
            if !cells.is_empty() {
                break;
            }
            n *= 2;
        }
        let Some(cell) = cells
            .into_iter()
            .map(|c| (residual(centroid(&c)), c))
            .min_by(|a, b| a.0.total_cmp(&b.0))
            .map(|(r, c)| {
                history.push(r);
                c
            })
        else {
            let p = best_cell.as_ref().map_or(tri.centroid(), centroid);
            let mut report = SolverReport::new(Method::Kkm, p, residual(p), tol);
            report.iterations = levels;
            report.residual_history = history;
            return Err(report.into_error(format!(
                "no fully labeled cell at level {levels} after {MAX_DOUBLINGS} doublings"
            )));
        };
        let size = cell_diameter(&cell);
        best_cell = Some(cell);
        if size < target {
            break;
        }
        let c = centroid(&cell);
        let r = ZOOM_RADIUS * size;
        corners = [0.0f64, 1.0, 2.0].map(|k| {
            c + Point::from_angle(std::f64::consts::FRAC_PI_2 + k * 2.0 * std::f64::consts::PI / 3.0) * r
        });
    }

    let cell = best_cell.expect("at least one level");
    let point = centroid(&cell);
    let mut report = SolverReport::new(Method::Kkm, point, residual(point), tol);
    report.iterations = levels;
    report.residual_history = history;
    if cell_diameter(&cell) >= target {
        return Err(report.into_error("cell did not shrink to the target diameter"));
    }
    let solution = PartitionSolution::assemble(tri, point, Method::Kkm, report);
    if solution.residual > tol {
        let report = solution.report;
        return Err(report.into_error("fully labeled cell centroid fails the area check"));
    }
    Ok(solution)
}
