use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::batch::Execution;
use crate::error::Error;
use crate::geometry::{ConvexPolygon, Point, RegionAreas, Triangle};
use crate::mass::{sector_pieces, solve_translation, SectorConfig, Targets};
use crate::partition::{equal_partition, locate, Classification, Location};
use crate::solve2d::{Method, SolverReport};

use super::spec::{Mode, ProblemSpec, SpecError};
use super::sweep::{sweep_rows, SweepRow};

/// Band (in diameters) used when reporting where the solution point lies.
pub const LOCATION_BAND_REL: f64 = 1e-7;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub input: ProblemSpec,
    #[serde(flatten)]
    pub outcome: Outcome,
    /// Wall-clock milliseconds; only present when requested, since it breaks
    /// byte-for-byte reproducibility.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum Outcome {
    Triangle(TriangleOutcome),
    MassPartition(MassOutcome),
    Sweep(SweepOutcome),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TriangleOutcome {
    /// Vertices after counter-clockwise normalization; region labels refer to these.
    pub triangle: [Point; 3],
    pub area: f64,
    pub classification: Classification,
    pub point: Point,
    pub location: Location,
    pub areas: RegionAreas,
    pub fractions: [f64; 3],
    pub residual: f64,
    pub method: Method,
    pub regions: [ConvexPolygon; 3],
    pub solver: SolverReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MassOutcome {
    pub polygon: ConvexPolygon,
    pub area: f64,
    pub rays_deg: [f64; 3],
    pub gaps_deg: [f64; 3],
    pub targets: [f64; 3],
    pub apex: Point,
    pub translation: Point,
    pub achieved: [f64; 3],
    pub fractions: [f64; 3],
    pub residual: f64,
    pub regions: [ConvexPolygon; 3],
    pub solver: SolverReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepOutcome {
    pub resolution: usize,
    pub rows: Vec<SweepRow>,
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    Input(#[from] SpecError),
    #[error("{} failed: {}", .0.method, .0.message)]
    Solver(Box<SolverReport>),
}

impl RunError {
    pub fn code(&self) -> &'static str {
        match self {
            RunError::Input(e) => e.code(),
            RunError::Solver(_) => "solver-failure",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Input(_) => 2,
            RunError::Solver(_) => 3,
        }
    }

    /// Structured form for machine consumption.
    pub fn to_json(&self) -> String {
        let report = match self {
            RunError::Solver(r) => Some(r.as_ref()),
            RunError::Input(_) => None,
        };
        let value = serde_json::json!({
            "error": {
                "code": self.code(),
                "message": self.to_string(),
                "report": report,
            }
        });
        serde_json::to_string_pretty(&value).expect("error serializes")
    }
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        match e {
            Error::SolverFailure(r) => RunError::Solver(r),
            other => RunError::Input(other.into()),
        }
    }
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Runs a validated spec. The report is deterministic unless `timing` is set.
pub fn run(spec: &ProblemSpec, exec: Execution, timing: bool) -> Result<Report, RunError> {
    let spec = spec.clone().validate()?;
    let start = Instant::now();
    let outcome = match spec.mode {
        Mode::Triangle => Outcome::Triangle(run_triangle(&spec)?),
        Mode::MassPartition => Outcome::MassPartition(run_mass(&spec)?),
        Mode::Sweep => {
            let resolution = spec.resolution.expect("validated");
            Outcome::Sweep(SweepOutcome {
                resolution,
                rows: sweep_rows(resolution, exec),
            })
        }
    };
    Ok(Report {
        input: spec,
        outcome,
        timing_ms: timing.then(|| start.elapsed().as_secs_f64() * 1e3),
    })
}

fn run_triangle(spec: &ProblemSpec) -> Result<TriangleOutcome, RunError> {
    let tri = Triangle::from_array(spec.triangle.expect("validated"))?;
    let s = equal_partition(&tri, &spec.solver)?;
    let area = tri.area();
    Ok(TriangleOutcome {
        triangle: tri.vertices(),
        area,
        classification: s.classification,
        point: s.point,
        location: locate(&tri, s.point, LOCATION_BAND_REL * tri.diameter()),
        areas: s.areas,
        fractions: s.areas.as_array().map(|a| a / area),
        residual: s.residual,
        method: s.method,
        regions: s.regions,
        solver: s.report,
    })
}

fn run_mass(spec: &ProblemSpec) -> Result<MassOutcome, RunError> {
    let poly = ConvexPolygon::new(spec.polygon.clone().expect("validated"))?;
    let rays = spec.rays.expect("validated");
    let cfg = SectorConfig::from_degrees(rays)?;
    let area = poly.area();
    let targets = match (spec.targets, spec.fractions) {
        (Some(t), _) => Targets::new(t, area)?,
        (None, Some(f)) => Targets::from_fractions(f, area)?,
        (None, None) => unreachable!("validated"),
    };
    let s = solve_translation(&poly, &cfg, &targets, &spec.solver)?;
    Ok(MassOutcome {
        regions: sector_pieces(&poly, &cfg, s.apex),
        polygon: poly,
        area,
        rays_deg: rays,
        gaps_deg: cfg.gaps().map(f64::to_degrees),
        targets: targets.areas(),
        apex: s.apex,
        translation: s.translation,
        achieved: s.achieved,
        fractions: s.achieved.map(|a| a / area),
        residual: s.residual,
        solver: s.report,
    })
}
