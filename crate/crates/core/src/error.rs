use thiserror::Error;

use crate::solve2d::SolverReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("non-finite coordinate")]
    NonFinite,

    #[error("degenerate geometry: area {area:e} is below the threshold {threshold:e}")]
    DegenerateGeometry { area: f64, threshold: f64 },

    #[error("polygon is not convex: {0}")]
    NonConvex(String),

    #[error("invalid ray configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid targets: {0}")]
    InvalidTargets(String),

    #[error("{0}")]
    InvalidArgument(String),

    #[error("{} failed: {}", .0.method, .0.message)]
    SolverFailure(Box<SolverReport>),
}
