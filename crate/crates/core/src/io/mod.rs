//! Problem specs, reports, sweeps, and SVG figures.

mod report;
mod spec;
mod svg;
mod sweep;

pub use report::{run, MassOutcome, Outcome, Report, RunError, SweepOutcome, TriangleOutcome, LOCATION_BAND_REL};
pub use spec::{parse_spec, Mode, ProblemSpec, SpecError, DEFAULT_SWEEP_RESOLUTION, MAX_SWEEP_RESOLUTION};
pub use svg::{emit_svg, SvgOptions};
pub use sweep::{sweep_rows, triangle_from_angles, write_csv, SweepRow};
