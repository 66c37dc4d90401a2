use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::Error;
use crate::geometry::{ConvexPolygon, Point, Triangle};
use crate::mass::{SectorConfig, Targets};
use crate::solve2d::SolverConfig;

pub const DEFAULT_SWEEP_RESOLUTION: usize = 100;
pub const MAX_SWEEP_RESOLUTION: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Triangle,
    MassPartition,
    Sweep,
}

impl Mode {
    fn as_str(self) -> &'static str {
        match self {
            Mode::Triangle => "triangle",
            Mode::MassPartition => "mass-partition",
            Mode::Sweep => "sweep",
        }
    }
}

/// Input document for the solver.
///
/// ```json
/// {"mode": "triangle", "triangle": [[0, 0], [1, 0], [0.5, 0.866025403784]]}
/// {"mode": "mass-partition", "polygon": [[0,0],[1,0],[1,1],[0,1]],
///  "rays": [90, 210, 330], "fractions": [0.5, 0.25, 0.25]}
/// {"mode": "sweep", "resolution": 100}
/// ```
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    pub mode: Mode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub triangle: Option<[Point; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polygon: Option<Vec<Point>>,
    /// Ray angles in degrees, counter-clockwise.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rays: Option<[f64; 3]>,
    /// Absolute target areas.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub targets: Option<[f64; 3]>,
    /// Target areas as fractions of the polygon's area.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fractions: Option<[f64; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub resolution: Option<usize>,
    #[serde(default)]
    pub solver: SolverConfig,
}

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("malformed JSON: {0}")]
    Malformed(String),
    #[error("missing required field `{0}`")]
    MissingField(String),
    #[error("degenerate geometry: {0}")]
    Degenerate(String),
    #[error("invalid value: {0}")]
    Invalid(String),
}

impl SpecError {
    pub fn code(&self) -> &'static str {
        match self {
            SpecError::Malformed(_) => "malformed-json",
            SpecError::MissingField(_) => "missing-field",
            SpecError::Degenerate(_) => "degenerate-geometry",
            SpecError::Invalid(_) => "invalid-value",
        }
    }
}

impl From<Error> for SpecError {
    fn from(e: Error) -> Self {
        match e {
            Error::DegenerateGeometry { area, threshold } => SpecError::Degenerate(format!(
                "area {area:e} is below the degeneracy threshold {threshold:e}"
            )),
            other => SpecError::Invalid(other.to_string()),
        }
    }
}

impl ProblemSpec {
    pub fn triangle(points: [Point; 3]) -> Self {
        Self {
            mode: Mode::Triangle,
            triangle: Some(points),
            polygon: None,
            rays: None,
            targets: None,
            fractions: None,
            resolution: None,
            solver: SolverConfig::default(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serializes")
    }

    /// Checks the mode's required fields and fills defaults. Idempotent.
    pub fn validate(mut self) -> Result<Self, SpecError> {
        let present = [
            ("triangle", self.triangle.is_some()),
            ("polygon", self.polygon.is_some()),
            ("rays", self.rays.is_some()),
            ("targets", self.targets.is_some()),
            ("fractions", self.fractions.is_some()),
            ("resolution", self.resolution.is_some()),
        ];
        let allowed: &[&str] = match self.mode {
            Mode::Triangle => &["triangle"],
            Mode::MassPartition => &["polygon", "rays", "targets", "fractions"],
            Mode::Sweep => &["resolution"],
        };
        if let Some((name, _)) = present.iter().find(|(n, p)| *p && !allowed.contains(n)) {
            return Err(SpecError::Invalid(format!(
                "field `{name}` is not used in mode `{}`",
                self.mode.as_str()
            )));
        }
        self.solver.validate()?;
        match self.mode {
            Mode::Triangle => {
                let pts = self.triangle.ok_or_else(|| SpecError::MissingField("triangle".into()))?;
                Triangle::from_array(pts)?;
            }
            Mode::MassPartition => {
                let pts = self.polygon.clone().ok_or_else(|| SpecError::MissingField("polygon".into()))?;
                let rays = self.rays.ok_or_else(|| SpecError::MissingField("rays".into()))?;
                let poly = ConvexPolygon::new(pts)?;
                SectorConfig::from_degrees(rays)?;
                match (self.targets, self.fractions) {
                    (Some(_), Some(_)) => {
                        return Err(SpecError::Invalid(
                            "give either `targets` or `fractions`, not both".into(),
                        ))
                    }
                    (Some(t), None) => {
                        Targets::new(t, poly.area())?;
                    }
                    (None, Some(f)) => {
                        Targets::from_fractions(f, poly.area())?;
                    }
                    (None, None) => self.fractions = Some([1.0 / 3.0; 3]),
                }
            }
            Mode::Sweep => {
                let n = *self.resolution.get_or_insert(DEFAULT_SWEEP_RESOLUTION);
                if n == 0 || n > MAX_SWEEP_RESOLUTION {
                    return Err(SpecError::Invalid(format!(
                        "resolution must be in 1..={MAX_SWEEP_RESOLUTION}"
                    )));
                }
            }
        }
        Ok(self)
    }
}

/// Parses and validates a JSON problem spec.
pub fn parse_spec(text: &str) -> Result<ProblemSpec, SpecError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| SpecError::Malformed(e.to_string()))?;
    let spec: ProblemSpec = serde_json::from_value(value).map_err(|e| {
        let msg = e.to_string();
        match msg.strip_prefix("missing field `") {
            Some(rest) => SpecError::MissingField(rest.split('`').next().unwrap_or(rest).to_string()),
            None => SpecError::Invalid(msg),
        }
    })?;
    spec.validate()
}
