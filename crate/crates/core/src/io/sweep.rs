//! Classification over the space of triangle shapes, parametrized by two angles.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::batch::{self, Execution};
use crate::error::Result;
use crate::geometry::{Point, Triangle};
use crate::partition::{classify, Kind, CLASSIFY_TOL};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub angle_a_deg: f64,
    pub angle_b_deg: f64,
    pub kind: Kind,
    pub margin: f64,
}

/// Triangle with `A = (0, 0)`, `B = (1, 0)` and the given angles at `A` and `B`.
pub fn triangle_from_angles(angle_a: f64, angle_b: f64) -> Result<Triangle> {
    let ac = angle_b.sin() / (angle_a + angle_b).sin();
    Triangle::new(
        Point::ORIGIN,
        Point::new(1.0, 0.0),
        Point::from_angle(angle_a) * ac,
    )
}

/// Samples cell centres `((i + ½)·180°/n, (j + ½)·180°/n)` of the angle square and keeps
/// those with `A + B < 180°`. Rows come out ordered by `(i, j)`.
pub fn sweep_rows(resolution: usize, exec: Execution) -> Vec<SweepRow> {
    let n = resolution;
    let step = 180.0 / n as f64;
    let samples: Vec<(f64, f64)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| ((i as f64 + 0.5) * step, (j as f64 + 0.5) * step)))
        .filter(|(a, b)| a + b < 180.0)
        .collect();
    batch::map(&samples, exec, |&(a, b)| {
        let tri = triangle_from_angles(a.to_radians(), b.to_radians())
            .expect("sampled angles give a proper triangle");
        let c = classify(&tri, CLASSIFY_TOL);
        SweepRow {
            angle_a_deg: a,
            angle_b_deg: b,
            kind: c.kind,
            margin: c.criterion_margin,
        }
    })
}

/// CSV with header `angle_a_deg,angle_b_deg,kind,margin`.
pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()
}
