//! Perpendicular equal-area partitions of triangles, and translations realizing
//! prescribed three-ray partitions of convex polygons.
//!
//! For a triangle `ABC` there is exactly one point `X` in the plane whose
//! perpendiculars to the three sides cut the triangle into three regions of equal
//! area. [`partition::equal_partition`] finds it for every triangle shape, whether it
//! lies inside, on the longest side, or outside. [`mass::solve_translation`] solves the
//! general three-ray problem for convex polygons and arbitrary target areas.

pub mod batch;
pub mod error;
pub mod geometry;
pub mod io;
pub mod mass;
pub mod partition;
pub mod solve2d;

pub use error::{Error, Result};
pub use geometry::{ConvexPolygon, HalfPlane, Point, RegionAreas, Side, Triangle, Vertex};
pub use partition::{equal_partition, Classification, Kind, PartitionSolution};
pub use solve2d::{Method, SolverConfig, SolverReport};
