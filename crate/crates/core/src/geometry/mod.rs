//! Planar primitives: points, half-planes, convex polygons, triangles, and the
//! perpendicular-sector region areas.

mod point;
mod polygon;
mod sector;
mod triangle;

pub use point::{foot_of_perpendicular, Point};
pub use polygon::{ConvexPolygon, HalfPlane};
pub(crate) use polygon::bounding_box;
pub use sector::{
    min_area_f, region_area, region_areas, region_polygon, region_polygons, sector_at_vertex,
    RegionAreas, Sector,
};
pub use triangle::{original_label, Side, Triangle, Vertex, DEGENERACY_REL};
