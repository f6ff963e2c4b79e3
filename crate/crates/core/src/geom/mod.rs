//! Planar kernel: points, convex polygons, rays and chords, clipping and hulls.
//!
//! Everything runs in `f64` with one relative tolerance, [`crate::EPS_GEOM`],
//! scaled by the largest coordinate magnitude of the inputs involved.

mod clip;
mod hull;
mod point;
mod polygon;

pub use clip::{clip_convex, lexicographic_min, ClipResult};
pub use hull::convex_hull;
pub use point::{coordinate_scale, orientation, Point2, Segment2};
pub use polygon::{
    chord_frame, chord_through, normalize_polygon, point_location, ray_boundary_intersection,
    require_interior, Chord, ChordFrame, ConvexPolygon, Location, RayHit,
};

pub(crate) use polygon::coincidence_tol;
