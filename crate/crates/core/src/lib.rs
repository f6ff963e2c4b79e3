//! Hilbert, Thompson, Funk and reverse-Funk geometry of a convex polygon:
//! distances, realized metric balls, and minimum enclosing balls.
//!
//! ```
//! use hmeb_core::{distance, ConvexPolygon, MetricKind, Point2};
//!
//! let square = ConvexPolygon::unit_square();
//! let d = distance(&square, MetricKind::Hilbert, Point2::new(0.5, 0.5), Point2::new(0.75, 0.5))
//!     .unwrap();
//! assert!((d - 0.5 * 3f64.ln()).abs() < 1e-12);
//! ```

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod balls;
pub mod bench;
pub mod error;
pub mod geom;
pub mod io;
pub mod meb;
pub mod metrics;
pub mod random;
pub mod svg;

/// Relative geometric tolerance; multiplied by the coordinate scale of the
/// inputs of each predicate.
pub const EPS_GEOM: f64 = 1e-9;

/// Slack for distance-level comparisons. Looser than `EPS_GEOM` because
/// logarithms amplify error near the boundary.
pub const EPS_DIST: f64 = 1e-7;

/// Default stopping width of radius bisection.
pub const EPS_R: f64 = 1e-10;

/// Iteration cap of radius bisection.
pub const MAX_BISECTION_ITERS: usize = 200;

pub use balls::{ball, contains, MetricBall, Spoke};
pub use error::{Error, Result};
pub use geom::{
    chord_frame, clip_convex, convex_hull, lexicographic_min, normalize_polygon, orientation,
    point_location, ray_boundary_intersection, ChordFrame, ClipResult, ConvexPolygon, Location,
    Point2, Segment2,
};
pub use meb::{
    lp_type_solve, min_ball_bisection, solve, Basis, MebInstance, MebResult, ObjectiveValue,
    Solver, SolverStats, Tolerances,
};
pub use metrics::{distance, point_at_distance, MetricKind};
