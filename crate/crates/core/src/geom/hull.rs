use super::point::{coordinate_scale, Point2};
use super::polygon::{nearly_collinear, ConvexPolygon};
use crate::error::{Error, Result};
use crate::EPS_GEOM;

/// Convex hull by monotone chain. Interior, duplicate and collinear
/// points are dropped.
pub fn convex_hull(points: &[Point2]) -> Result<ConvexPolygon> {
    if points.iter().any(|p| !p.is_finite()) {
        return Err(Error::NonFinite);
    }
    if points.len() < 3 {
        return Err(Error::Degenerate("fewer than 3 points"));
    }
    let tol = EPS_GEOM * coordinate_scale(points);
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a.lex_cmp(b));
    pts.dedup_by(|a, b| a.dist(*b) <= tol);
    if pts.len() < 3 {
        return Err(Error::Degenerate("fewer than 3 distinct points"));
    }

    // Pops the middle of any triple that fails to turn left by more than tol.
    let keeps = |a: Point2, b: Point2, c: Point2| {
        (b - a).cross(c - a) > 0.0 && !nearly_collinear(a, b, c, tol)
    };

    let mut hull: Vec<Point2> = Vec::with_capacity(2 * pts.len());
    for &p in &pts {
        while hull.len() >= 2 && !keeps(hull[hull.len() - 2], hull[hull.len() - 1], p) {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower_len && !keeps(hull[hull.len() - 2], hull[hull.len() - 1], p) {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();

    // The wrap-around triple at the start vertex is not checked above.
    while hull.len() >= 3 {
        let n = hull.len();
        if keeps(hull[n - 1], hull[0], hull[1]) {
            break;
        }
        hull.remove(0);
    }
    if hull.len() < 3 {
        return Err(Error::Degenerate("points are collinear"));
    }
    super::polygon::normalize_polygon(&hull)
}
