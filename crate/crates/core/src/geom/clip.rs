use super::hull::convex_hull;
use super::point::{coordinate_scale, Point2, Segment2};
use super::polygon::{signed_line_distance, ConvexPolygon};
use crate::error::{Error, Result};
use crate::EPS_GEOM;

/// A closed convex region classified by dimension.
#[derive(Clone, Debug, PartialEq)]
pub enum ClipResult {
    Empty,
    Point(Point2),
    Segment(Segment2),
    Polygon(ConvexPolygon),
}

impl ClipResult {
    pub fn is_empty(&self) -> bool {
        matches!(self, ClipResult::Empty)
    }

    pub fn as_polygon(&self) -> Option<&ConvexPolygon> {
        match self {
            ClipResult::Polygon(p) => Some(p),
            _ => None,
        }
    }

    /// Extreme points of the region: vertices, endpoints, or the point itself.
    pub fn vertices(&self) -> Vec<Point2> {
        match self {
            ClipResult::Empty => Vec::new(),
            ClipResult::Point(p) => vec![*p],
            ClipResult::Segment(s) => vec![s.a, s.b],
            ClipResult::Polygon(p) => p.vertices().to_vec(),
        }
    }

    fn scale(&self) -> f64 {
        coordinate_scale(&self.vertices())
    }

    /// Membership with an absolute length slack.
    pub fn contains(&self, p: Point2, slack: f64) -> bool {
        match self {
            ClipResult::Empty => false,
            ClipResult::Point(q) => q.dist(p) <= slack,
            ClipResult::Segment(s) => s.distance_to(p) <= slack,
            ClipResult::Polygon(poly) => poly.contains(p, slack),
        }
    }

    /// Intersection with a convex polygon.
    pub fn intersect_polygon(&self, poly: &ConvexPolygon) -> ClipResult {
        let tol = EPS_GEOM * self.scale().max(poly.scale());
        match self {
            ClipResult::Empty => ClipResult::Empty,
            ClipResult::Point(p) => {
                if poly.contains(*p, tol) {
                    ClipResult::Point(*p)
                } else {
                    ClipResult::Empty
                }
            }
            ClipResult::Segment(s) => clip_segment(*s, poly, tol),
            ClipResult::Polygon(a) => clip_convex(a, poly),
        }
    }

    /// Intersection of two regions.
    pub fn intersect(&self, other: &ClipResult) -> ClipResult {
        use ClipResult::*;
        match (self, other) {
            (Empty, _) | (_, Empty) => Empty,
            (x, Polygon(p)) => x.intersect_polygon(p),
            (Polygon(p), x) => x.intersect_polygon(p),
            (Point(p), y) | (y, Point(p)) => {
                let tol = EPS_GEOM * self.scale().max(other.scale());
                if y.contains(*p, tol) {
                    Point(*p)
                } else {
                    Empty
                }
            }
            (Segment(s), Segment(t)) => {
                let tol = EPS_GEOM * self.scale().max(other.scale());
                intersect_segments(*s, *t, tol)
            }
        }
    }
}

/// Keeps the part of `poly` on the left of `a -> b`, treating points within
/// `tol` of the line as inside.
fn clip_halfplane(poly: &[Point2], a: Point2, b: Point2, tol: f64) -> Vec<Point2> {
    let n = poly.len();
    if n == 0 {
        return Vec::new();
    }
    let dist: Vec<f64> = poly
        .iter()
        .map(|&p| signed_line_distance(a, b, p))
        .collect();
    if dist.iter().all(|&d| d >= -tol) {
        return poly.to_vec();
    }
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..n {
        let j = (i + 1) % n;
        let (pi, di) = (poly[i], dist[i]);
        let (pj, dj) = (poly[j], dist[j]);
        let in_i = di >= -tol;
        let in_j = dj >= -tol;
        if in_i {
            out.push(pi);
        }
        if in_i != in_j {
            let t = (di / (di - dj)).clamp(0.0, 1.0);
            out.push(pi.lerp(pj, t));
        }
    }
    out
}

/// Sorts out whether a clipped point cloud is a point, a segment or a
/// polygon at length tolerance `tol`.
fn classify(points: &[Point2], tol: f64) -> ClipResult {
    if points.is_empty() {
        return ClipResult::Empty;
    }
    let a = points[0];
    let b = points
        .iter()
        .copied()
        .max_by(|p, q| a.dist(*p).total_cmp(&a.dist(*q)))
        .expect("non-empty");
    if a.dist(b) <= tol {
        let n = points.len() as f64;
        let sum = points.iter().fold(Point2::default(), |s, &p| s + p);
        return ClipResult::Point(sum * (1.0 / n));
    }
    let thickness = points
        .iter()
        .map(|&p| signed_line_distance(a, b, p).abs())
        .fold(0.0, f64::max);
    if thickness <= tol {
        let dir = b - a;
        let lo = points
            .iter()
            .copied()
            .min_by(|p, q| (*p - a).dot(dir).total_cmp(&(*q - a).dot(dir)))
            .expect("non-empty");
        let hi = points
            .iter()
            .copied()
            .max_by(|p, q| (*p - a).dot(dir).total_cmp(&(*q - a).dot(dir)))
            .expect("non-empty");
        return ClipResult::Segment(Segment2::new(lo, hi));
    }
    match convex_hull(points) {
        Ok(poly) => ClipResult::Polygon(poly),
        // Hull tolerances are marginally different; a sliver that fails to
        // hull is reported by its long axis.
        Err(_) => ClipResult::Segment(Segment2::new(a, b)),
    }
}

/// Intersection of two convex polygons by clipping `a` against every edge
/// half-plane of `b`.
pub fn clip_convex(a: &ConvexPolygon, b: &ConvexPolygon) -> ClipResult {
    let tol = EPS_GEOM * a.scale().max(b.scale());
    let mut poly = a.vertices().to_vec();
    for (e0, e1) in b.edges() {
        poly = clip_halfplane(&poly, e0, e1, tol);
        if poly.is_empty() {
            return ClipResult::Empty;
        }
    }
    classify(&poly, tol)
}

fn clip_segment(s: Segment2, poly: &ConvexPolygon, tol: f64) -> ClipResult {
    let (mut t0, mut t1) = (0.0f64, 1.0f64);
    for (e0, e1) in poly.edges() {
        let da = signed_line_distance(e0, e1, s.a);
        let db = signed_line_distance(e0, e1, s.b);
        if da >= -tol && db >= -tol {
            continue;
        }
        if da < -tol && db < -tol {
            return ClipResult::Empty;
        }
        let t = (-da / (db - da)).clamp(0.0, 1.0);
        if db > da {
            t0 = t0.max(t);
        } else {
            t1 = t1.min(t);
        }
        if t0 > t1 {
            return ClipResult::Empty;
        }
    }
    let p = s.a.lerp(s.b, t0);
    let q = s.a.lerp(s.b, t1);
    if p.dist(q) <= tol {
        ClipResult::Point(p.lerp(q, 0.5))
    } else {
        ClipResult::Segment(Segment2::new(p, q))
    }
}

fn intersect_segments(s: Segment2, t: Segment2, tol: f64) -> ClipResult {
    let ds = s.b - s.a;
    let len = ds.norm();
    if len <= tol {
        return if t.distance_to(s.midpoint()) <= tol {
            ClipResult::Point(s.midpoint())
        } else {
            ClipResult::Empty
        };
    }
    let u = ds * (1.0 / len);
    let off_a = u.cross(t.a - s.a);
    let off_b = u.cross(t.b - s.a);
    if off_a.abs() <= tol && off_b.abs() <= tol {
        // Collinear: overlap of parameter intervals.
        let (pa, pb) = (u.dot(t.a - s.a), u.dot(t.b - s.a));
        let lo = pa.min(pb).max(0.0);
        let hi = pa.max(pb).min(len);
        if lo > hi + tol {
            return ClipResult::Empty;
        }
        let p = s.a + u * lo;
        let q = s.a + u * hi.max(lo);
        return if p.dist(q) <= tol {
            ClipResult::Point(p.lerp(q, 0.5))
        } else {
            ClipResult::Segment(Segment2::new(p, q))
        };
    }
    if off_a * off_b > 0.0 && off_a.abs().min(off_b.abs()) > tol {
        return ClipResult::Empty;
    }
    let k = off_a / (off_a - off_b);
    let x = t.a.lerp(t.b, k.clamp(0.0, 1.0));
    if s.distance_to(x) <= tol && t.distance_to(x) <= tol {
        ClipResult::Point(x)
    } else {
        ClipResult::Empty
    }
}

/// Lexicographically smallest point of a region (x first, then y).
///
/// Coordinates within `EPS_GEOM` of the minimal x count as tied, so that a
/// region whose leftmost part is a vertical edge resolves by y.
pub fn lexicographic_min(region: &ClipResult) -> Result<Point2> {
    let pts = region.vertices();
    if pts.is_empty() {
        return Err(Error::EmptyRegion);
    }
    let tol = EPS_GEOM * coordinate_scale(&pts);
    let min_x = pts.iter().map(|p| p.x).fold(f64::INFINITY, f64::min);
    let best = pts
        .iter()
        .filter(|p| p.x <= min_x + tol)
        .min_by(|a, b| a.y.total_cmp(&b.y).then(a.x.total_cmp(&b.x)))
        .copied()
        .expect("min_x is attained");
    Ok(best)
}
