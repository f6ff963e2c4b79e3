use std::f64::consts::TAU;

use super::point::{coordinate_scale, orientation, Point2};
use crate::error::{Error, Result};
use crate::EPS_GEOM;

/// Where a point sits relative to a polygon, with `EPS_GEOM` slack on the
/// boundary band.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Interior,
    Boundary,
    Exterior,
}

/// Strictly convex polygon, counterclockwise, starting at its
/// lexicographically smallest vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Point2>,
}

impl ConvexPolygon {
    /// Same as [`normalize_polygon`].
    pub fn new(raw: &[Point2]) -> Result<Self> {
        normalize_polygon(raw)
    }

    /// Axis-aligned rectangle `[x0, x1] x [y0, y1]`.
    pub fn rectangle(x0: f64, y0: f64, x1: f64, y1: f64) -> Result<Self> {
        normalize_polygon(&[
            Point2::new(x0, y0),
            Point2::new(x1, y0),
            Point2::new(x1, y1),
            Point2::new(x0, y1),
        ])
    }

    pub fn unit_square() -> Self {
        Self::rectangle(0.0, 0.0, 1.0, 1.0).expect("unit square is convex")
    }

    #[inline]
    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    #[inline]
    pub fn vertex(&self, i: usize) -> Point2 {
        self.vertices[i % self.vertices.len()]
    }

    /// Edges as `(start, end)` pairs; edge `i` starts at vertex `i`.
    pub fn edges(&self) -> impl Iterator<Item = (Point2, Point2)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    pub fn scale(&self) -> f64 {
        coordinate_scale(&self.vertices)
    }

    /// Length tolerance used for classifications against this polygon.
    pub(crate) fn tol(&self) -> f64 {
        EPS_GEOM * self.scale()
    }

    pub fn area(&self) -> f64 {
        0.5 * shoelace(&self.vertices)
    }

    pub fn centroid(&self) -> Point2 {
        let n = self.vertices.len() as f64;
        let s = self
            .vertices
            .iter()
            .fold(Point2::default(), |acc, &v| acc + v);
        s * (1.0 / n)
    }

    /// Largest vertex-to-vertex distance.
    pub fn diameter(&self) -> f64 {
        let mut d: f64 = 0.0;
        for (i, a) in self.vertices.iter().enumerate() {
            for b in &self.vertices[i + 1..] {
                d = d.max(a.dist(*b));
            }
        }
        d
    }

    /// Signed distances of `p` to every edge line, positive inside.
    fn min_edge_distance(&self, p: Point2) -> f64 {
        self.edges()
            .map(|(a, b)| signed_line_distance(a, b, p))
            .fold(f64::INFINITY, f64::min)
    }

    /// True when `p` is inside or within `slack` (absolute length) of the polygon.
    pub fn contains(&self, p: Point2, slack: f64) -> bool {
        self.min_edge_distance(p) >= -slack
    }

    /// True when every edge has `p` strictly on its inner side in floating point.
    pub fn strictly_contains(&self, p: Point2) -> bool {
        self.min_edge_distance(p) > 0.0
    }

    /// Applies `f` to every vertex and renormalizes the result.
    pub fn map(&self, f: impl Fn(Point2) -> Point2) -> Result<Self> {
        let v: Vec<Point2> = self.vertices.iter().map(|&p| f(p)).collect();
        normalize_polygon(&v)
    }

    /// The polygon with every edge moved inward by `d`. Meant for `d` much
    /// smaller than any edge; fails if the result is degenerate.
    pub fn inset(&self, d: f64) -> Result<Self> {
        let n = self.vertices.len();
        let lines: Vec<(Point2, Point2)> = self
            .edges()
            .map(|(a, b)| {
                let e = b - a;
                let inward = Point2::new(-e.y, e.x) * (1.0 / e.norm());
                (a + inward * d, e)
            })
            .collect();
        let pts: Vec<Point2> = (0..n)
            .map(|i| {
                let (a, e1) = lines[(i + n - 1) % n];
                let (b, e2) = lines[i];
                a + e1 * ((b - a).cross(e2) / e1.cross(e2))
            })
            .collect();
        normalize_polygon(&pts)
    }

    /// Builds a polygon from vertices already known to be normalized.
    pub(crate) fn from_normalized(vertices: Vec<Point2>) -> Self {
        debug_assert!(vertices.len() >= 3);
        Self { vertices }
    }
}

/// Signed distance of `p` from the directed line `a -> b`; positive on the left.
#[inline]
pub(crate) fn signed_line_distance(a: Point2, b: Point2, p: Point2) -> f64 {
    let e = b - a;
    let len = e.norm();
    if len == 0.0 {
        return -p.dist(a);
    }
    e.cross(p - a) / len
}

fn shoelace(v: &[Point2]) -> f64 {
    let n = v.len();
    (0..n).map(|i| v[i].cross(v[(i + 1) % n])).sum()
}

/// True when `b` lies within `tol` of the line through `a` and `c`.
pub(crate) fn nearly_collinear(a: Point2, b: Point2, c: Point2, tol: f64) -> bool {
    let ac = c - a;
    let len = ac.norm();
    if len <= tol {
        return b.dist(a) <= tol;
    }
    (ac.cross(b - a) / len).abs() <= tol
}

/// Canonical form of a convex polygon given as an ordered vertex list in
/// either orientation.
///
/// Duplicate and collinear vertices are merged; the output is
/// counterclockwise and starts at the lexicographically smallest vertex.
pub fn normalize_polygon(raw: &[Point2]) -> Result<ConvexPolygon> {
    if raw.iter().any(|p| !p.is_finite()) {
        return Err(Error::NonFinite);
    }
    if raw.len() < 3 {
        return Err(Error::Degenerate("fewer than 3 vertices"));
    }
    let tol = EPS_GEOM * coordinate_scale(raw);

    let mut v: Vec<Point2> = Vec::with_capacity(raw.len());
    for &p in raw {
        if v.last().is_none_or(|q: &Point2| q.dist(p) > tol) {
            v.push(p);
        }
    }
    while v.len() > 1 && v[0].dist(*v.last().unwrap()) <= tol {
        v.pop();
    }
    if v.len() < 3 {
        return Err(Error::Degenerate("fewer than 3 distinct vertices"));
    }
    if shoelace(&v) < 0.0 {
        v.reverse();
    }

    // Merge collinear vertices until every triple turns.
    loop {
        let n = v.len();
        if n < 3 {
            return Err(Error::Degenerate("all vertices collinear"));
        }
        let hit = (0..n).find(|&i| {
            let a = v[(i + n - 1) % n];
            let c = v[(i + 1) % n];
            let b = v[i];
            // A reversal (spike) is not a merge candidate.
            nearly_collinear(a, b, c, tol) && (b - a).dot(c - b) >= 0.0
        });
        match hit {
            Some(i) => {
                v.remove(i);
            }
            None => break,
        }
    }

    let n = v.len();
    let mut turning = 0.0;
    for i in 0..n {
        let a = v[i];
        let b = v[(i + 1) % n];
        let c = v[(i + 2) % n];
        if orientation(a, b, c) < 0 || (b - a).cross(c - b) <= 0.0 {
            return Err(Error::NotConvex);
        }
        let e0 = b - a;
        let e1 = c - b;
        turning += e0.cross(e1).atan2(e0.dot(e1));
    }
    // Convex polygons wind exactly once; star polygons with left turns only
    // wind more.
    if (turning - TAU).abs() > 1e-6 {
        return Err(Error::NotConvex);
    }

    let start = (0..n)
        .min_by(|&i, &j| v[i].lex_cmp(&v[j]))
        .expect("non-empty");
    v.rotate_left(start);
    Ok(ConvexPolygon::from_normalized(v))
}

/// Classifies `p` against `omega` with an `EPS_GEOM`-wide boundary band.
pub fn point_location(omega: &ConvexPolygon, p: Point2) -> Location {
    let tol = EPS_GEOM * omega.scale().max(p.max_abs());
    let d = omega.min_edge_distance(p);
    if d < -tol {
        Location::Exterior
    } else if d <= tol {
        Location::Boundary
    } else {
        Location::Interior
    }
}

/// Checks the precondition shared by the metric routines: `p` must be
/// strictly inside `omega` so that every ray from it exits at positive range.
pub fn require_interior(omega: &ConvexPolygon, p: Point2) -> Result<()> {
    if p.is_finite() && omega.strictly_contains(p) {
        Ok(())
    } else {
        Err(Error::NotInterior)
    }
}

/// Exit point of a ray leaving the polygon.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RayHit {
    pub point: Point2,
    /// Index of the crossed edge; a vertex hit belongs to the edge that
    /// starts at that vertex.
    pub edge: usize,
    /// Euclidean distance from the ray origin.
    pub distance: f64,
}

/// Where the ray from `p` in direction `dir` exits `omega`.
pub fn ray_boundary_intersection(omega: &ConvexPolygon, p: Point2, dir: Point2) -> Result<RayHit> {
    require_interior(omega, p)?;
    let dn = dir.norm();
    if !(dn > 0.0) || !dn.is_finite() {
        return Err(Error::Degenerate("zero direction"));
    }
    let u = dir * (1.0 / dn);
    Ok(exit_unit(omega, p, u))
}

/// Exit along unit direction `u` from a point already known to be strictly
/// interior.
pub(crate) fn exit_unit(omega: &ConvexPolygon, p: Point2, u: Point2) -> RayHit {
    let n = omega.len();
    let mut best_t = f64::INFINITY;
    let mut best_edge = 0;
    for (i, (a, b)) in omega.edges().enumerate() {
        let e = b - a;
        // Outward normal of a counterclockwise edge.
        let normal = Point2::new(e.y, -e.x);
        let nd = normal.dot(u);
        if nd > 0.0 {
            let t = normal.dot(a - p) / nd;
            if t < best_t {
                best_t = t;
                best_edge = i;
            }
        }
    }
    let point = p + u * best_t;
    let tol = omega.tol();
    let end = omega.vertex(best_edge + 1);
    let edge = if point.dist(end) <= tol {
        (best_edge + 1) % n
    } else {
        best_edge
    };
    RayHit {
        point,
        edge,
        distance: best_t,
    }
}

/// A full chord of `omega` through an interior point along a direction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Chord {
    pub origin: Point2,
    /// Unit direction.
    pub dir: Point2,
    pub forward: RayHit,
    pub backward: RayHit,
}

impl Chord {
    /// Distance from the origin to the forward boundary point.
    #[inline]
    pub fn forward_len(&self) -> f64 {
        self.forward.distance
    }

    /// Distance from the origin to the backward boundary point.
    #[inline]
    pub fn backward_len(&self) -> f64 {
        self.backward.distance
    }

    /// Point at signed offset `u` from the origin.
    #[inline]
    pub fn at(&self, u: f64) -> Point2 {
        self.origin + self.dir * u
    }
}

/// Chord through interior `p` along `dir`.
pub fn chord_through(omega: &ConvexPolygon, p: Point2, dir: Point2) -> Result<Chord> {
    require_interior(omega, p)?;
    let dn = dir.norm();
    if !(dn > 0.0) || !dn.is_finite() {
        return Err(Error::Degenerate("zero direction"));
    }
    let u = dir * (1.0 / dn);
    Ok(Chord {
        origin: p,
        dir: u,
        forward: exit_unit(omega, p, u),
        backward: exit_unit(omega, p, -u),
    })
}

/// Chord endpoints and the four distances entering the cross-ratio, for
/// points ordered `p', p, q, q'` along the chord.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChordFrame {
    pub p_prime: Point2,
    pub q_prime: Point2,
    /// `|q - p'|`
    pub d_qp: f64,
    /// `|p - p'|`
    pub d_pp: f64,
    /// `|p - q'|`
    pub d_pq: f64,
    /// `|q - q'|`
    pub d_qq: f64,
}

impl ChordFrame {
    /// `|q - p|`, recovered from the chord.
    pub fn separation(&self) -> f64 {
        self.d_qp - self.d_pp
    }
}

/// Threshold below which two points count as the same point.
pub(crate) fn coincidence_tol(omega: &ConvexPolygon) -> f64 {
    EPS_GEOM * omega.diameter()
}

pub fn chord_frame(omega: &ConvexPolygon, p: Point2, q: Point2) -> Result<ChordFrame> {
    require_interior(omega, p)?;
    require_interior(omega, q)?;
    let sep = p.dist(q);
    if sep <= coincidence_tol(omega) {
        return Err(Error::CoincidentPoints);
    }
    let chord = chord_through(omega, p, q - p)?;
    let fwd = chord.forward_len();
    let back = chord.backward_len();
    // Distances along a single line; summing offsets avoids re-measuring.
    let d_qq = fwd - sep;
    if !(d_qq > 0.0) {
        return Err(Error::NotInterior);
    }
    Ok(ChordFrame {
        p_prime: chord.backward.point,
        q_prime: chord.forward.point,
        d_qp: back + sep,
        d_pp: back,
        d_pq: fwd,
        d_qq,
    })
}
