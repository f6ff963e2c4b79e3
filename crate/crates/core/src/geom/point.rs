use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::EPS_GEOM;

/// A point (or vector) in the plane.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Constructor that rejects NaN and infinite coordinates.
    pub fn try_new(x: f64, y: f64) -> Result<Self> {
        if x.is_finite() && y.is_finite() {
            Ok(Self { x, y })
        } else {
            Err(Error::NonFinite)
        }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    #[inline]
    pub fn dot(self, o: Self) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 3D cross product.
    #[inline]
    pub fn cross(self, o: Self) -> f64 {
        self.x * o.y - self.y * o.x
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn dist(self, o: Self) -> f64 {
        (self - o).norm()
    }

    #[inline]
    pub fn max_abs(self) -> f64 {
        self.x.abs().max(self.y.abs())
    }

    /// Lexicographic comparison: x first, then y.
    pub fn lex_cmp(&self, o: &Self) -> Ordering {
        self.x.total_cmp(&o.x).then(self.y.total_cmp(&o.y))
    }

    /// `self + t * (o - self)`.
    #[inline]
    pub fn lerp(self, o: Self, t: f64) -> Self {
        self + (o - self) * t
    }
}

impl Add for Point2 {
    type Output = Point2;
    #[inline]
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    #[inline]
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    #[inline]
    fn mul(self, s: f64) -> Self {
        Self::new(self.x * s, self.y * s)
    }
}

impl Neg for Point2 {
    type Output = Point2;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

impl From<[f64; 2]> for Point2 {
    fn from(p: [f64; 2]) -> Self {
        Self::new(p[0], p[1])
    }
}

impl From<Point2> for [f64; 2] {
    fn from(p: Point2) -> Self {
        [p.x, p.y]
    }
}

/// Largest coordinate magnitude among `pts`; the length scale that the
/// tolerance-aware predicates multiply `EPS_GEOM` by.
pub fn coordinate_scale<'a>(pts: impl IntoIterator<Item = &'a Point2>) -> f64 {
    pts.into_iter().fold(0.0, |m, p| m.max(p.max_abs()))
}

/// Sign of the signed twice-area of triangle `abc`.
///
/// Returns 0 when `|area| <= EPS_GEOM * scale^2` with `scale` the largest
/// coordinate magnitude among the three inputs.
pub fn orientation(a: Point2, b: Point2, c: Point2) -> i32 {
    let scale = a.max_abs().max(b.max_abs()).max(c.max_abs());
    orientation_with(a, b, c, EPS_GEOM * scale * scale)
}

pub(crate) fn orientation_with(a: Point2, b: Point2, c: Point2, area_tol: f64) -> i32 {
    let det = (b - a).cross(c - a);
    if det > area_tol {
        1
    } else if det < -area_tol {
        -1
    } else {
        0
    }
}

/// Closed segment with lexicographically ordered endpoints. `a == b`
/// encodes a single point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Segment2 {
    pub a: Point2,
    pub b: Point2,
}

impl Segment2 {
    pub fn new(p: Point2, q: Point2) -> Self {
        if p.lex_cmp(&q) == Ordering::Greater {
            Self { a: q, b: p }
        } else {
            Self { a: p, b: q }
        }
    }

    pub fn length(&self) -> f64 {
        self.a.dist(self.b)
    }

    pub fn midpoint(&self) -> Point2 {
        self.a.lerp(self.b, 0.5)
    }

    /// Euclidean distance from `p` to the closed segment.
    pub fn distance_to(&self, p: Point2) -> f64 {
        let d = self.b - self.a;
        let len2 = d.dot(d);
        if len2 == 0.0 {
            return p.dist(self.a);
        }
        let t = ((p - self.a).dot(d) / len2).clamp(0.0, 1.0);
        p.dist(self.a + d * t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation_fixtures() {
        let o = Point2::new(0.0, 0.0);
        assert_eq!(
            orientation(o, Point2::new(1.0, 0.0), Point2::new(0.0, 1.0)),
            1
        );
        assert_eq!(
            orientation(o, Point2::new(1.0, 1.0), Point2::new(2.0, 2.0)),
            0
        );
        assert_eq!(
            orientation(o, Point2::new(0.0, 1.0), Point2::new(1.0, 0.0)),
            -1
        );
    }

    #[test]
    fn orientation_tolerance_is_scaled() {
        // 1e-12 off the line at unit scale is collinear, at 1e-6 scale it is not.
        let a = Point2::new(0.0, 0.0);
        assert_eq!(
            orientation(a, Point2::new(1.0, 0.0), Point2::new(0.5, 1e-12)),
            0
        );
        assert_eq!(
            orientation(a, Point2::new(1e-6, 0.0), Point2::new(0.5e-6, 1e-9)),
            1
        );
    }

    #[test]
    fn segment_canonical_order() {
        let s = Segment2::new(Point2::new(1.0, 1.0), Point2::new(1.0, 0.0));
        assert_eq!(s.a, Point2::new(1.0, 0.0));
        assert_eq!(s.b, Point2::new(1.0, 1.0));
        assert!((s.distance_to(Point2::new(2.0, 0.5)) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn try_new_rejects_nan() {
        assert_eq!(Point2::try_new(f64::NAN, 0.0), Err(Error::NonFinite));
        assert!(Point2::try_new(1.0, -2.0).is_ok());
    }
}
