//! Closed metric balls realized as convex polygons.
//!
//! Funk balls are homothets of the domain about their center, reverse-Funk
//! balls are homothets of the reflected domain (clipped back to the domain),
//! Thompson balls are the intersection of the two, and Hilbert balls are the
//! hull of the radius-`r` points on the spokes through the center.

use crate::error::{Error, Result};
use crate::geom::{
    chord_through, clip_convex, convex_hull, normalize_polygon, require_interior, Chord,
    ClipResult, ConvexPolygon, Point2,
};
use crate::metrics::{distance, offset_for_radius, MetricKind};

#[derive(Clone, Debug, PartialEq)]
pub struct MetricBall {
    pub kind: MetricKind,
    pub center: Point2,
    pub radius: f64,
    /// The realized ball. A zero radius gives `ClipResult::Point(center)`.
    pub shape: ClipResult,
}

impl MetricBall {
    pub fn polygon(&self) -> Option<&ConvexPolygon> {
        self.shape.as_polygon()
    }

    /// Number of corners of the realized shape.
    pub fn vertex_count(&self) -> usize {
        self.shape.vertices().len()
    }
}

/// Chord through the center `p` and the domain vertex `vertex_index`; the
/// forward end of `chord` is that vertex.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Spoke {
    pub vertex_index: usize,
    pub chord: Chord,
}

pub fn spokes(omega: &ConvexPolygon, p: Point2) -> Result<Vec<Spoke>> {
    require_interior(omega, p)?;
    omega
        .vertices()
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            Ok(Spoke {
                vertex_index: i,
                chord: chord_through(omega, p, v - p)?,
            })
        })
        .collect()
}

fn check_radius(r: f64) -> Result<()> {
    if r >= 0.0 && r.is_finite() {
        Ok(())
    } else {
        Err(Error::Degenerate("radius must be finite and non-negative"))
    }
}

/// Polygon through `pts` when it has area, otherwise the center point.
fn realize(pts: &[Point2], center: Point2, hull: bool) -> ClipResult {
    let poly = if hull {
        convex_hull(pts)
    } else {
        normalize_polygon(pts)
    };
    match poly {
        Ok(poly) => ClipResult::Polygon(poly),
        Err(_) => ClipResult::Point(center),
    }
}

fn point_ball(kind: MetricKind, p: Point2) -> MetricBall {
    MetricBall {
        kind,
        center: p,
        radius: 0.0,
        shape: ClipResult::Point(p),
    }
}

pub fn funk_ball(omega: &ConvexPolygon, p: Point2, r: f64) -> Result<MetricBall> {
    require_interior(omega, p)?;
    check_radius(r)?;
    if r == 0.0 {
        return Ok(point_ball(MetricKind::Funk, p));
    }
    let ratio = -(-r).exp_m1();
    let pts: Vec<Point2> = omega
        .vertices()
        .iter()
        .map(|&v| p + (v - p) * ratio)
        .collect();
    Ok(MetricBall {
        kind: MetricKind::Funk,
        center: p,
        radius: r,
        shape: realize(&pts, p, false),
    })
}

pub fn reverse_funk_ball(omega: &ConvexPolygon, p: Point2, r: f64) -> Result<MetricBall> {
    require_interior(omega, p)?;
    check_radius(r)?;
    if r == 0.0 {
        return Ok(point_ball(MetricKind::ReverseFunk, p));
    }
    let ratio = r.exp_m1();
    let pts: Vec<Point2> = omega
        .vertices()
        .iter()
        .map(|&v| p + (p - v) * ratio)
        .collect();
    let shape = match realize(&pts, p, false) {
        ClipResult::Polygon(reflected) => clip_convex(omega, &reflected),
        degenerate => degenerate,
    };
    Ok(MetricBall {
        kind: MetricKind::ReverseFunk,
        center: p,
        radius: r,
        shape,
    })
}

pub fn hilbert_ball(omega: &ConvexPolygon, p: Point2, r: f64) -> Result<MetricBall> {
    require_interior(omega, p)?;
    check_radius(r)?;
    if r == 0.0 {
        return Ok(point_ball(MetricKind::Hilbert, p));
    }
    let mut pts = Vec::with_capacity(2 * omega.len());
    for spoke in spokes(omega, p)? {
        let c = &spoke.chord;
        let (fwd, back) = (c.forward_len(), c.backward_len());
        pts.push(c.at(offset_for_radius(MetricKind::Hilbert, fwd, back, r)));
        pts.push(c.at(-offset_for_radius(MetricKind::Hilbert, back, fwd, r)));
    }
    Ok(MetricBall {
        kind: MetricKind::Hilbert,
        center: p,
        radius: r,
        shape: realize(&pts, p, true),
    })
}

pub fn thompson_ball(omega: &ConvexPolygon, p: Point2, r: f64) -> Result<MetricBall> {
    let forward = funk_ball(omega, p, r)?;
    let reverse = reverse_funk_ball(omega, p, r)?;
    let shape = match forward.shape.intersect(&reverse.shape) {
        ClipResult::Empty => ClipResult::Point(p),
        s => s,
    };
    Ok(MetricBall {
        kind: MetricKind::Thompson,
        center: p,
        radius: r,
        shape,
    })
}

pub fn ball(omega: &ConvexPolygon, kind: MetricKind, p: Point2, r: f64) -> Result<MetricBall> {
    match kind {
        MetricKind::Funk => funk_ball(omega, p, r),
        MetricKind::ReverseFunk => reverse_funk_ball(omega, p, r),
        MetricKind::Hilbert => hilbert_ball(omega, p, r),
        MetricKind::Thompson => thompson_ball(omega, p, r),
    }
}

/// Distance-based membership: `d(center, x) <= radius + slack`.
pub fn contains(omega: &ConvexPolygon, ball: &MetricBall, x: Point2, slack: f64) -> Result<bool> {
    Ok(distance(omega, ball.kind, ball.center, x)? <= ball.radius + slack)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point2 {
        Point2::new(x, y)
    }

    fn inner_square() -> ConvexPolygon {
        ConvexPolygon::rectangle(0.25, 0.25, 0.75, 0.75).unwrap()
    }

    fn same_polygon(a: &ConvexPolygon, b: &ConvexPolygon, tol: f64) -> bool {
        a.len() == b.len()
            && a.vertices()
                .iter()
                .zip(b.vertices())
                .all(|(u, v)| u.dist(*v) <= tol)
    }

    #[test]
    fn funk_ball_fixture() {
        let sq = ConvexPolygon::unit_square();
        let b = funk_ball(&sq, p(0.5, 0.5), 2f64.ln()).unwrap();
        assert!(same_polygon(b.polygon().unwrap(), &inner_square(), 1e-12));
        let b = funk_ball(&sq, p(0.5, 0.5), 0.0).unwrap();
        assert_eq!(b.shape, ClipResult::Point(p(0.5, 0.5)));
        // Large radius: still strictly inside the domain.
        let b = funk_ball(&sq, p(0.3, 0.6), 30.0).unwrap();
        for &v in b.polygon().unwrap().vertices() {
            assert!(sq.contains(v, 0.0));
        }
    }

    #[test]
    fn reverse_funk_ball_fixture() {
        let sq = ConvexPolygon::unit_square();
        let b = reverse_funk_ball(&sq, p(0.5, 0.5), 2f64.ln()).unwrap();
        assert!(same_polygon(b.polygon().unwrap(), &sq, 1e-12));
        assert_eq!(
            reverse_funk_ball(&sq, p(0.5, 0.5), 0.0).unwrap().shape,
            ClipResult::Point(p(0.5, 0.5))
        );
    }

    #[test]
    fn hilbert_ball_fixture() {
        let sq = ConvexPolygon::unit_square();
        let b = hilbert_ball(&sq, p(0.5, 0.5), 0.5 * 3f64.ln()).unwrap();
        assert!(same_polygon(b.polygon().unwrap(), &inner_square(), 1e-12));
        assert_eq!(b.vertex_count(), 4);
        assert_eq!(
            hilbert_ball(&sq, p(0.5, 0.5), 0.0).unwrap().shape,
            ClipResult::Point(p(0.5, 0.5))
        );
    }

    #[test]
    fn thompson_ball_fixture() {
        let sq = ConvexPolygon::unit_square();
        let b = thompson_ball(&sq, p(0.5, 0.5), 2f64.ln()).unwrap();
        assert!(same_polygon(b.polygon().unwrap(), &inner_square(), 1e-12));
        assert_eq!(
            thompson_ball(&sq, p(0.5, 0.5), 0.0).unwrap().shape,
            ClipResult::Point(p(0.5, 0.5))
        );
    }

    #[test]
    fn spokes_end_at_vertices() {
        let omega = ConvexPolygon::new(&[p(0., 0.), p(4., 0.), p(5., 3.), p(1., 4.)]).unwrap();
        let c = p(2.0, 1.7);
        let s = spokes(&omega, c).unwrap();
        assert_eq!(s.len(), 4);
        for spoke in s {
            let v = omega.vertex(spoke.vertex_index);
            assert!(spoke.chord.forward.point.dist(v) < 1e-9);
        }
    }

    #[test]
    fn containment_by_distance() {
        let sq = ConvexPolygon::unit_square();
        let b = hilbert_ball(&sq, p(0.5, 0.5), 0.5 * 3f64.ln()).unwrap();
        assert!(contains(&sq, &b, p(0.5, 0.5), 0.0).unwrap());
        assert!(contains(&sq, &b, p(0.75, 0.5), 1e-12).unwrap());
        assert!(!contains(&sq, &b, p(0.9, 0.5), 1e-7).unwrap());
        assert_eq!(contains(&sq, &b, p(1.5, 0.5), 0.0), Err(Error::NotInterior));
    }

    #[test]
    fn funk_area_scaling() {
        let omega = ConvexPolygon::new(&[p(0., 0.), p(3., 0.), p(4., 2.), p(1., 3.)]).unwrap();
        let r = 0.8;
        let b = ball(&omega, MetricKind::Funk, p(2.0, 1.5), r).unwrap();
        let ratio = 1.0 - (-r).exp();
        let expect = ratio * ratio * omega.area();
        assert!((b.polygon().unwrap().area() - expect).abs() < 1e-12);
    }

    #[test]
    fn negative_radius_rejected() {
        let sq = ConvexPolygon::unit_square();
        for kind in MetricKind::ALL {
            assert!(ball(&sq, kind, p(0.5, 0.5), -1.0).is_err());
        }
    }
}
