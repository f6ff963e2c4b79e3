//! Random domains and instances for tests and benchmarks.

use std::f64::consts::TAU;

use rand::Rng;

use crate::error::Result;
use crate::geom::{ConvexPolygon, Point2};
use crate::meb::MebInstance;
use crate::metrics::MetricKind;

/// A convex polygon with exactly `m` vertices (`m >= 3`) on a random
/// ellipse, rotated and translated at random.
///
/// Angles are jittered around an even spacing, which keeps every interior
/// angle well away from 180 degrees.
pub fn random_convex_polygon<R: Rng + ?Sized>(rng: &mut R, m: usize) -> ConvexPolygon {
    assert!(m >= 3, "a polygon needs at least three vertices");
    let step = TAU / m as f64;
    let a = rng.random_range(0.5..2.0);
    let b = rng.random_range(0.5..2.0);
    let rot = rng.random_range(0.0..TAU);
    let (s, c) = rot.sin_cos();
    let shift = Point2::new(rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0));
    let pts: Vec<Point2> = (0..m)
        .map(|i| {
            let t = step * (i as f64 + rng.random_range(-0.3..0.3));
            let (x, y) = (a * t.cos(), b * t.sin());
            Point2::new(c * x - s * y, s * x + c * y) + shift
        })
        .collect();
    ConvexPolygon::new(&pts).expect("points on an ellipse are in convex position")
}

/// A uniformly drawn interior point, pulled 10% toward the centroid so it
/// stays clear of the boundary.
pub fn random_interior_point<R: Rng + ?Sized>(rng: &mut R, omega: &ConvexPolygon) -> Point2 {
    let v = omega.vertices();
    let (mut lo, mut hi) = (v[0], v[0]);
    for p in v {
        lo = Point2::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point2::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    let c = omega.centroid();
    loop {
        let p = Point2::new(rng.random_range(lo.x..hi.x), rng.random_range(lo.y..hi.y));
        if omega.strictly_contains(p) {
            return c.lerp(p, 0.9);
        }
    }
}

pub fn random_points<R: Rng + ?Sized>(rng: &mut R, omega: &ConvexPolygon, n: usize) -> Vec<Point2> {
    (0..n).map(|_| random_interior_point(rng, omega)).collect()
}

/// Random `m`-gon with `n` interior points; the solver seed is drawn too.
pub fn random_instance<R: Rng + ?Sized>(
    rng: &mut R,
    m: usize,
    n: usize,
    kind: MetricKind,
) -> Result<MebInstance> {
    let omega = random_convex_polygon(rng, m);
    let points = random_points(rng, &omega, n);
    let seed = rng.random();
    MebInstance::new(omega, &points, kind, seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn polygons_keep_every_vertex() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for m in 3..=16 {
            for _ in 0..20 {
                assert_eq!(random_convex_polygon(&mut rng, m).len(), m);
            }
        }
    }

    #[test]
    fn points_are_interior() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let omega = random_convex_polygon(&mut rng, 5);
        for p in random_points(&mut rng, &omega, 200) {
            assert!(omega.strictly_contains(p));
        }
    }

    #[test]
    fn seeded_draws_repeat() {
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            random_instance(&mut rng, 6, 4, MetricKind::Hilbert)
                .unwrap()
                .points
        };
        assert_eq!(draw(9), draw(9));
        assert_ne!(draw(9), draw(10));
    }
}
