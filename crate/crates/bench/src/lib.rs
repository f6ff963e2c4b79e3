//! Seeded inputs shared by the benchmarks.

use hmeb_core::random::{random_convex_polygon, random_instance, random_points};
use hmeb_core::{ConvexPolygon, MebInstance, MetricKind, Point2};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random `m`-gon with `n` interior points.
pub fn scene(seed: u64, m: usize, n: usize) -> (ConvexPolygon, Vec<Point2>) {
    let mut rng = rng(seed);
    let omega = random_convex_polygon(&mut rng, m);
    let points = random_points(&mut rng, &omega, n);
    (omega, points)
}

pub fn instance(seed: u64, m: usize, n: usize, kind: MetricKind) -> MebInstance {
    random_instance(&mut rng(seed), m, n, kind).expect("random points are interior")
}
