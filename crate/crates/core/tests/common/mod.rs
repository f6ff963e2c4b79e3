#![allow(dead_code)]

use hmeb_core::random::{random_convex_polygon, random_interior_point};
use hmeb_core::{ConvexPolygon, Point2};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A random domain and `k` interior points, drawn from `seed`.
pub fn scene(seed: u64, k: usize) -> (ConvexPolygon, Vec<Point2>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = rng.random_range(3..=12);
    let omega = random_convex_polygon(&mut rng, m);
    let pts = (0..k)
        .map(|_| random_interior_point(&mut rng, &omega))
        .collect();
    (omega, pts)
}

pub fn direction() -> impl Strategy<Value = Point2> {
    (0.0..std::f64::consts::TAU).prop_map(|t| Point2::new(t.cos(), t.sin()))
}

pub fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}
