mod common;

use common::{config, scene};
use hmeb_core::meb::feasible_center_set;
use hmeb_core::{lp_type_solve, min_ball_bisection, MebInstance, MetricKind};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const EPS: f64 = hmeb_core::EPS_DIST;

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn same_seed_same_bits(seed: u64, n in 1usize..15) {
        let (omega, pts) = scene(seed, n);
        let inst = MebInstance::new(omega, &pts, MetricKind::Hilbert, seed).unwrap();
        let a = lp_type_solve(&inst).unwrap();
        let b = lp_type_solve(&inst).unwrap();
        prop_assert_eq!(a.value.radius.to_bits(), b.value.radius.to_bits());
        prop_assert_eq!(a.value.center.x.to_bits(), b.value.center.x.to_bits());
        prop_assert_eq!(a.value.center.y.to_bits(), b.value.center.y.to_bits());
        prop_assert_eq!(a.basis, b.basis);
        prop_assert_eq!(a.stats, b.stats);
    }

    #[test]
    fn order_does_not_change_the_optimum(seed: u64, n in 2usize..12) {
        let (omega, mut pts) = scene(seed, n);
        let first = lp_type_solve(&MebInstance::new(omega.clone(), &pts, MetricKind::Hilbert, 1).unwrap())
            .unwrap()
            .value;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for k in 0..10 {
            pts.shuffle(&mut rng);
            let inst = MebInstance::new(omega.clone(), &pts, MetricKind::Hilbert, k).unwrap();
            let v = lp_type_solve(&inst).unwrap().value;
            prop_assert!((v.radius - first.radius).abs() <= EPS);
            prop_assert!(v.center.dist(first.center) <= 1e-6, "{} vs {}", v, first);
        }
    }

    #[test]
    fn feasibility_is_monotone_in_the_radius(seed: u64, n in 1usize..8, r1 in 0.0..3.0f64, dr in 0.0..1.0f64) {
        let (omega, pts) = scene(seed, n);
        for kind in MetricKind::ALL {
            let inst = MebInstance::new(omega.clone(), &pts, kind, 0).unwrap();
            if !feasible_center_set(&inst, r1).is_empty() {
                prop_assert!(!feasible_center_set(&inst, r1 + dr).is_empty(), "{kind}");
            }
        }
    }

    #[test]
    fn bisection_balls_enclose_every_point(seed: u64, n in 1usize..10) {
        let (omega, pts) = scene(seed, n);
        for kind in MetricKind::ALL {
            let inst = MebInstance::new(omega.clone(), &pts, kind, 0).unwrap();
            let res = min_ball_bisection(&inst).unwrap();
            for &x in &inst.points {
                let d = hmeb_core::distance(&inst.omega, kind, res.value.center, x).unwrap();
                prop_assert!(d <= res.value.radius + EPS, "{kind}");
            }
            if kind != MetricKind::Hilbert && res.value.radius >= 1e-9 {
                prop_assert!(feasible_center_set(&inst, res.value.radius - 1e-9).is_empty(), "{kind}");
            }
        }
    }
}
