use super::{MebInstance, MebResult, ObjectiveValue, Solver, SolverStats};
use crate::balls::ball;
use crate::error::{Error, Result};
use crate::geom::{lexicographic_min, ClipResult};
use crate::metrics::{distance, MetricKind};
use crate::{EPS_GEOM, MAX_BISECTION_ITERS};

/// Inset of the Funk center domain, in units of the clip tolerance.
const CENTER_INSET: f64 = 10.0;

/// Centers `c` with `d(c, x) <= r` for every `x` indexed by `idx`.
///
/// `{c : d(c, x) <= r}` is the ball of the reversed metric around `x`, so
/// Funk and reverse Funk swap here while the symmetric metrics do not.
pub(crate) fn feasible_region(inst: &MebInstance, idx: &[usize], r: f64) -> ClipResult {
    if !(r >= 0.0) || !r.is_finite() || idx.is_empty() {
        return ClipResult::Empty;
    }
    let kind = inst.kind.reversed();
    // Reverse-Funk balls are clipped to the closed domain, so for Funk the
    // region can touch the boundary, where no distance is defined. Centers
    // are kept a few tolerances inside instead.
    let mut region: Option<ClipResult> = match inst.kind {
        MetricKind::Funk => inst
            .omega
            .inset(CENTER_INSET * inst.omega.scale() * EPS_GEOM)
            .ok()
            .map(ClipResult::Polygon),
        _ => None,
    };
    for &i in idx {
        let shape = ball(&inst.omega, kind, inst.points[i], r)
            .expect("instance points are interior")
            .shape;
        let next = match region {
            None => shape,
            Some(reg) => reg.intersect(&shape),
        };
        if next.is_empty() {
            return ClipResult::Empty;
        }
        region = Some(next);
    }
    region.unwrap_or(ClipResult::Empty)
}

/// Set of valid centers at radius `r` for the whole instance.
pub fn feasible_center_set(inst: &MebInstance, r: f64) -> ClipResult {
    let all: Vec<usize> = (0..inst.len()).collect();
    feasible_region(inst, &all, r)
}

/// Bisection on the radius over the points indexed by `idx`.
pub(crate) fn bisect(
    inst: &MebInstance,
    idx: &[usize],
    stats: &mut SolverStats,
) -> Result<ObjectiveValue> {
    let Some(&first) = idx.first() else {
        return Err(Error::EmptyInstance);
    };
    if idx.len() == 1 {
        return Ok(ObjectiveValue::new(0.0, inst.points[first]));
    }
    let omega = &inst.omega;
    let x0 = inst.points[first];

    let mut lo = 0.0f64;
    if inst.kind == MetricKind::Hilbert {
        for (a, &i) in idx.iter().enumerate() {
            for &j in &idx[a + 1..] {
                let d = distance(omega, inst.kind, inst.points[i], inst.points[j])?;
                lo = lo.max(0.5 * d);
            }
        }
    }
    let mut hi = 1.0;
    for &i in idx {
        hi = f64::max(hi, distance(omega, inst.kind, x0, inst.points[i])? + 1.0);
    }

    let mut region = feasible_region(inst, idx, lo);
    if region.is_empty() {
        let mut hi_region = feasible_region(inst, idx, hi);
        let mut iters = 0;
        while hi - lo > inst.tol.radius && iters < MAX_BISECTION_ITERS {
            let mid = 0.5 * (lo + hi);
            let reg = feasible_region(inst, idx, mid);
            if reg.is_empty() {
                lo = mid;
            } else {
                hi = mid;
                hi_region = reg;
            }
            iters += 1;
        }
        stats.bisection_iterations += iters as u64;
        region = hi_region;
    } else {
        hi = lo;
    }
    let center = lexicographic_min(&region)?;
    Ok(ObjectiveValue::new(hi, center))
}

/// Reference minimum enclosing ball by radius bisection; any metric.
pub fn min_ball_bisection(inst: &MebInstance) -> Result<MebResult> {
    if inst.is_empty() {
        return Err(Error::EmptyInstance);
    }
    let mut stats = SolverStats::default();
    let all: Vec<usize> = (0..inst.len()).collect();
    let value = bisect(inst, &all, &mut stats)?;
    let ball = ball(&inst.omega, inst.kind, value.center, value.radius)?;
    Ok(MebResult {
        solver: Solver::Bisection,
        value,
        basis: None,
        ball,
        stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{ConvexPolygon, Point2};
    use crate::EPS_DIST;

    fn pair_instance(kind: MetricKind) -> MebInstance {
        MebInstance::new(
            ConvexPolygon::unit_square(),
            &[Point2::new(0.25, 0.5), Point2::new(0.75, 0.5)],
            kind,
            0,
        )
        .unwrap()
    }

    #[test]
    fn single_point_has_zero_radius() {
        let x = Point2::new(0.2, 0.7);
        for kind in MetricKind::ALL {
            let inst = MebInstance::new(ConvexPolygon::unit_square(), &[x, x, x], kind, 0).unwrap();
            let res = min_ball_bisection(&inst).unwrap();
            assert_eq!(res.value.radius, 0.0);
            assert_eq!(res.value.center, x);
        }
    }

    #[test]
    fn feasible_set_of_single_point_contains_it() {
        let inst = MebInstance::new(
            ConvexPolygon::unit_square(),
            &[Point2::new(0.3, 0.4)],
            MetricKind::Funk,
            0,
        )
        .unwrap();
        for r in [0.0, 0.1, 2.0] {
            assert!(feasible_center_set(&inst, r).contains(Point2::new(0.3, 0.4), 1e-12));
        }
    }

    #[test]
    fn hilbert_pair_center_set_is_the_bisector_segment() {
        let inst = pair_instance(MetricKind::Hilbert);
        let half = 0.5 * 3f64.ln();
        match feasible_center_set(&inst, half) {
            ClipResult::Segment(s) => {
                assert!((s.a.x - 0.5).abs() < 1e-9 && (s.b.x - 0.5).abs() < 1e-9);
                assert!(s.length() > 0.1);
            }
            other => panic!("expected a segment, got {other:?}"),
        }
        assert!(feasible_center_set(&inst, 0.4).is_empty());
    }

    #[test]
    fn hilbert_pair_radius() {
        let res = min_ball_bisection(&pair_instance(MetricKind::Hilbert)).unwrap();
        assert!((res.value.radius - 0.5 * 3f64.ln()).abs() <= 1e-10);
        assert!((res.value.center.x - 0.5).abs() < 1e-9);
        assert!(res.basis.is_none());
    }

    #[test]
    fn weak_metric_results_enclose_points() {
        for kind in MetricKind::ALL {
            let inst = MebInstance::new(
                ConvexPolygon::unit_square(),
                &[
                    Point2::new(0.2, 0.3),
                    Point2::new(0.7, 0.4),
                    Point2::new(0.5, 0.85),
                ],
                kind,
                0,
            )
            .unwrap();
            let res = min_ball_bisection(&inst).unwrap();
            for &x in &inst.points {
                let d = distance(&inst.omega, kind, res.value.center, x).unwrap();
                assert!(
                    d <= res.value.radius + EPS_DIST,
                    "{kind}: {d} > {}",
                    res.value.radius
                );
            }
            if kind != MetricKind::Hilbert {
                assert!(
                    feasible_center_set(&inst, res.value.radius - 1e-9).is_empty(),
                    "{kind}"
                );
            }
        }
    }

    #[test]
    fn funk_centers_stay_interior_near_an_edge() {
        // The optimal centers reach down to the bottom edge.
        let inst = MebInstance::new(
            ConvexPolygon::unit_square(),
            &[Point2::new(0.2, 0.01), Point2::new(0.8, 0.01)],
            MetricKind::Funk,
            0,
        )
        .unwrap();
        let res = min_ball_bisection(&inst).unwrap();
        assert!(inst.omega.strictly_contains(res.value.center));
        assert!((res.value.radius - 2.5f64.ln()).abs() < 1e-7);
    }

    #[test]
    fn empty_instance() {
        let inst =
            MebInstance::new(ConvexPolygon::unit_square(), &[], MetricKind::Hilbert, 0).unwrap();
        assert_eq!(min_ball_bisection(&inst).unwrap_err(), Error::EmptyInstance);
    }
}
