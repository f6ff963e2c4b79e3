//! Minimum enclosing balls.
//!
//! The objective `f(G)` maps a point set to the pair (radius, center) of its
//! minimum enclosing ball, ordered lexicographically, with the center made
//! unique by taking the lexicographically smallest optimal center. Two
//! solvers compute it:
//!
//! - [`lp_type_solve`]: randomized LP-type recursion over bases of at most
//!   three points, with violation tests and basis computations specialised
//!   to the Hilbert metric.
//! - [`min_ball_bisection`]: bisection on the radius, intersecting the
//!   realized balls around every point; valid for all four metrics and used
//!   as the reference oracle.

mod bisection;
mod lp_type;
mod primitives;

use std::cmp::Ordering;
use std::fmt;

use crate::balls::MetricBall;
use crate::error::{Error, Result};
use crate::geom::{coincidence_tol, point_location, ConvexPolygon, Location, Point2};
use crate::metrics::MetricKind;
use crate::{EPS_DIST, EPS_R};

pub use bisection::{feasible_center_set, min_ball_bisection};
pub use lp_type::lp_type_solve;
pub use primitives::{
    basis_computation, objective_f, three_point_value, two_point_center, violation_test,
    ObjectiveCache,
};

/// Value of the objective: radius first, then the center lexicographically.
#[derive(Clone, Copy, Debug)]
pub struct ObjectiveValue {
    pub radius: f64,
    pub center: Point2,
}

impl ObjectiveValue {
    pub fn new(radius: f64, center: Point2) -> Self {
        Self { radius, center }
    }

    /// Lexicographic comparison where components closer than `tol` tie.
    pub fn cmp_approx(&self, other: &Self, tol: f64) -> Ordering {
        fn cmp(a: f64, b: f64, tol: f64) -> Ordering {
            if (a - b).abs() <= tol {
                Ordering::Equal
            } else {
                a.total_cmp(&b)
            }
        }
        cmp(self.radius, other.radius, tol)
            .then(cmp(self.center.x, other.center.x, tol))
            .then(cmp(self.center.y, other.center.y, tol))
    }
}

impl PartialEq for ObjectiveValue {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for ObjectiveValue {}

impl PartialOrd for ObjectiveValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ObjectiveValue {
    fn cmp(&self, other: &Self) -> Ordering {
        self.radius
            .total_cmp(&other.radius)
            .then(self.center.lex_cmp(&other.center))
    }
}

impl fmt::Display for ObjectiveValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(r={:.12}, c=({:.12}, {:.12}))",
            self.radius, self.center.x, self.center.y
        )
    }
}

/// At most three support points (indices into the instance) and their value.
#[derive(Clone, Debug, PartialEq)]
pub struct Basis {
    pub points: Vec<usize>,
    pub value: ObjectiveValue,
}

impl Basis {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.points.contains(&i)
    }
}

/// Solver tolerances. Geometric predicates always use [`crate::EPS_GEOM`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    /// Slack for distance comparisons.
    pub dist: f64,
    /// Radius bisection stopping width.
    pub radius: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            dist: EPS_DIST,
            radius: EPS_R,
        }
    }
}

/// A validated point set in a domain, with the metric and seed to solve it with.
#[derive(Clone, Debug)]
pub struct MebInstance {
    pub omega: ConvexPolygon,
    /// Deduplicated interior points.
    pub points: Vec<Point2>,
    /// For each entry of `points`, the index of its first occurrence in the
    /// input list.
    pub source_index: Vec<usize>,
    pub kind: MetricKind,
    pub seed: u64,
    pub tol: Tolerances,
}

impl MebInstance {
    /// Validates and deduplicates `raw`. Every point must be interior.
    pub fn new(omega: ConvexPolygon, raw: &[Point2], kind: MetricKind, seed: u64) -> Result<Self> {
        let dup_tol = coincidence_tol(&omega);
        let mut points: Vec<Point2> = Vec::with_capacity(raw.len());
        let mut source_index = Vec::with_capacity(raw.len());
        for (i, &p) in raw.iter().enumerate() {
            if !p.is_finite() {
                return Err(Error::NonFinite);
            }
            if point_location(&omega, p) != Location::Interior {
                return Err(Error::NotInterior);
            }
            if points.iter().all(|q| q.dist(p) > dup_tol) {
                points.push(p);
                source_index.push(i);
            }
        }
        Ok(Self {
            omega,
            points,
            source_index,
            kind,
            seed,
            tol: Tolerances::default(),
        })
    }

    pub fn with_tolerances(mut self, tol: Tolerances) -> Self {
        self.tol = tol;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolverStats {
    pub violation_tests: u64,
    pub basis_computations: u64,
    pub bisection_iterations: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Solver {
    LpType,
    Bisection,
}

impl Solver {
    pub fn name(self) -> &'static str {
        match self {
            Solver::LpType => "lp_type",
            Solver::Bisection => "bisection",
        }
    }
}

impl std::str::FromStr for Solver {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "lp_type" => Ok(Solver::LpType),
            "bisection" => Ok(Solver::Bisection),
            other => Err(format!("unknown solver {other:?}")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct MebResult {
    pub solver: Solver,
    pub value: ObjectiveValue,
    /// Support set; only the LP-type path produces one.
    pub basis: Option<Basis>,
    pub ball: MetricBall,
    pub stats: SolverStats,
}

/// Runs the requested solver.
pub fn solve(instance: &MebInstance, solver: Solver) -> Result<MebResult> {
    match solver {
        Solver::LpType => lp_type_solve(instance),
        Solver::Bisection => min_ball_bisection(instance),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn objective_order_is_lexicographic() {
        let a = ObjectiveValue::new(1.0, Point2::new(0.5, 0.9));
        let b = ObjectiveValue::new(1.0, Point2::new(0.6, 0.0));
        let c = ObjectiveValue::new(1.5, Point2::new(0.0, 0.0));
        assert!(a < b && b < c);
        let d = ObjectiveValue::new(1.0, Point2::new(0.5, 0.1));
        assert!(d < a);
        assert_eq!(
            a.cmp_approx(&ObjectiveValue::new(1.0 + 1e-12, a.center), 1e-9),
            Ordering::Equal
        );
    }

    #[test]
    fn instance_dedups_and_validates() {
        let sq = ConvexPolygon::unit_square();
        let x = Point2::new(0.3, 0.3);
        let inst = MebInstance::new(
            sq.clone(),
            &[x, x, Point2::new(0.6, 0.2), x],
            MetricKind::Hilbert,
            0,
        )
        .unwrap();
        assert_eq!(inst.len(), 2);
        assert_eq!(inst.source_index, vec![0, 2]);
        assert_eq!(
            MebInstance::new(sq.clone(), &[Point2::new(1.0, 0.5)], MetricKind::Hilbert, 0)
                .unwrap_err(),
            Error::NotInterior
        );
        assert_eq!(
            MebInstance::new(sq, &[Point2::new(f64::NAN, 0.5)], MetricKind::Hilbert, 0)
                .unwrap_err(),
            Error::NonFinite
        );
    }
}
