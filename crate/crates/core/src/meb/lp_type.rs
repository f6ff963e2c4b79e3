use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::primitives::{basis_computation_inner, violation_test};
use super::{Basis, MebInstance, MebResult, ObjectiveValue, Solver, SolverStats};
use crate::balls::hilbert_ball;
use crate::error::{Error, Result};
use crate::metrics::MetricKind;

/// Recursion guard; every level strictly raises the objective, so real
/// inputs stay far below it.
const MAX_DEPTH: usize = 4096;

struct Run<'a> {
    inst: &'a MebInstance,
    stats: SolverStats,
}

impl Run<'_> {
    /// Basis of `start ∪ rest`, scanning `rest` in order.
    ///
    /// On a violation by `rest[i]` the scan restarts on everything seen so
    /// far (the old start set first, then `rest[..i]`) from the new basis.
    fn solve(&mut self, rest: &[usize], start: Basis, depth: usize) -> Result<Basis> {
        if depth > MAX_DEPTH {
            return Err(Error::SolverDiverged);
        }
        let mut basis = start.clone();
        for (i, &x) in rest.iter().enumerate() {
            if basis.contains(x) {
                continue;
            }
            self.stats.violation_tests += 1;
            if !violation_test(self.inst, &basis, x)? {
                continue;
            }
            self.stats.basis_computations += 1;
            let next = basis_computation_inner(self.inst, &basis, x, &mut self.stats)?;
            let seen: Vec<usize> = start
                .points
                .iter()
                .chain(&rest[..i])
                .copied()
                .filter(|p| !next.contains(*p))
                .collect();
            basis = self.solve(&seen, next, depth + 1)?;
        }
        Ok(basis)
    }
}

/// Randomized LP-type solver for the Hilbert minimum enclosing ball.
///
/// Points are shuffled with the instance seed, so identical instances give
/// bit-identical results.
pub fn lp_type_solve(inst: &MebInstance) -> Result<MebResult> {
    if inst.kind != MetricKind::Hilbert {
        return Err(Error::UnsupportedMetric(inst.kind.name()));
    }
    if inst.is_empty() {
        return Err(Error::EmptyInstance);
    }
    let mut order: Vec<usize> = (0..inst.len()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(inst.seed);
    order.shuffle(&mut rng);

    let first = order[0];
    let start = Basis {
        points: vec![first],
        value: ObjectiveValue::new(0.0, inst.points[first]),
    };
    let mut run = Run {
        inst,
        stats: SolverStats::default(),
    };
    let basis = run.solve(&order[1..], start, 0)?;
    let ball = hilbert_ball(&inst.omega, basis.value.center, basis.value.radius)?;
    Ok(MebResult {
        solver: Solver::LpType,
        value: basis.value,
        basis: Some(basis),
        ball,
        stats: run.stats,
    })
}
