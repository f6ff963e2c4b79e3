//! Hilbert-metric primitives of the LP-type solver.

use std::cmp::Ordering;
use std::collections::HashMap;

use super::bisection::bisect;
use super::{Basis, MebInstance, ObjectiveValue, SolverStats};
use crate::balls::hilbert_ball;
use crate::error::{Error, Result};
use crate::geom::{coincidence_tol, lexicographic_min};
use crate::metrics::{distance, hilbert_distance, MetricKind};

/// Ties between candidate values are judged at this resolution.
const TIE_TOL: f64 = 1e-9;

fn require_hilbert(inst: &MebInstance) -> Result<()> {
    if inst.kind == MetricKind::Hilbert {
        Ok(())
    } else {
        Err(Error::UnsupportedMetric(inst.kind.name()))
    }
}

fn encloses(inst: &MebInstance, value: &ObjectiveValue, idx: &[usize]) -> Result<bool> {
    for &i in idx {
        let d = distance(&inst.omega, inst.kind, value.center, inst.points[i])?;
        if d > value.radius + inst.tol.dist {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `a` beats `b` when its value is smaller, or tied with a smaller support.
fn better(a: &(ObjectiveValue, Vec<usize>), b: &(ObjectiveValue, Vec<usize>)) -> bool {
    match a.0.cmp_approx(&b.0, TIE_TOL) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => a.1.len() < b.1.len() || (a.1.len() == b.1.len() && a.0 < b.0),
    }
}

/// Center of the minimum Hilbert ball of two points.
///
/// The radius is half their distance; the two balls of that radius meet in
/// a segment (or point) of centers, and the lexicographically smallest one
/// is returned.
pub fn two_point_center(inst: &MebInstance, p: usize, q: usize) -> Result<ObjectiveValue> {
    let mut stats = SolverStats::default();
    two_point_inner(inst, p, q, &mut stats)
}

fn two_point_inner(
    inst: &MebInstance,
    p: usize,
    q: usize,
    stats: &mut SolverStats,
) -> Result<ObjectiveValue> {
    require_hilbert(inst)?;
    let (a, b) = (inst.points[p], inst.points[q]);
    if p == q || a.dist(b) <= coincidence_tol(&inst.omega) {
        return Err(Error::CoincidentPoints);
    }
    let radius = 0.5 * hilbert_distance(&inst.omega, a, b)?;
    let ball_a = hilbert_ball(&inst.omega, a, radius)?;
    let ball_b = hilbert_ball(&inst.omega, b, radius)?;
    let centers = ball_a.shape.intersect(&ball_b.shape);
    if centers.is_empty() {
        // Rounding opened a gap wider than the clip tolerance.
        return bisect(inst, &[p, q], stats);
    }
    Ok(ObjectiveValue::new(radius, lexicographic_min(&centers)?))
}

/// Value of a three-point set and the support that attains it.
fn three_point_inner(
    inst: &MebInstance,
    idx: [usize; 3],
    stats: &mut SolverStats,
) -> Result<(ObjectiveValue, Vec<usize>)> {
    let [a, b, c] = idx;
    let mut best: Option<(ObjectiveValue, Vec<usize>)> = None;
    for (p, q, third) in [(a, b, c), (a, c, b), (b, c, a)] {
        let v = two_point_inner(inst, p, q, stats)?;
        if encloses(inst, &v, &[third])? {
            let cand = (v, sorted(&[p, q]));
            if best.as_ref().is_none_or(|b| better(&cand, b)) {
                best = Some(cand);
            }
        }
    }
    if let Some(b) = best {
        return Ok(b);
    }
    let v = bisect(inst, &idx, stats)?;
    Ok((v, sorted(&idx)))
}

/// Minimum Hilbert ball value of three points.
///
/// Pairs are screened first; when no pair ball holds the third point the
/// three-support optimum is found by radius bisection on the triple.
pub fn three_point_value(
    inst: &MebInstance,
    a: usize,
    b: usize,
    c: usize,
) -> Result<ObjectiveValue> {
    require_hilbert(inst)?;
    let tol = coincidence_tol(&inst.omega);
    let same = |i: usize, j: usize| i == j || inst.points[i].dist(inst.points[j]) <= tol;
    if same(a, b) || same(a, c) || same(b, c) {
        return Err(Error::CoincidentPoints);
    }
    let mut stats = SolverStats::default();
    Ok(three_point_inner(inst, [a, b, c], &mut stats)?.0)
}

fn sorted(idx: &[usize]) -> Vec<usize> {
    let mut v = idx.to_vec();
    v.sort_unstable();
    v
}

/// Value and minimal support of a set of at most three points.
pub(crate) fn small_value(
    inst: &MebInstance,
    idx: &[usize],
    stats: &mut SolverStats,
) -> Result<(ObjectiveValue, Vec<usize>)> {
    match *idx {
        [] => Err(Error::EmptyInstance),
        [i] => Ok((ObjectiveValue::new(0.0, inst.points[i]), vec![i])),
        [i, j] => Ok((two_point_inner(inst, i, j, stats)?, sorted(idx))),
        [i, j, k] => three_point_inner(inst, [i, j, k], stats),
        _ => Err(Error::Degenerate("more than three support points")),
    }
}

/// Does `x` change the objective of `basis`? Points within `tol.dist` of
/// the ball count as inside.
pub fn violation_test(inst: &MebInstance, basis: &Basis, x: usize) -> Result<bool> {
    if basis.contains(x) {
        return Ok(false);
    }
    let d = distance(&inst.omega, inst.kind, basis.value.center, inst.points[x])?;
    Ok(d > basis.value.radius + inst.tol.dist)
}

/// Basis of `basis ∪ {x}` for a violating `x`.
///
/// Every subset of size one to three that contains `x` is evaluated; the
/// smallest value whose ball holds all of `basis ∪ {x}` wins.
pub fn basis_computation(inst: &MebInstance, basis: &Basis, x: usize) -> Result<Basis> {
    let mut stats = SolverStats::default();
    basis_computation_inner(inst, basis, x, &mut stats)
}

pub(crate) fn basis_computation_inner(
    inst: &MebInstance,
    basis: &Basis,
    x: usize,
    stats: &mut SolverStats,
) -> Result<Basis> {
    require_hilbert(inst)?;
    let others: Vec<usize> = basis.points.iter().copied().filter(|&b| b != x).collect();
    let mut members = others.clone();
    members.push(x);

    let mut candidates: Vec<Vec<usize>> = vec![vec![x]];
    for (i, &a) in others.iter().enumerate() {
        candidates.push(vec![a, x]);
        for &b in &others[i + 1..] {
            candidates.push(vec![a, b, x]);
        }
    }

    let mut best: Option<(ObjectiveValue, Vec<usize>)> = None;
    for cand in candidates {
        let (value, support) = small_value(inst, &cand, stats)?;
        if !encloses(inst, &value, &members)? {
            continue;
        }
        let c = (value, support);
        if best.as_ref().is_none_or(|b| better(&c, b)) {
            best = Some(c);
        }
    }
    let (value, points) = best.ok_or(Error::NoFeasibleBasis)?;
    Ok(Basis { points, value })
}

/// Exact objective on small subsets by exhaustive search over bases of at
/// most three points, with memoized candidate values.
pub struct ObjectiveCache<'a> {
    inst: &'a MebInstance,
    small: HashMap<Vec<usize>, (ObjectiveValue, Vec<usize>)>,
    stats: SolverStats,
}

impl<'a> ObjectiveCache<'a> {
    pub fn new(inst: &'a MebInstance) -> Self {
        Self {
            inst,
            small: HashMap::new(),
            stats: SolverStats::default(),
        }
    }

    fn candidate(&mut self, idx: Vec<usize>) -> Result<(ObjectiveValue, Vec<usize>)> {
        if let Some(v) = self.small.get(&idx) {
            return Ok(v.clone());
        }
        let v = small_value(self.inst, &idx, &mut self.stats)?;
        self.small.insert(idx, v.clone());
        Ok(v)
    }

    /// `f(subset)` together with the support attaining it.
    pub fn evaluate(&mut self, subset: &[usize]) -> Result<(ObjectiveValue, Vec<usize>)> {
        require_hilbert(self.inst)?;
        let mut set = subset.to_vec();
        set.sort_unstable();
        set.dedup();
        if set.is_empty() {
            return Err(Error::EmptyInstance);
        }
        let n = set.len();
        let mut best: Option<(ObjectiveValue, Vec<usize>)> = None;
        let mut consider = |cache: &mut Self, idx: Vec<usize>| -> Result<()> {
            let c = cache.candidate(idx)?;
            if encloses(cache.inst, &c.0, &set)? && best.as_ref().is_none_or(|b| better(&c, b)) {
                best = Some(c);
            }
            Ok(())
        };
        for i in 0..n {
            consider(self, vec![set[i]])?;
            for j in i + 1..n {
                consider(self, vec![set[i], set[j]])?;
                for k in j + 1..n {
                    consider(self, vec![set[i], set[j], set[k]])?;
                }
            }
        }
        match best {
            Some(b) => Ok(b),
            // No basis of size <= 3 encloses the set: fall back to bisection.
            None => Ok((bisect(self.inst, &set, &mut self.stats)?, set)),
        }
    }

    pub fn value(&mut self, subset: &[usize]) -> Result<ObjectiveValue> {
        Ok(self.evaluate(subset)?.0)
    }
}

/// `f(subset)`: minimum enclosing ball value with lexicographic tie-break.
pub fn objective_f(inst: &MebInstance, subset: &[usize]) -> Result<ObjectiveValue> {
    ObjectiveCache::new(inst).value(subset)
}
