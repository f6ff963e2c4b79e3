//! Primitive-call counts of the LP-type solver as the input grows.

use std::fmt::Write;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::meb::lp_type_solve;
use crate::metrics::MetricKind;
use crate::random::random_instance;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BenchConfig {
    /// Point counts.
    pub n: Vec<usize>,
    /// Domain vertex counts.
    pub m: Vec<usize>,
    pub trials: usize,
    #[serde(default)]
    pub seed: u64,
}

impl BenchConfig {
    pub fn validate(&self) -> std::result::Result<(), String> {
        if self.n.is_empty() || self.m.is_empty() {
            return Err("n and m must list at least one value".into());
        }
        if self.n.contains(&0) {
            return Err("n values must be positive".into());
        }
        if let Some(m) = self.m.iter().find(|&&m| m < 3) {
            return Err(format!("m = {m} is below 3"));
        }
        if self.trials == 0 {
            return Err("trials must be positive".into());
        }
        Ok(())
    }
}

/// Means over the trials of one `(n, m)` cell.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub trials: usize,
    pub violation_tests: f64,
    pub basis_computations: f64,
    pub wall_ms: f64,
}

impl BenchRow {
    pub fn violation_tests_per_point(&self) -> f64 {
        self.violation_tests / self.n as f64
    }
}

/// Seed of one cell, so that adding rows leaves the others unchanged.
fn cell_seed(seed: u64, n: usize, m: usize) -> u64 {
    let mut h = seed ^ 0x9e37_79b9_7f4a_7c15;
    for v in [n as u64, m as u64] {
        h = (h ^ v).wrapping_mul(0x1000_0000_01b3).rotate_left(29);
    }
    h
}

pub fn run(config: &BenchConfig) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for &m in &config.m {
        for &n in &config.n {
            let mut rng = ChaCha8Rng::seed_from_u64(cell_seed(config.seed, n, m));
            let (mut vt, mut bc, mut ms) = (0u64, 0u64, 0.0);
            for _ in 0..config.trials {
                let inst = random_instance(&mut rng, m, n, MetricKind::Hilbert)?;
                let start = Instant::now();
                let res = lp_type_solve(&inst)?;
                ms += start.elapsed().as_secs_f64() * 1e3;
                vt += res.stats.violation_tests;
                bc += res.stats.basis_computations;
            }
            let t = config.trials as f64;
            rows.push(BenchRow {
                n,
                m,
                trials: config.trials,
                violation_tests: vt as f64 / t,
                basis_computations: bc as f64 / t,
                wall_ms: ms / t,
            });
        }
    }
    Ok(rows)
}

/// CSV with a header line. `timing = false` drops the wall-time column,
/// which is the only column that varies between runs.
pub fn to_csv(rows: &[BenchRow], timing: bool) -> String {
    let mut out =
        String::from("n,m,trials,violation_tests,basis_computations,violation_tests_per_point");
    if timing {
        out.push_str(",wall_ms");
    }
    out.push('\n');
    for r in rows {
        let _ = write!(
            out,
            "{},{},{},{:.1},{:.1},{:.4}",
            r.n,
            r.m,
            r.trials,
            r.violation_tests,
            r.basis_computations,
            r.violation_tests_per_point()
        );
        if timing {
            let _ = write!(out, ",{:.3}", r.wall_ms);
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config() -> BenchConfig {
        BenchConfig {
            n: vec![10, 50],
            m: vec![4, 8],
            trials: 2,
            seed: 5,
        }
    }

    #[test]
    fn one_row_per_cell() {
        let rows = run(&config()).unwrap();
        assert_eq!(rows.len(), 4);
        let csv = to_csv(&rows, true);
        assert_eq!(csv.lines().count(), 5);
        assert!(csv.lines().all(|l| l.split(',').count() == 7));
    }

    #[test]
    fn counts_repeat_for_a_seed() {
        let a = to_csv(&run(&config()).unwrap(), false);
        let b = to_csv(&run(&config()).unwrap(), false);
        assert_eq!(a, b);
    }

    #[test]
    fn bad_configs() {
        let mut c = config();
        c.m = vec![2];
        assert!(c.validate().is_err());
        let mut c = config();
        c.trials = 0;
        assert!(c.validate().is_err());
        assert!(config().validate().is_ok());
    }
}
