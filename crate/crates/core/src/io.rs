//! JSON instance and result documents.
//!
//! Numbers in result documents are rounded to 12 significant digits so that
//! golden files stay stable across platforms.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::geom::{normalize_polygon, ConvexPolygon, Point2};
use crate::meb::{MebInstance, MebResult, Solver, Tolerances};
use crate::metrics::{distance, MetricKind};
use crate::EPS_DIST;

/// Problems with a document, split by who is at fault.
#[derive(Debug, thiserror::Error, PartialEq)]
pub enum DocError {
    /// Malformed JSON or a field with a bad value.
    #[error("{0}")]
    Parse(String),
    /// Well-formed input that violates a geometric precondition.
    #[error(transparent)]
    Geometry(#[from] Error),
}

fn field_error(field: &str, detail: impl std::fmt::Display) -> DocError {
    DocError::Parse(format!("field `{field}`: {detail}"))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub polygon: Vec<[f64; 2]>,
    #[serde(default)]
    pub points: Vec<[f64; 2]>,
    pub metric: String,
    /// Overrides the radius bisection width.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(default)]
    pub seed: u64,
}

impl InstanceDocument {
    pub fn from_json(text: &str) -> Result<Self, DocError> {
        serde_json::from_str(text).map_err(|e| DocError::Parse(e.to_string()))
    }

    pub fn metric(&self) -> Result<MetricKind, DocError> {
        self.metric.parse().map_err(|e| field_error("metric", e))
    }

    pub fn omega(&self) -> Result<ConvexPolygon, DocError> {
        let pts = to_points("polygon", &self.polygon)?;
        Ok(normalize_polygon(&pts)?)
    }

    pub fn tolerances(&self) -> Result<Tolerances, DocError> {
        let mut tol = Tolerances::default();
        if let Some(t) = self.tolerance {
            if !(t > 0.0 && t.is_finite()) {
                return Err(field_error("tolerance", "must be a positive number"));
            }
            tol.radius = t;
        }
        Ok(tol)
    }

    pub fn to_instance(&self) -> Result<MebInstance, DocError> {
        let kind = self.metric()?;
        let tol = self.tolerances()?;
        let omega = self.omega()?;
        let points = to_points("points", &self.points)?;
        Ok(MebInstance::new(omega, &points, kind, self.seed)?.with_tolerances(tol))
    }
}

fn to_points(field: &str, raw: &[[f64; 2]]) -> Result<Vec<Point2>, DocError> {
    raw.iter()
        .enumerate()
        .map(|(i, &[x, y])| {
            if x.is_finite() && y.is_finite() {
                Ok(Point2::new(x, y))
            } else {
                Err(field_error(field, format!("entry {i} is not finite")))
            }
        })
        .collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StatsDocument {
    pub violation_tests: u64,
    pub basis_computations: u64,
    pub bisection_iterations: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResultDocument {
    pub radius: f64,
    pub center: [f64; 2],
    /// Indices into the `points` list of the input document.
    pub basis: Vec<usize>,
    pub ball: Vec<[f64; 2]>,
    pub solver: String,
    pub stats: StatsDocument,
}

impl ResultDocument {
    pub fn from_result(instance: &MebInstance, result: &MebResult) -> Self {
        let mut basis: Vec<usize> = result
            .basis
            .iter()
            .flat_map(|b| b.points.iter().map(|&i| instance.source_index[i]))
            .collect();
        basis.sort_unstable();
        Self {
            radius: round12(result.value.radius),
            center: pair(result.value.center),
            basis,
            ball: result.ball.shape.vertices().into_iter().map(pair).collect(),
            solver: result.solver.name().to_string(),
            stats: StatsDocument {
                violation_tests: result.stats.violation_tests,
                basis_computations: result.stats.basis_computations,
                bisection_iterations: result.stats.bisection_iterations,
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, DocError> {
        serde_json::from_str(text).map_err(|e| DocError::Parse(e.to_string()))
    }

    /// Checks the document on its own: a nonnegative radius, a known solver,
    /// at most three support points and a convex ball.
    pub fn validate(&self) -> Result<(), DocError> {
        if !(self.radius >= 0.0 && self.radius.is_finite()) {
            return Err(field_error("radius", "must be finite and nonnegative"));
        }
        let solver: Solver = self.solver.parse().map_err(|e| field_error("solver", e))?;
        if solver == Solver::Bisection && !self.basis.is_empty() {
            return Err(field_error("basis", "bisection results carry no basis"));
        }
        if self.basis.len() > 3 {
            return Err(field_error("basis", "more than three points"));
        }
        to_points("center", &[self.center])?;
        let ball = to_points("ball", &self.ball)?;
        match ball.len() {
            0 => Err(field_error("ball", "empty")),
            1 | 2 => Ok(()),
            _ => normalize_polygon(&ball)
                .map(|_| ())
                .map_err(|e| field_error("ball", e)),
        }
    }

    /// Validates the document against the instance it claims to solve:
    /// every point lies within `radius` of `center`, and every basis point
    /// lies on the sphere.
    pub fn validate_against(&self, doc: &InstanceDocument) -> Result<(), DocError> {
        self.validate()?;
        let inst = doc.to_instance()?;
        let center = Point2::new(self.center[0], self.center[1]);
        let slack = EPS_DIST;
        for (i, &[x, y]) in doc.points.iter().enumerate() {
            let d = distance(&inst.omega, inst.kind, center, Point2::new(x, y))?;
            if d > self.radius + slack {
                return Err(field_error(
                    "radius",
                    format!("point {i} lies outside the ball"),
                ));
            }
            if self.basis.contains(&i) && d < self.radius - slack {
                return Err(field_error(
                    "basis",
                    format!("point {i} is not on the sphere"),
                ));
            }
        }
        if let Some(&i) = self.basis.iter().find(|&&i| i >= doc.points.len()) {
            return Err(field_error("basis", format!("index {i} out of range")));
        }
        Ok(())
    }
}

/// Rounds to 12 significant digits.
pub fn round12(v: f64) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return v;
    }
    format!("{v:.11e}").parse().expect("formatted float parses")
}

fn pair(p: Point2) -> [f64; 2] {
    [round12(p.x), round12(p.y)]
}

/// Fixed-point text with 12 significant digits, e.g. `0.549306144334`.
/// Zero prints with twelve decimals.
pub fn format_sig12(v: f64) -> String {
    fn decimals(v: f64) -> usize {
        if v == 0.0 {
            12
        } else {
            (11 - v.abs().log10().floor() as i64).max(0) as usize
        }
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let d = decimals(v);
    let s = format!("{v:.d$}");
    // Rounding may carry into a new leading digit (9.99.. -> 10.0..).
    let r: f64 = s.parse().expect("formatted float parses");
    let d2 = decimals(r);
    if d2 == d {
        s
    } else {
        format!("{v:.d2$}")
    }
}
