use thiserror::Error;

/// Errors raised by the geometry kernel, the metric routines and the solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("polygon is not convex")]
    NotConvex,
    #[error("degenerate input: {0}")]
    Degenerate(&'static str),
    #[error("point not interior")]
    NotInterior,
    #[error("coincident points")]
    CoincidentPoints,
    #[error("region is empty")]
    EmptyRegion,
    #[error("no interior point at the requested distance")]
    Unreachable,
    #[error("instance has no points")]
    EmptyInstance,
    #[error("no candidate basis encloses all points")]
    NoFeasibleBasis,
    #[error("non-finite coordinate")]
    NonFinite,
    #[error("operation not available for the {0} metric")]
    UnsupportedMetric(&'static str),
    #[error("lp-type solver exceeded its recursion guard")]
    SolverDiverged,
}

pub type Result<T> = std::result::Result<T, Error>;
