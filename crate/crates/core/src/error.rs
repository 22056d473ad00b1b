use thiserror::Error;

/// Failures of numeric evaluation (jet arithmetic, plain evaluation).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error("domain error: {0}")]
    Domain(&'static str),
    #[error("division by zero")]
    DivisionByZero,
    #[error("overflow: result is not finite")]
    Overflow,
    #[error("expression mixes x and y where a single variable is required")]
    MixedVariable,
}

/// Top-level error type of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] crate::expr::ParseError),
    #[error("at ({x}, {y}): {source}")]
    Eval {
        x: f64,
        y: f64,
        #[source]
        source: EvalError,
    },
    #[error(transparent)]
    Arithmetic(#[from] EvalError),
    #[error("degenerate parameters: {0}")]
    Degenerate(&'static str),
    #[error("invalid family specification: {0}")]
    InvalidSpec(String),
    #[error("family has no constant curvature prediction; use the contradiction scan")]
    NoConstantPrediction,
    #[error("sampling domain is empty after singularity exclusion")]
    EmptyDomain,
    #[error("invalid domain: {0}")]
    InvalidDomain(String),
    #[error("singular point at x = {x}")]
    SingularPoint { x: f64 },
    #[error("degenerate ODE at t = {t}: denominator {denominator:e} below threshold")]
    DegenerateOde { t: f64, denominator: f64 },
    #[error("step too large at t = {t}: local error estimate {estimate:e} exceeds {limit:e}")]
    StepTooLarge { t: f64, estimate: f64, limit: f64 },
    #[error("invalid initial value problem: {0}")]
    InvalidIvp(String),
    #[error("invalid finite-difference configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
