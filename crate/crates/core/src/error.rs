use thiserror::Error;

use crate::exact::{IntervalSet, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid rational `{0}`")]
    Rational(String),
    #[error("invalid interval `{0}`")]
    Interval(String),
    #[error("invalid cycle word `{0}`")]
    Word(String),
    #[error("invalid side `{0}` (expected exact, plus or minus)")]
    Side(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("exact parameter {0} must lie in (-2,2)")]
    ExactOutOfRange(Rational),
    #[error("right-limit parameter {0}+0 must lie in [-2,2)")]
    PlusOutOfRange(Rational),
    #[error("left-limit parameter {0}-0 must lie in (-2,2]")]
    MinusOutOfRange(Rational),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TailError {
    #[error("triangular cycle needs 0 <= s < d, got s={s}, d={d}")]
    BadLabel { s: i64, d: i64 },
    #[error("k={k} is below the admissible index for s={s}, d={d}")]
    IndexTooSmall { s: i64, d: i64, k: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AtlasError {
    #[error("refinement budget exceeded for ({a0},{a1}); unresolved parameters {residual}")]
    BudgetExceeded { a0: i64, a1: i64, residual: IntervalSet },
    #[error("no cycle within {cap} steps for ({a0},{a1}) at lambda={lambda}")]
    CycleCapExceeded { a0: i64, a1: i64, lambda: Rational, cap: u64 },
    #[error("inconsistent cycle at lambda={lambda} for ({a0},{a1}): {reason}")]
    Inconsistent { a0: i64, a1: i64, lambda: Rational, reason: String },
}

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("malformed atlas JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("inconsistent atlas record: {0}")]
    Inconsistent(String),
}
