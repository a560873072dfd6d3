//! Exact rational arithmetic and boundary-typed interval algebra.
//!
//! Intervals render as `[lo,hi]`, `[lo,hi)`, `(lo,hi]`, `(lo,hi)` and
//! singletons as `[r]`; rationals render as `p/q`, or `n` for integers.
//! Every emitter and parser in the crate uses this text form.

mod interval;
mod interval_set;
mod rational;

pub use interval::Interval;
pub use interval_set::IntervalSet;
pub use rational::Rational;
