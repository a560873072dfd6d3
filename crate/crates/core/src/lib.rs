//! Exact parameter-space partitions for the discretized rotation
//!
//! ```text
//! 0 <= a[n+2] + l*a[n+1] + a[n] < 1,   l in (-2, 2)
//! ```
//!
//! For a fixed integer initial pair `(a0, a1)` the crate computes, with
//! rational arithmetic only, the partition of `(-2, 2)` into intervals on
//! which the orbit follows one fixed cycle, and checks the result.
//!
//! - [`exact`]: rationals, boundary-typed intervals, interval sets.
//! - [`dynamics`]: the step map, its one-sided limits, cycle detection.
//! - [`constraints`]: the parameter interval realizing a given cycle.
//! - [`tail`]: labels and the triangular cycles accumulating at `-2`.
//! - [`partition`]: refinement, verification and grid sweeps.
//! - [`report`]: JSON/CSV/text/SVG emitters.

pub mod constraints;
pub mod dynamics;
pub mod error;
pub mod exact;
pub mod partition;
pub mod report;
pub mod tail;

pub use constraints::{constraints_for_cycle, interval_for_cycle};
pub use dynamics::{detect_cycle, step, step_inverse, Cycle, LatticePoint, OrbitOutcome, OrbitResult, ParamSpec, Side};
pub use error::{AtlasError, ParamError, ParseError, ReportError, TailError};
pub use exact::{Interval, IntervalSet, Rational};
pub use partition::{compute_atlas, sweep, verify_atlas, Limits, PartitionAtlas, SweepReport};
pub use report::{atlas_from_json, atlas_to_json, emit_diagram, render_endpoint_listing, render_tables};
pub use tail::{label_of, tail_of, triangular, triangular_cycle, z_interval, Label, TailDescription};
