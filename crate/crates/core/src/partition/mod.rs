//! Complete parameter partitions for a fixed initial point.
//!
//! The tail near `-2` is known in closed form (see [`crate::tail`]); the
//! remaining body range `[-2 + 1/(s+Kd), 2)` is resolved by refinement:
//! sample a parameter in every unresolved piece, detect the cycle there,
//! compute that cycle's exact parameter interval, remove it, and repeat on
//! the midpoints of what is left until nothing is left.
//!
//! For a few points the closed-form tail stops short of the body (see
//! [`TailDescription::bridge_range`]); that stretch is resolved the same way
//! and kept apart from the body so body statistics stay comparable across
//! points.

mod sweep;
mod verify;

pub use sweep::{sweep, sweep_with, AtlasSummary, CardinalityRow, LengthRow, SweepReport};
pub use verify::{verify_atlas, VerificationFailure, VerificationReport, DEFAULT_PROBES};

use crate::constraints::interval_for_cycle;
use crate::dynamics::{detect_cycle, Cycle, LatticePoint, ParamSpec, DEFAULT_CYCLE_CAP};
use crate::error::AtlasError;
use crate::exact::{Interval, IntervalSet, Rational};
use crate::tail::{tail_of, TailDescription, TailKind};

/// Termination guards for one atlas computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Step cap for a single orbit.
    pub cycle_cap: u64,
    /// Refinement rounds.
    pub max_rounds: usize,
    /// Orbit steps summed over the whole atlas.
    pub max_total_steps: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { cycle_cap: DEFAULT_CYCLE_CAP, max_rounds: 10_000, max_total_steps: 1_000_000_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtlasEntry {
    pub interval: Interval,
    /// Starts at the initial pair.
    pub cycle: Cycle,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtlasStats {
    pub intervals: usize,
    pub singletons: usize,
    pub max_len: usize,
    /// The first (leftmost) interval attaining `max_len`.
    pub max_len_interval: Interval,
    pub total_len: u64,
}

impl AtlasStats {
    fn of(body: &[AtlasEntry]) -> AtlasStats {
        let mut best = &body[0];
        for e in body {
            if e.cycle.len() > best.cycle.len() {
                best = e;
            }
        }
        AtlasStats {
            intervals: body.len(),
            singletons: body.iter().filter(|e| e.interval.is_singleton()).count(),
            max_len: best.cycle.len(),
            max_len_interval: best.interval.clone(),
            total_len: body.iter().map(|e| e.cycle.len() as u64).sum(),
        }
    }

    /// Unweighted mean cycle length over the body entries.
    pub fn avg_len(&self) -> Rational {
        Rational::new(self.total_len as i64, self.intervals as i64)
    }
}

/// The tail plus a finite, ordered, disjoint list of body intervals, each
/// carrying the unique cycle realized on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionAtlas {
    pub a0: i64,
    pub a1: i64,
    pub tail: TailDescription,
    /// Entries tiling `tail.bridge_range()`; usually empty.
    pub bridge: Vec<AtlasEntry>,
    pub body_range: Interval,
    pub body: Vec<AtlasEntry>,
    /// Over the body only.
    pub stats: AtlasStats,
}

fn sort_entries(entries: &mut [AtlasEntry]) {
    entries
        .sort_by(|x, y| x.interval.lo().cmp(y.interval.lo()).then(y.interval.lo_closed().cmp(&x.interval.lo_closed())));
}

impl PartitionAtlas {
    /// Assembles an atlas from its entries, sorting them and recomputing
    /// the statistics. Panics on an empty body.
    pub fn from_entries(a0: i64, a1: i64, mut bridge: Vec<AtlasEntry>, mut body: Vec<AtlasEntry>) -> PartitionAtlas {
        assert!(!body.is_empty(), "an atlas body has at least one entry");
        sort_entries(&mut bridge);
        sort_entries(&mut body);
        let tail = tail_of(a0, a1);
        let stats = AtlasStats::of(&body);
        PartitionAtlas { a0, a1, body_range: body_range(&tail), tail, bridge, body, stats }
    }

    pub fn start(&self) -> LatticePoint {
        LatticePoint::new(self.a0, self.a1)
    }

    /// The entry whose interval contains `lambda`, if any.
    pub fn entry_at(&self, lambda: &Rational) -> Option<&AtlasEntry> {
        let idx = self.body.partition_point(|e| e.interval.hi() < lambda);
        self.body[idx..].iter().take_while(|e| e.interval.lo() <= lambda).find(|e| e.interval.contains(lambda))
    }
}

/// `[-2 + 1/(s+Kd), 2)`, or `(-2, 2)` for the origin.
pub fn body_range(tail: &TailDescription) -> Interval {
    match tail.body_start() {
        Some(lo) => Interval::closed_open(lo, Rational::from(2)),
        None => Interval::open(Rational::from(-2), Rational::from(2)),
    }
}

pub fn compute_atlas(a0: i64, a1: i64, limits: &Limits) -> Result<PartitionAtlas, AtlasError> {
    let tail = tail_of(a0, a1);
    let range = body_range(&tail);
    if tail.kind == TailKind::Full {
        let entry = AtlasEntry { interval: range, cycle: Cycle::new(vec![0]) };
        return Ok(PartitionAtlas::from_entries(a0, a1, Vec::new(), vec![entry]));
    }
    let mut resolver = Resolver { start: LatticePoint::new(a0, a1), limits, total_steps: 0, rounds: 0 };
    let bridge = match tail.bridge_range() {
        Some(r) => resolver.resolve(&r)?,
        None => Vec::new(),
    };
    let body = resolver.resolve(&range)?;
    Ok(PartitionAtlas::from_entries(a0, a1, bridge, body))
}

struct Resolver<'a> {
    start: LatticePoint,
    limits: &'a Limits,
    total_steps: u64,
    rounds: usize,
}

impl Resolver<'_> {
    /// Refines `range` until every parameter in it is assigned a cycle.
    fn resolve(&mut self, range: &Interval) -> Result<Vec<AtlasEntry>, AtlasError> {
        let (a0, a1) = (self.start.x, self.start.y);
        let limits = self.limits;
        let mut residual = IntervalSet::from_interval(range.clone());
        let mut found = Vec::new();
        while !residual.is_empty() {
            if self.rounds == limits.max_rounds {
                return Err(AtlasError::BudgetExceeded { a0, a1, residual });
            }
            self.rounds += 1;
            for lambda in residual.sample_points() {
                // Already resolved by an interval found earlier in this round.
                if !residual.contains(&lambda) {
                    continue;
                }
                let spec = ParamSpec::exact(lambda.clone()).expect("resolved ranges lie inside (-2, 2)");
                let orbit = detect_cycle(&spec, self.start, limits.cycle_cap);
                self.total_steps += orbit.steps_used;
                if self.total_steps > limits.max_total_steps {
                    return Err(AtlasError::BudgetExceeded { a0, a1, residual });
                }
                let cycle = orbit.into_cycle().ok_or_else(|| AtlasError::CycleCapExceeded {
                    a0,
                    a1,
                    lambda: lambda.clone(),
                    cap: limits.cycle_cap,
                })?;
                let inconsistent = |reason: &str| AtlasError::Inconsistent {
                    a0,
                    a1,
                    lambda: lambda.clone(),
                    reason: reason.to_string(),
                };
                let interval = interval_for_cycle(&cycle)
                    .and_then(|i| i.intersect(range))
                    .ok_or_else(|| inconsistent("detected cycle has an empty parameter set"))?;
                if !interval.contains(&lambda) {
                    return Err(inconsistent("parameter set of the detected cycle misses the sample"));
                }
                residual.subtract_in_place(&interval);
                found.push(AtlasEntry { interval, cycle });
            }
        }
        Ok(found)
    }
}
