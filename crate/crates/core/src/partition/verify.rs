use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use super::{AtlasEntry, PartitionAtlas};
use crate::constraints::interval_for_cycle;
use crate::dynamics::{detect_cycle, Cycle, ParamSpec, DEFAULT_CYCLE_CAP};
use crate::exact::{Interval, Rational};
use crate::tail::TailKind;

pub const DEFAULT_PROBES: usize = 3;

/// Number of tail pieces `Z_K .. Z_{K+TAIL_PIECES-1}` checked per atlas.
const TAIL_PIECES: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerificationFailure {
    CoverageGap {
        at: Rational,
    },
    Overlap {
        at: Rational,
    },
    /// The body does not start or end where its range does.
    RangeBoundary {
        expected: Interval,
        found: Rational,
    },
    TailBoundary,
    Redetection {
        lambda: Rational,
        expected: Cycle,
        found: Option<Cycle>,
    },
    IntervalMismatch {
        stored: Interval,
        computed: Option<Interval>,
    },
    MissingInitialPair {
        interval: Interval,
    },
    DuplicateCycle {
        first: Interval,
        second: Interval,
    },
    Tail {
        k: i64,
        reason: String,
    },
}

impl fmt::Display for VerificationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use VerificationFailure::*;
        match self {
            CoverageGap { at } => write!(f, "coverage gap at {at}"),
            Overlap { at } => write!(f, "overlapping intervals at {at}"),
            RangeBoundary { expected, found } => write!(f, "body should span {expected}, boundary at {found}"),
            TailBoundary => write!(f, "tail and body do not meet exactly"),
            Redetection { lambda, expected, found } => match found {
                Some(c) => write!(f, "at {lambda} expected {expected}, detected {c}"),
                None => write!(f, "at {lambda} expected {expected}, no cycle within cap"),
            },
            IntervalMismatch { stored, computed } => match computed {
                Some(c) => write!(f, "stored {stored} but cycle is realized on {c}"),
                None => write!(f, "stored {stored} but cycle is never realized"),
            },
            MissingInitialPair { interval } => write!(f, "cycle on {interval} does not start at the initial pair"),
            DuplicateCycle { first, second } => write!(f, "same cycle on {first} and {second}"),
            Tail { k, reason } => write!(f, "tail piece k={k}: {reason}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    /// Number of individual checks that ran before stopping.
    pub checks: usize,
    pub failure: Option<VerificationFailure>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

struct Checker<'a> {
    atlas: &'a PartitionAtlas,
    checks: usize,
}

type Check = Result<(), Box<VerificationFailure>>;

impl Checker<'_> {
    fn ensure(&mut self, ok: bool, failure: impl FnOnce() -> VerificationFailure) -> Check {
        self.checks += 1;
        if ok {
            Ok(())
        } else {
            Err(Box::new(failure()))
        }
    }

    /// `entries` must tile `range` exactly, in order.
    fn tiles(&mut self, entries: &[AtlasEntry], range: &Interval) -> Check {
        let boundary =
            |found: &Rational| VerificationFailure::RangeBoundary { expected: range.clone(), found: found.clone() };
        let Some(first) = entries.first() else {
            return Err(Box::new(VerificationFailure::CoverageGap { at: range.lo().clone() }));
        };
        let first = &first.interval;
        self.ensure(first.lo() == range.lo() && first.lo_closed() == range.lo_closed(), || boundary(first.lo()))?;
        for w in entries.windows(2) {
            let (p, q) = (&w[0].interval, &w[1].interval);
            let at = p.hi().clone();
            match p.hi().cmp(q.lo()) {
                Ordering::Less => return Err(Box::new(VerificationFailure::CoverageGap { at })),
                Ordering::Greater => return Err(Box::new(VerificationFailure::Overlap { at })),
                Ordering::Equal => {
                    self.ensure(p.hi_closed() || q.lo_closed(), || VerificationFailure::CoverageGap {
                        at: at.clone(),
                    })?;
                    self.ensure(!(p.hi_closed() && q.lo_closed()), || VerificationFailure::Overlap { at })?;
                }
            }
        }
        let last = &entries[entries.len() - 1].interval;
        self.ensure(last.hi() == range.hi() && last.hi_closed() == range.hi_closed(), || boundary(last.hi()))
    }

    fn coverage(&mut self) -> Check {
        let atlas = self.atlas;
        let bridge_range = atlas.tail.bridge_range();
        match &bridge_range {
            Some(r) => self.tiles(&atlas.bridge, r)?,
            None => self.ensure(atlas.bridge.is_empty(), || VerificationFailure::Overlap {
                at: atlas.bridge[0].interval.lo().clone(),
            })?,
        }
        self.tiles(&atlas.body, &atlas.body_range)?;
        if atlas.tail.kind != TailKind::Full {
            let t = &atlas.tail.interval;
            let next = bridge_range.as_ref().unwrap_or(&atlas.body_range);
            self.ensure(t.hi() == next.lo() && !t.hi_closed() && next.lo_closed(), || {
                VerificationFailure::TailBoundary
            })?;
        }
        Ok(())
    }

    fn redetect(&mut self, lambda: &Rational, expected: &Cycle, phase_exact: bool) -> Check {
        let spec = ParamSpec::exact(lambda.clone()).expect("probe inside (-2, 2)");
        let found = detect_cycle(&spec, self.atlas.start(), DEFAULT_CYCLE_CAP).into_cycle();
        let ok = match &found {
            Some(c) if phase_exact => c.word() == expected.word(),
            Some(c) => c == expected,
            None => false,
        };
        self.ensure(ok, || VerificationFailure::Redetection {
            lambda: lambda.clone(),
            expected: expected.clone(),
            found,
        })
    }

    fn entries(&mut self, probes: usize) -> Check {
        let atlas = self.atlas;
        let bridge_range = atlas.tail.bridge_range();
        let sections = [(&atlas.bridge, bridge_range.as_ref()), (&atlas.body, Some(&atlas.body_range))];
        for (entries, range) in sections {
            let Some(range) = range else { continue };
            for e in entries.iter() {
                for lambda in probe_points(&e.interval, probes) {
                    self.redetect(&lambda, &e.cycle, true)?;
                }
            }
            for e in entries.iter() {
                let w = e.cycle.word();
                self.ensure(w[0] == atlas.a0 && e.cycle.at(1) == atlas.a1, || {
                    VerificationFailure::MissingInitialPair { interval: e.interval.clone() }
                })?;
                let computed = interval_for_cycle(&e.cycle).and_then(|i| i.intersect(range));
                self.ensure(computed.as_ref() == Some(&e.interval), || VerificationFailure::IntervalMismatch {
                    stored: e.interval.clone(),
                    computed,
                })?;
            }
        }
        // A cycle may only repeat across the bridge/body seam, as the two
        // halves of one parameter interval.
        let seam = atlas.bridge.last().map(|e| (&e.interval, &atlas.body[0].interval));
        let mut seen: HashMap<&Cycle, &Interval> = HashMap::new();
        for e in atlas.bridge.iter().chain(&atlas.body) {
            let prior = seen.insert(&e.cycle, &e.interval);
            let allowed = prior.is_some_and(|p| seam == Some((p, &e.interval)));
            self.ensure(prior.is_none() || allowed, || VerificationFailure::DuplicateCycle {
                first: prior.unwrap().clone(),
                second: e.interval.clone(),
            })?;
        }
        Ok(())
    }

    fn tail(&mut self) -> Check {
        let atlas = self.atlas;
        let tail = &atlas.tail;
        match tail.kind {
            TailKind::Full => Ok(()),
            TailKind::Constant => {
                let cycle = tail.constant_cycle().unwrap();
                let s = tail.label.s;
                self.ensure(interval_for_cycle(&cycle).as_ref() == Some(&tail.interval), || {
                    VerificationFailure::Tail {
                        k: 0,
                        reason: format!("({s}) is not realized exactly on {}", tail.interval),
                    }
                })?;
                self.redetect(&tail.interval.midpoint(), &cycle, true)
            }
            TailKind::Triangular => {
                for (offset, (z, cycle)) in tail.pieces().take(TAIL_PIECES).enumerate() {
                    let k = tail.label.k_min + offset as i64;
                    self.ensure(cycle.contains_pair(atlas.a0, atlas.a1), || VerificationFailure::Tail {
                        k,
                        reason: "initial pair does not occur in the triangular cycle".into(),
                    })?;
                    let computed = interval_for_cycle(&cycle);
                    self.ensure(computed.as_ref() == Some(&z), || VerificationFailure::Tail {
                        k,
                        reason: format!("cycle realized on {computed:?}, expected {z}"),
                    })?;
                    self.ensure(tail.interval.intersect(&z).as_ref() == Some(&z), || VerificationFailure::Tail {
                        k,
                        reason: format!("{z} leaves the tail interval"),
                    })?;
                    self.redetect(z.lo(), &cycle, false)?;
                    self.redetect(&z.midpoint(), &cycle, false)?;
                }
                Ok(())
            }
        }
    }
}

/// Closed endpoints plus `n` evenly spaced interior points; a singleton
/// yields its point once.
pub fn probe_points(interval: &Interval, n: usize) -> Vec<Rational> {
    if interval.is_singleton() {
        return vec![interval.lo().clone()];
    }
    let mut out = Vec::with_capacity(n + 2);
    if interval.lo_closed() {
        out.push(interval.lo().clone());
    }
    let width = interval.hi() - interval.lo();
    for j in 1..=n {
        out.push(interval.lo() + &(&width * &Rational::new(j as i64, n as i64 + 1)));
    }
    if interval.hi_closed() {
        out.push(interval.hi().clone());
    }
    out
}

/// Checks coverage and disjointness of the bridge and body, re-detects every stored
/// cycle at its closed endpoints and at `probes` interior parameters,
/// recomputes each cycle's parameter set, checks cycles are pairwise
/// distinct, and checks the first few tail pieces. Stops at the first
/// failure.
pub fn verify_atlas(atlas: &PartitionAtlas, probes: usize) -> VerificationReport {
    let mut checker = Checker { atlas, checks: 0 };
    let result = checker.coverage().and_then(|_| checker.entries(probes)).and_then(|_| checker.tail());
    VerificationReport { checks: checker.checks, failure: result.err().map(|f| *f) }
}
