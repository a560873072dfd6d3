use rayon::prelude::*;

use super::{compute_atlas, verify_atlas, Limits, PartitionAtlas, VerificationReport, DEFAULT_PROBES};
use crate::error::AtlasError;
use crate::exact::{Interval, Rational};

/// Per-point digest of a verified atlas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtlasSummary {
    pub a0: i64,
    pub a1: i64,
    pub s: i64,
    pub d: i64,
    pub k_min: i64,
    pub intervals: usize,
    pub singletons: usize,
    pub max_len: usize,
    pub max_len_interval: Interval,
    pub total_len: u64,
    /// `None` when verification passed.
    pub failure: Option<String>,
}

impl AtlasSummary {
    pub fn of(atlas: &PartitionAtlas, report: &VerificationReport) -> AtlasSummary {
        AtlasSummary {
            a0: atlas.a0,
            a1: atlas.a1,
            s: atlas.tail.label.s,
            d: atlas.tail.label.d,
            k_min: atlas.tail.label.k_min,
            intervals: atlas.stats.intervals,
            singletons: atlas.stats.singletons,
            max_len: atlas.stats.max_len,
            max_len_interval: atlas.stats.max_len_interval.clone(),
            total_len: atlas.stats.total_len,
            failure: report.failure.as_ref().map(|f| f.to_string()),
        }
    }

    /// `max(|a0|, |a1|)`.
    pub fn ring(&self) -> i64 {
        self.a0.abs().max(self.a1.abs())
    }

    pub fn avg_len(&self) -> Rational {
        Rational::new(self.total_len as i64, self.intervals as i64)
    }

    pub fn verified(&self) -> bool {
        self.failure.is_none()
    }
}

/// Largest partition among the points of one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CardinalityRow {
    pub m: i64,
    pub argmax: (i64, i64),
    pub intervals: usize,
    pub singletons: usize,
}

/// Longest cycle among the points of one ring, plus two averages.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthRow {
    pub m: i64,
    pub argmax: (i64, i64),
    pub interval: Interval,
    pub max_len: usize,
    /// Total cycle length over all body entries of the ring's points,
    /// divided by the number of those entries.
    pub avg_over_entries: Rational,
    /// Mean over the ring's points of each atlas's own average.
    pub avg_over_points: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub m: i64,
    /// Sorted by ring, then `a0`, then `a1`.
    pub summaries: Vec<AtlasSummary>,
    pub cardinality: Vec<CardinalityRow>,
    pub lengths: Vec<LengthRow>,
}

/// Preference among tied maxima: larger `a0`, then larger `a1`.
fn prefer(a: &AtlasSummary) -> (i64, i64) {
    (a.a0, a.a1)
}

impl SweepReport {
    pub fn from_summaries(m: i64, mut summaries: Vec<AtlasSummary>) -> SweepReport {
        summaries.sort_by_key(|s| (s.ring(), s.a0, s.a1));
        let mut cardinality = Vec::new();
        let mut lengths = Vec::new();
        for ring in 1..=m {
            let pts: Vec<&AtlasSummary> = summaries.iter().filter(|s| s.ring() == ring).collect();
            if pts.is_empty() {
                continue;
            }
            let best = pts.iter().max_by_key(|s| (s.intervals, prefer(s))).unwrap();
            cardinality.push(CardinalityRow {
                m: ring,
                argmax: (best.a0, best.a1),
                intervals: best.intervals,
                singletons: best.singletons,
            });
            let longest = pts.iter().max_by_key(|s| (s.max_len, prefer(s))).unwrap();
            let entries: u64 = pts.iter().map(|s| s.intervals as u64).sum();
            let total: u64 = pts.iter().map(|s| s.total_len).sum();
            let mean_of_means =
                pts.iter().fold(Rational::zero(), |acc, s| acc + s.avg_len()) / Rational::from(pts.len() as i64);
            lengths.push(LengthRow {
                m: ring,
                argmax: (longest.a0, longest.a1),
                interval: longest.max_len_interval.clone(),
                max_len: longest.max_len,
                avg_over_entries: Rational::new(total as i64, entries as i64),
                avg_over_points: mean_of_means,
            });
        }
        SweepReport { m, summaries, cardinality, lengths }
    }

    /// True when every atlas passed verification.
    pub fn all_verified(&self) -> bool {
        self.summaries.iter().all(AtlasSummary::verified)
    }

    pub fn first_failure(&self) -> Option<&AtlasSummary> {
        self.summaries.iter().find(|s| !s.verified())
    }
}

/// All points with `max(|a0|, |a1|) <= m`, ordered by ring.
pub fn grid(m: i64) -> Vec<(i64, i64)> {
    let mut pts: Vec<(i64, i64)> = (-m..=m).flat_map(|a0| (-m..=m).map(move |a1| (a0, a1))).collect();
    pts.sort_by_key(|&(a0, a1)| (a0.abs().max(a1.abs()), a0, a1));
    pts
}

/// Computes and verifies the atlas of every grid point in parallel,
/// handing each to `visit` as soon as it is ready. Results are gathered in
/// grid order, so the report does not depend on scheduling.
pub fn sweep_with<F>(m: i64, limits: &Limits, probes: usize, visit: F) -> Result<SweepReport, AtlasError>
where
    F: Fn(&PartitionAtlas, &VerificationReport) + Sync,
{
    assert!(m >= 1, "sweep radius must be positive");
    let summaries = grid(m)
        .into_par_iter()
        .map(|(a0, a1)| {
            let atlas = compute_atlas(a0, a1, limits)?;
            let report = verify_atlas(&atlas, probes);
            visit(&atlas, &report);
            Ok(AtlasSummary::of(&atlas, &report))
        })
        .collect::<Result<Vec<_>, AtlasError>>()?;
    Ok(SweepReport::from_summaries(m, summaries))
}

pub fn sweep(m: i64, limits: &Limits) -> Result<SweepReport, AtlasError> {
    sweep_with(m, limits, DEFAULT_PROBES, |_, _| {})
}
