use std::fmt;

use super::{Interval, Rational};

/// A finite union of pairwise-disjoint intervals, sorted by lower endpoint.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct IntervalSet {
    parts: Vec<Interval>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet { parts: Vec::new() }
    }

    pub fn from_interval(i: Interval) -> Self {
        IntervalSet { parts: vec![i] }
    }

    /// Builds a set from parts that already satisfy the ordering invariant.
    /// Returns `None` if they do not.
    pub fn from_sorted_parts(parts: Vec<Interval>) -> Option<Self> {
        let set = IntervalSet { parts };
        set.is_valid().then_some(set)
    }

    pub fn parts(&self) -> &[Interval] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_valid(&self) -> bool {
        self.parts.windows(2).all(|w| w[0].precedes(&w[1]))
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let idx = self.parts.partition_point(|p| p.hi() < x);
        self.parts[idx..].iter().take_while(|p| p.lo() <= x).any(|p| p.contains(x))
    }

    /// `self \ y`. Only the parts overlapping `y` are touched.
    pub fn subtract(&self, y: &Interval) -> IntervalSet {
        let mut out = self.clone();
        out.subtract_in_place(y);
        out
    }

    pub fn subtract_in_place(&mut self, y: &Interval) {
        let start = self.parts.partition_point(|p| p.hi() < y.lo());
        let mut end = start;
        while end < self.parts.len() && self.parts[end].lo() <= y.hi() {
            end += 1;
        }
        if start == end {
            return;
        }
        let replacement: Vec<Interval> = self.parts[start..end].iter().flat_map(|p| p.minus(y)).collect();
        self.parts.splice(start..end, replacement);
    }

    pub fn intersect_interval(&self, y: &Interval) -> IntervalSet {
        IntervalSet { parts: self.parts.iter().filter_map(|p| p.intersect(y)).collect() }
    }

    /// One representative per part: the midpoint of a proper interval, the
    /// point itself for a singleton.
    pub fn sample_points(&self) -> Vec<Rational> {
        self.parts.iter().map(Interval::midpoint).collect()
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
