//! Rational intervals with independently open or closed endpoints.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;
use crate::error::ParseError;

/// A non-empty interval of rationals. `lo == hi` is allowed only as a
/// closed singleton; empty sets are never represented by an `Interval`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Rational,
    lo_closed: bool,
    hi: Rational,
    hi_closed: bool,
}

/// Compares two lower bounds by tightness: a larger value is tighter, and at
/// equal values an open bound is tighter than a closed one.
fn tighter_lower(a: (&Rational, bool), b: (&Rational, bool)) -> bool {
    match a.0.cmp(b.0) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => !a.1 && b.1,
    }
}

fn tighter_upper(a: (&Rational, bool), b: (&Rational, bool)) -> bool {
    match a.0.cmp(b.0) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => !a.1 && b.1,
    }
}

impl Interval {
    /// Returns `None` when the described set is empty.
    pub fn new(lo: Rational, lo_closed: bool, hi: Rational, hi_closed: bool) -> Option<Interval> {
        match lo.cmp(&hi) {
            Ordering::Less => Some(Interval { lo, lo_closed, hi, hi_closed }),
            Ordering::Equal if lo_closed && hi_closed => Some(Interval { lo, lo_closed, hi, hi_closed }),
            _ => None,
        }
    }

    pub fn singleton(r: Rational) -> Interval {
        Interval { lo: r.clone(), lo_closed: true, hi: r, hi_closed: true }
    }

    /// `]lo, hi[`. Panics if empty.
    pub fn open(lo: Rational, hi: Rational) -> Interval {
        Interval::new(lo, false, hi, false).expect("empty open interval")
    }

    /// `[lo, hi]`. Panics if `lo > hi`.
    pub fn closed(lo: Rational, hi: Rational) -> Interval {
        Interval::new(lo, true, hi, true).expect("empty closed interval")
    }

    /// `[lo, hi[`. Panics if empty.
    pub fn closed_open(lo: Rational, hi: Rational) -> Interval {
        Interval::new(lo, true, hi, false).expect("empty half-open interval")
    }

    /// `]lo, hi]`. Panics if empty.
    pub fn open_closed(lo: Rational, hi: Rational) -> Interval {
        Interval::new(lo, false, hi, true).expect("empty half-open interval")
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn lo_closed(&self) -> bool {
        self.lo_closed
    }

    pub fn hi_closed(&self) -> bool {
        self.hi_closed
    }

    pub fn is_singleton(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let above = match x.cmp(&self.lo) {
            Ordering::Greater => true,
            Ordering::Equal => self.lo_closed,
            Ordering::Less => false,
        };
        let below = match x.cmp(&self.hi) {
            Ordering::Less => true,
            Ordering::Equal => self.hi_closed,
            Ordering::Greater => false,
        };
        above && below
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let (lo, lo_closed) = if tighter_lower((&other.lo, other.lo_closed), (&self.lo, self.lo_closed)) {
            (&other.lo, other.lo_closed)
        } else {
            (&self.lo, self.lo_closed)
        };
        let (hi, hi_closed) = if tighter_upper((&other.hi, other.hi_closed), (&self.hi, self.hi_closed)) {
            (&other.hi, other.hi_closed)
        } else {
            (&self.hi, self.hi_closed)
        };
        Interval::new(lo.clone(), lo_closed, hi.clone(), hi_closed)
    }

    /// The part of `self` strictly below `bound` (or at it, when `inclusive`).
    pub fn below(&self, bound: &Rational, inclusive: bool) -> Option<Interval> {
        if tighter_upper((bound, inclusive), (&self.hi, self.hi_closed)) {
            Interval::new(self.lo.clone(), self.lo_closed, bound.clone(), inclusive)
        } else {
            Some(self.clone())
        }
    }

    /// The part of `self` strictly above `bound` (or at it, when `inclusive`).
    pub fn above(&self, bound: &Rational, inclusive: bool) -> Option<Interval> {
        if tighter_lower((bound, inclusive), (&self.lo, self.lo_closed)) {
            Interval::new(bound.clone(), inclusive, self.hi.clone(), self.hi_closed)
        } else {
            Some(self.clone())
        }
    }

    /// `self \ other`, as at most two pieces in ascending order.
    pub fn minus(&self, other: &Interval) -> Vec<Interval> {
        if self.intersect(other).is_none() {
            return vec![self.clone()];
        }
        self.below(&other.lo, !other.lo_closed).into_iter().chain(self.above(&other.hi, !other.hi_closed)).collect()
    }

    /// `(lo + hi) / 2`, which for a singleton is the point itself.
    pub fn midpoint(&self) -> Rational {
        if self.is_singleton() {
            self.lo.clone()
        } else {
            Rational::midpoint(&self.lo, &self.hi)
        }
    }

    /// Whether every point of `self` lies strictly before every point of `other`.
    pub fn precedes(&self, other: &Interval) -> bool {
        match self.hi.cmp(&other.lo) {
            Ordering::Less => true,
            Ordering::Equal => !(self.hi_closed && other.lo_closed),
            Ordering::Greater => false,
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_singleton() {
            return write!(f, "[{}]", self.lo);
        }
        let open = if self.lo_closed { '[' } else { '(' };
        let close = if self.hi_closed { ']' } else { ')' };
        write!(f, "{open}{},{}{close}", self.lo, self.hi)
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Interval {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || ParseError::Interval(s.to_string());
        if s.len() < 3 {
            return Err(bad());
        }
        let lo_closed = match s.as_bytes()[0] {
            b'[' => true,
            b'(' => false,
            _ => return Err(bad()),
        };
        let hi_closed = match s.as_bytes()[s.len() - 1] {
            b']' => true,
            b')' => false,
            _ => return Err(bad()),
        };
        let body = &s[1..s.len() - 1];
        match body.split_once(',') {
            Some((lo, hi)) => {
                let lo: Rational = lo.parse().map_err(|_| bad())?;
                let hi: Rational = hi.parse().map_err(|_| bad())?;
                Interval::new(lo, lo_closed, hi, hi_closed).ok_or_else(bad)
            }
            None if lo_closed && hi_closed => Ok(Interval::singleton(body.parse().map_err(|_| bad())?)),
            None => Err(bad()),
        }
    }
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Interval {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
