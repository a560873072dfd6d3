//! The inverse problem: given a cycle word, the exact set of parameters at
//! which it is realized.
//!
//! Each position `i` of a word `(b0, ..., b{n-1})` contributes
//! `0 <= b_{i+2} + x*b_{i+1} + b_i < 1`, a pair of half-lines in `x` when
//! `b_{i+1} != 0`. Their intersection, clipped to the open interval
//! `(-2, 2)`, is the parameter set of the word.

use std::cmp::Ordering;
use std::fmt;

use crate::dynamics::Cycle;
use crate::exact::{Interval, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sense {
    Ge,
    Gt,
    Le,
    Lt,
}

/// `x (sense) bound`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfLineConstraint {
    pub bound: Rational,
    pub sense: Sense,
}

impl HalfLineConstraint {
    pub fn admits(&self, x: &Rational) -> bool {
        match self.sense {
            Sense::Ge => x >= &self.bound,
            Sense::Gt => x > &self.bound,
            Sense::Le => x <= &self.bound,
            Sense::Lt => x < &self.bound,
        }
    }
}

impl fmt::Display for HalfLineConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.sense {
            Sense::Ge => ">=",
            Sense::Gt => ">",
            Sense::Le => "<=",
            Sense::Lt => "<",
        };
        write!(f, "x {op} {}", self.bound)
    }
}

/// The word has a zero entry whose neighbours do not cancel, so no
/// parameter realizes it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Infeasible {
    pub position: usize,
}

/// All `2n` half-lines (fewer where `b_{i+1} = 0`), without deduplication.
pub fn constraints_for_cycle(word: &Cycle) -> Result<Vec<HalfLineConstraint>, Infeasible> {
    let n = word.len();
    let mut out = Vec::with_capacity(2 * n);
    for i in 0..n {
        let (prev, mid, next) = (word.at(i), word.at(i + 1), word.at(i + 2));
        let outer = prev as i128 + next as i128;
        if mid == 0 {
            if outer != 0 {
                return Err(Infeasible { position: i });
            }
            continue;
        }
        let low = big_ratio(-outer, mid);
        let high = big_ratio(1 - outer, mid);
        if mid > 0 {
            out.push(HalfLineConstraint { bound: low, sense: Sense::Ge });
            out.push(HalfLineConstraint { bound: high, sense: Sense::Lt });
        } else {
            out.push(HalfLineConstraint { bound: low, sense: Sense::Le });
            out.push(HalfLineConstraint { bound: high, sense: Sense::Gt });
        }
    }
    Ok(out)
}

fn big_ratio(num: i128, den: i64) -> Rational {
    Rational::from_bigints(num.into(), den.into())
}

fn ambient() -> Interval {
    Interval::open(Rational::from(-2), Rational::from(2))
}

/// Intersects half-lines with `(-2, 2)`.
pub fn interval_from_constraints(constraints: &[HalfLineConstraint]) -> Option<Interval> {
    let mut acc = ambient();
    for c in constraints {
        let restricted = match c.sense {
            Sense::Ge => acc.above(&c.bound, true),
            Sense::Gt => acc.above(&c.bound, false),
            Sense::Le => acc.below(&c.bound, true),
            Sense::Lt => acc.below(&c.bound, false),
        };
        acc = restricted?;
    }
    Some(acc)
}

/// A bound `num/den` (den > 0) with closure, compared exactly in `i128`.
#[derive(Clone, Copy)]
struct Bound {
    num: i128,
    den: i128,
    closed: bool,
}

impl Bound {
    fn cmp_value(&self, other: &Bound) -> Ordering {
        (self.num * other.den).cmp(&(other.num * self.den))
    }

    fn to_rational(self) -> Rational {
        Rational::from_bigints(self.num.into(), self.den.into())
    }
}

/// Entries beyond this magnitude go through the arbitrary-precision route.
const FAST_PATH_LIMIT: i64 = 1 << 40;

/// The parameter interval of `word`, or `None` when no `x` in `(-2, 2)`
/// realizes it.
pub fn interval_for_cycle(word: &Cycle) -> Option<Interval> {
    if word.max_abs() >= FAST_PATH_LIMIT {
        return interval_from_constraints(&constraints_for_cycle(word).ok()?);
    }
    let mut lower = Bound { num: -2, den: 1, closed: false };
    let mut upper = Bound { num: 2, den: 1, closed: false };
    let n = word.len();
    for i in 0..n {
        let (prev, mid, next) = (word.at(i) as i128, word.at(i + 1) as i128, word.at(i + 2) as i128);
        let outer = prev + next;
        if mid == 0 {
            if outer != 0 {
                return None;
            }
            continue;
        }
        // mid > 0: x >= -outer/mid, x < (1-outer)/mid; signs flip for mid < 0.
        let (lo, hi) = if mid > 0 {
            (Bound { num: -outer, den: mid, closed: true }, Bound { num: 1 - outer, den: mid, closed: false })
        } else {
            (Bound { num: outer - 1, den: -mid, closed: false }, Bound { num: outer, den: -mid, closed: true })
        };
        match lo.cmp_value(&lower) {
            Ordering::Greater => lower = lo,
            Ordering::Equal => lower.closed &= lo.closed,
            Ordering::Less => {}
        }
        match hi.cmp_value(&upper) {
            Ordering::Less => upper = hi,
            Ordering::Equal => upper.closed &= hi.closed,
            Ordering::Greater => {}
        }
    }
    match lower.cmp_value(&upper) {
        Ordering::Greater => None,
        Ordering::Equal if !(lower.closed && upper.closed) => None,
        _ => Interval::new(lower.to_rational(), lower.closed, upper.to_rational(), upper.closed),
    }
}
