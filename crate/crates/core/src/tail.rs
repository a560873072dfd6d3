//! Behaviour near `l = -2`.
//!
//! Every initial point gets a label `(s, d)`. When `d > 0` the point lies on
//! the triangular cycles `C(s,d,k) = A B B' A' C C'` (primes denote reversal)
//! for all `k >= K`, and `C(s,d,k)` is realized exactly on
//! `Z_k = [-2 + 1/(s+(k+1)d), -2 + 1/(s+kd))`. These intervals tile
//! `(-2, -2 + 1/(s+Kd))`. When `d = 0` a single constant cycle covers the tail.
//!
//! The pair `(a0, a1)` itself only lies on `C(s,d,k)` once the ramp `A` (with
//! its overlap into `B`) reaches it. For points with `0 <= a0 < a1` or
//! `0 <= a1 < a0` this can happen later than `K`, e.g. `(2, 3)` has label
//! `(0, 1)` and `K = 1` but first appears on `C(0,1,2)`. [`TailDescription`]
//! therefore starts the triangular pieces at the first index where the pair
//! occurs; the gap up to `-2 + 1/(s+Kd)` is resolved numerically by the
//! partitioner.

use crate::dynamics::Cycle;
use crate::error::TailError;
use crate::exact::{Interval, Rational};

pub fn triangular(n: i64) -> i64 {
    n * (n + 1) / 2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Label {
    pub s: i64,
    pub d: i64,
    /// `ceil((T_d - s) / d)`; zero when `d == 0`.
    pub k_min: i64,
}

impl Label {
    fn new(s: i64, d: i64) -> Label {
        let k_min = if d > 0 { ceil_div(triangular(d) - s, d) } else { 0 };
        Label { s, d, k_min }
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    num_integer::Integer::div_ceil(&a, &b)
}

fn floor_div(a: i64, b: i64) -> i64 {
    num_integer::Integer::div_floor(&a, &b)
}

/// Smallest `l >= 0` with `m + l*t + T_l >= 0`, by direct scan.
pub fn ramp_index_scan(m: i64, t: i64) -> i64 {
    (0..).find(|&l| m + l * t + triangular(l) >= 0).unwrap()
}

/// The same index from the quadratic `l^2 + (2t+1) l + 2m >= 0`, using an
/// exact integer square root of the discriminant.
pub fn ramp_index_closed_form(m: i64, t: i64) -> i64 {
    let b = 2 * t + 1;
    let disc = b * b - 8 * m;
    if disc < 0 {
        return 0;
    }
    let root = disc.isqrt();
    let u = root - b;
    let r = if root * root == disc { ceil_div(u, 2) } else { floor_div(u, 2) + 1 };
    r.max(0)
}

pub fn label_of(a0: i64, a1: i64) -> Label {
    if 0 <= a0 && a0 < a1 {
        let d = a1 - a0;
        Label::new(a0 - d * floor_div(a0, d), d)
    } else if 0 <= a1 && a1 < a0 {
        let d = a0 - a1;
        Label::new(a1 - d * floor_div(a1, d), d)
    } else if a0 == a1 && a0 >= 0 {
        Label::new(a0, 0)
    } else if a0 < 0 && 0 <= a1 {
        Label::new(a1, a1 - a0)
    } else if a1 < 0 && 0 <= a0 {
        Label::new(a0, a0 - a1)
    } else {
        let t = (a0 - a1).abs();
        let m = a0.max(a1);
        let r = ramp_index_scan(m, t);
        debug_assert_eq!(r, ramp_index_closed_form(m, t));
        Label::new(m + r * t + triangular(r), t + r)
    }
}

fn check_label(s: i64, d: i64) -> Result<(), TailError> {
    if d <= 0 || s < 0 || s >= d {
        Err(TailError::BadLabel { s, d })
    } else {
        Ok(())
    }
}

/// `C(s,d,k)` as one period: `A B rev(B) rev(A) C rev(C)`.
pub fn triangular_cycle(s: i64, d: i64, k: i64) -> Result<Cycle, TailError> {
    check_label(s, d)?;
    if k < 1 {
        return Err(TailError::IndexTooSmall { s, d, k });
    }
    let t_d = triangular(d);
    let a: Vec<i64> = (0..=k).map(|i| s + i * d).collect();
    let b: Vec<i64> = (1..=d).map(|j| s + k * d + t_d - triangular(d - j)).collect();
    let c: Vec<i64> = (1..=d).map(|j| s - (t_d - triangular(d - j))).collect();
    let mut word = Vec::with_capacity(2 * a.len() + 4 * b.len());
    word.extend(&a);
    word.extend(&b);
    word.extend(b.iter().rev());
    word.extend(a.iter().rev());
    word.extend(&c);
    word.extend(c.iter().rev());
    Ok(Cycle::new(word))
}

/// `[-2 + 1/(s+(k+1)d), -2 + 1/(s+kd))`, valid when `s + kd >= T_d`.
pub fn z_interval(s: i64, d: i64, k: i64) -> Result<Interval, TailError> {
    check_label(s, d)?;
    if k < 1 || s + k * d < triangular(d) {
        return Err(TailError::IndexTooSmall { s, d, k });
    }
    Ok(Interval::closed_open(near_minus_two(s + (k + 1) * d), near_minus_two(s + k * d)))
}

/// First `k >= K` such that `(a0, a1)` occurs (cyclically adjacent) in
/// `C(s,d,k)`. Occurrence persists for every larger `k`.
pub fn occurrence_start(label: &Label, a0: i64, a1: i64) -> Option<i64> {
    if label.d == 0 {
        return None;
    }
    let Label { s, d, k_min } = *label;
    // Beyond this index the ramp A covers every entry of magnitude <= max|a|.
    let bound = k_min + a0.abs().max(a1.abs()) / d + 2;
    (k_min..=bound).find(|&k| triangular_cycle(s, d, k).map(|c| c.contains_pair(a0, a1)).unwrap_or(false))
}

/// `-2 + 1/n`.
pub fn near_minus_two(n: i64) -> Rational {
    Rational::from(-2) + Rational::new(1, n)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TailKind {
    /// `(0, 0)`: the zero cycle everywhere.
    Full,
    /// `d = 0, s > 0`: the constant cycle `(s)`.
    Constant,
    /// `d > 0`: the triangular cycles.
    Triangular,
}

impl TailKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            TailKind::Full => "full",
            TailKind::Constant => "constant",
            TailKind::Triangular => "triangular",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TailDescription {
    pub a0: i64,
    pub a1: i64,
    pub label: Label,
    pub kind: TailKind,
    /// First triangular index whose cycle passes through `(a0, a1)`; equals
    /// `label.k_min` except for the points described in the module docs.
    /// Zero when `d == 0`.
    pub k_start: i64,
    /// The region described in closed form, `(-2, -2 + 1/(s + k_start d))`,
    /// `(-2, -2 + 1/s)` or `(-2, 2)`.
    pub interval: Interval,
}

impl TailDescription {
    /// The cycle covering the whole tail, for `d = 0`.
    pub fn constant_cycle(&self) -> Option<Cycle> {
        match self.kind {
            TailKind::Triangular => None,
            _ => Some(Cycle::new(vec![self.label.s])),
        }
    }

    /// `(Z_k, C(s,d,k))` for `k = k_start, k_start+1, ...`; empty unless `d > 0`.
    pub fn pieces(&self) -> impl Iterator<Item = (Interval, Cycle)> + '_ {
        let Label { s, d, .. } = self.label;
        let ks = if self.kind == TailKind::Triangular { self.k_start..i64::MAX } else { 0..0 };
        ks.map(move |k| {
            (
                z_interval(s, d, k).expect("k >= K is admissible"),
                triangular_cycle(s, d, k).expect("label satisfies 0 <= s < d"),
            )
        })
    }

    /// Left end of the body range, `-2 + 1/(s+Kd)` (or `-2 + 1/s`).
    pub fn body_start(&self) -> Option<Rational> {
        match self.kind {
            TailKind::Full => None,
            TailKind::Constant => Some(self.interval.hi().clone()),
            TailKind::Triangular => Some(near_minus_two(self.label.s + self.label.k_min * self.label.d)),
        }
    }

    /// `[-2 + 1/(s + k_start d), -2 + 1/(s+Kd))` when `k_start > K`: the
    /// stretch between the closed-form tail and the body.
    pub fn bridge_range(&self) -> Option<Interval> {
        if self.kind != TailKind::Triangular || self.k_start == self.label.k_min {
            return None;
        }
        Some(Interval::closed_open(self.interval.hi().clone(), self.body_start()?))
    }
}

pub fn tail_of(a0: i64, a1: i64) -> TailDescription {
    let label = label_of(a0, a1);
    let (kind, k_start, hi) = if label.d > 0 {
        let k = occurrence_start(&label, a0, a1).expect("the ramp eventually reaches the initial pair");
        (TailKind::Triangular, k, near_minus_two(label.s + k * label.d))
    } else if label.s > 0 {
        (TailKind::Constant, 0, near_minus_two(label.s))
    } else {
        (TailKind::Full, 0, Rational::from(2))
    };
    TailDescription { a0, a1, label, kind, k_start, interval: Interval::open(Rational::from(-2), hi) }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(s: &str) -> Interval {
        s.parse().unwrap()
    }

    #[test]
    fn triangular_numbers() {
        assert_eq!(triangular(0), 0);
        assert_eq!(triangular(1), 1);
        assert_eq!(triangular(4), 10);
    }

    #[test]
    fn label_examples() {
        assert_eq!(label_of(0, 1), Label { s: 0, d: 1, k_min: 1 });
        assert_eq!(label_of(-1, -1), Label { s: 0, d: 1, k_min: 1 });
        assert_eq!(label_of(-2, -2), Label { s: 1, d: 2, k_min: 1 });
        assert_eq!(label_of(2, 0), Label { s: 0, d: 2, k_min: 2 });
        assert_eq!(label_of(0, 0), Label { s: 0, d: 0, k_min: 0 });
        assert_eq!(label_of(3, 3), Label { s: 3, d: 0, k_min: 0 });
    }

    #[test]
    fn closed_form_matches_scan() {
        for m in -300..0 {
            for t in 0..60 {
                assert_eq!(ramp_index_closed_form(m, t), ramp_index_scan(m, t), "m={m} t={t}");
            }
        }
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(triangular_cycle(0, 1, 1).unwrap().word(), &[0, 1, 2, 2, 1, 0, -1, -1]);
        assert_eq!(triangular_cycle(1, 2, 1).unwrap().word(), &[1, 3, 5, 6, 6, 5, 3, 1, -1, -2, -2, -1]);
        assert_eq!(triangular_cycle(0, 1, 2).unwrap().word(), &[0, 1, 2, 3, 3, 2, 1, 0, -1, -1]);
        assert!(triangular_cycle(2, 2, 1).is_err());
        assert!(triangular_cycle(0, 0, 1).is_err());
    }

    #[test]
    fn z_examples() {
        assert_eq!(z_interval(0, 1, 1).unwrap(), iv("[-3/2,-1)"));
        assert_eq!(z_interval(1, 2, 1).unwrap(), iv("[-9/5,-5/3)"));
        assert_eq!(z_interval(0, 1, 2).unwrap(), iv("[-5/3,-3/2)"));
        assert!(z_interval(0, 2, 1).is_err());
    }

    #[test]
    fn tail_examples() {
        let t = tail_of(0, 0);
        assert_eq!(t.interval, iv("(-2,2)"));
        assert_eq!(t.constant_cycle().unwrap().word(), &[0]);

        let t = tail_of(1, 1);
        assert_eq!(t.interval, iv("(-2,-1)"));
        assert_eq!(t.constant_cycle().unwrap().word(), &[1]);

        let t = tail_of(-1, -1);
        assert_eq!(t.interval, iv("(-2,-1)"));
        let pieces: Vec<_> = t.pieces().take(3).collect();
        assert_eq!(pieces[0].0, iv("[-3/2,-1)"));
        assert_eq!(pieces[1].0, iv("[-5/3,-3/2)"));
        assert_eq!(pieces[2].0, iv("[-7/4,-5/3)"));
        assert_eq!(pieces[0].1, triangular_cycle(0, 1, 1).unwrap());
        assert!(tail_of(2, 2).pieces().next().is_none());
        assert_eq!(t.bridge_range(), None);
    }

    #[test]
    fn late_occurrence() {
        let t = tail_of(2, 3);
        assert_eq!(t.label, Label { s: 0, d: 1, k_min: 1 });
        assert_eq!(t.k_start, 2);
        assert_eq!(t.interval, iv("(-2,-3/2)"));
        assert_eq!(t.bridge_range(), Some(iv("[-3/2,-1)")));
        assert_eq!(t.body_start(), Some(Rational::from(-1)));
        assert!(!triangular_cycle(0, 1, 1).unwrap().contains_pair(2, 3));
        assert!(t.pieces().next().unwrap().1.contains_pair(2, 3));
    }
}
