//! The discretized rotation `(x, y) -> (y, z)` with `0 <= z + l*y + x < 1`,
//! its one-sided limits at rational parameters, and cycle detection.
//!
//! For `l = p/q + 0` the limit map adds one to the ceiling when `y < 0` and
//! `q | y`; for `l = p/q - 0` it does so when `y > 0` and `q | y`. At `2 - 0`
//! and `-2 + 0` these are the maps usually called `G` and `H`.

mod cycle;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

pub use cycle::Cycle;

use crate::error::{ParamError, ParseError};
use crate::exact::Rational;

/// Default per-orbit step cap.
pub const DEFAULT_CYCLE_CAP: u64 = 10_000_000;

/// A state `(a_n, a_{n+1})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const fn new(x: i64, y: i64) -> Self {
        LatticePoint { x, y }
    }
}

impl From<(i64, i64)> for LatticePoint {
    fn from((x, y): (i64, i64)) -> Self {
        LatticePoint { x, y }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Exact,
    PlusZero,
    MinusZero,
}

impl FromStr for Side {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exact" => Ok(Side::Exact),
            "plus" | "plus_zero" | "+0" => Ok(Side::PlusZero),
            "minus" | "minus_zero" | "-0" => Ok(Side::MinusZero),
            _ => Err(ParseError::Side(s.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Coeffs {
    Small { p: i128, q: i128 },
    Big { p: BigInt, q: BigInt },
}

/// A parameter value, exact or one-sided, validated on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamSpec {
    side: Side,
    value: Rational,
    coeffs: Coeffs,
}

impl ParamSpec {
    pub fn new(side: Side, value: Rational) -> Result<ParamSpec, ParamError> {
        let two = Rational::from(2);
        let minus_two = Rational::from(-2);
        let ok = match side {
            Side::Exact => value > minus_two && value < two,
            Side::PlusZero => value >= minus_two && value < two,
            Side::MinusZero => value > minus_two && value <= two,
        };
        if !ok {
            return Err(match side {
                Side::Exact => ParamError::ExactOutOfRange(value),
                Side::PlusZero => ParamError::PlusOutOfRange(value),
                Side::MinusZero => ParamError::MinusOutOfRange(value),
            });
        }
        let coeffs = match value.to_i64_pair() {
            Some((p, q)) => Coeffs::Small { p: p as i128, q: q as i128 },
            None => Coeffs::Big { p: value.numer().clone(), q: value.denom().clone() },
        };
        Ok(ParamSpec { side, value, coeffs })
    }

    pub fn exact(value: Rational) -> Result<ParamSpec, ParamError> {
        ParamSpec::new(Side::Exact, value)
    }

    pub fn plus_zero(value: Rational) -> Result<ParamSpec, ParamError> {
        ParamSpec::new(Side::PlusZero, value)
    }

    pub fn minus_zero(value: Rational) -> Result<ParamSpec, ParamError> {
        ParamSpec::new(Side::MinusZero, value)
    }

    /// `2 - 0`.
    pub fn g() -> ParamSpec {
        ParamSpec::minus_zero(Rational::from(2)).unwrap()
    }

    /// `-2 + 0`.
    pub fn h() -> ParamSpec {
        ParamSpec::plus_zero(Rational::from(-2)).unwrap()
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    fn is_h(&self) -> bool {
        self.side == Side::PlusZero && self.value == Rational::from(-2)
    }

    /// The one-sided correction for a state whose middle coordinate is `y`.
    fn bump_small(&self, y: i128, q: i128) -> i128 {
        let hit = match self.side {
            Side::Exact => false,
            Side::PlusZero => y < 0 && y % q == 0,
            Side::MinusZero => y > 0 && y % q == 0,
        };
        hit as i128
    }

    fn bump_big(&self, y: &BigInt, q: &BigInt) -> BigInt {
        let hit = match self.side {
            Side::Exact => false,
            Side::PlusZero => y.is_negative() && (y % q).is_zero(),
            Side::MinusZero => y.is_positive() && (y % q).is_zero(),
        };
        BigInt::from(hit as u8)
    }

    /// `ceil(-l*mid - outer) + bump(mid)`, the entry that completes
    /// `0 <= new + l*mid + outer < 1`.
    fn complete(&self, outer: i64, mid: i64) -> i64 {
        match &self.coeffs {
            Coeffs::Small { p, q } => {
                let (outer, mid) = (outer as i128, mid as i128);
                let z = Integer::div_ceil(&(-p * mid - q * outer), q) + self.bump_small(mid, *q);
                i64::try_from(z).expect("lattice coordinate overflow")
            }
            Coeffs::Big { p, q } => {
                let (outer, mid) = (BigInt::from(outer), BigInt::from(mid));
                let num: BigInt = -(p * &mid) - q * &outer;
                let z = Integer::div_ceil(&num, q) + self.bump_big(&mid, q);
                z.to_i64().expect("lattice coordinate overflow")
            }
        }
    }
}

impl fmt::Display for ParamSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::Exact => write!(f, "{}", self.value),
            Side::PlusZero => write!(f, "{}+0", self.value),
            Side::MinusZero => write!(f, "{}-0", self.value),
        }
    }
}

/// `(x, y) -> (y, z)`.
pub fn step(spec: &ParamSpec, p: LatticePoint) -> LatticePoint {
    LatticePoint::new(p.y, spec.complete(p.x, p.y))
}

/// `(x, y) -> (w, x)`, the unique preimage under [`step`].
pub fn step_inverse(spec: &ParamSpec, p: LatticePoint) -> LatticePoint {
    // step gives y = ceil(-l*x - w) + bump(x), so w = ceil(-l*x - y) + bump(x):
    // the same completion with the roles of the outer entries exchanged.
    LatticePoint::new(spec.complete(p.y, p.x), p.x)
}

/// Forward orbit, starting with the initial state itself.
pub struct Orbit<'a> {
    spec: &'a ParamSpec,
    state: LatticePoint,
}

impl Iterator for Orbit<'_> {
    type Item = LatticePoint;

    fn next(&mut self) -> Option<LatticePoint> {
        let current = self.state;
        self.state = step(self.spec, current);
        Some(current)
    }
}

pub fn orbit(spec: &ParamSpec, start: LatticePoint) -> Orbit<'_> {
    Orbit { spec, state: start }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrbitOutcome {
    Cycle(Cycle),
    CapExceeded,
    /// Only reported under `-2 + 0` once `x - y < 0`, which forces the
    /// sequence to increase without bound.
    Diverged,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitResult {
    pub outcome: OrbitOutcome,
    pub steps_used: u64,
    pub max_abs: i64,
}

impl OrbitResult {
    pub fn cycle(&self) -> Option<&Cycle> {
        match &self.outcome {
            OrbitOutcome::Cycle(c) => Some(c),
            _ => None,
        }
    }

    pub fn into_cycle(self) -> Option<Cycle> {
        match self.outcome {
            OrbitOutcome::Cycle(c) => Some(c),
            _ => None,
        }
    }
}

/// Iterates until the orbit first returns to `start`. The map is a
/// bijection, so any bounded orbit is purely periodic and the first return
/// yields the minimal period.
pub fn detect_cycle(spec: &ParamSpec, start: LatticePoint, cap: u64) -> OrbitResult {
    assert!(cap >= 1, "cap must be positive");
    let certify_divergence = spec.is_h();
    let mut word = Vec::new();
    let mut state = start;
    let mut max_abs = start.x.abs().max(start.y.abs());
    let mut steps = 0u64;
    loop {
        if certify_divergence && state.x < state.y {
            return OrbitResult { outcome: OrbitOutcome::Diverged, steps_used: steps, max_abs };
        }
        if steps == cap {
            return OrbitResult { outcome: OrbitOutcome::CapExceeded, steps_used: steps, max_abs };
        }
        word.push(state.x);
        state = step(spec, state);
        steps += 1;
        max_abs = max_abs.max(state.y.abs());
        if state == start {
            return OrbitResult { outcome: OrbitOutcome::Cycle(Cycle::new(word)), steps_used: steps, max_abs };
        }
    }
}

/// Whether `word`, read cyclically, satisfies `0 <= b_{i+2} + l*b_{i+1} + b_i < 1`
/// for every `i` at the exact parameter `l`.
pub fn satisfies_exact(word: &[i64], lambda: &Rational) -> bool {
    let n = word.len();
    let zero = Rational::zero();
    let one = Rational::from(1);
    (0..n).all(|i| {
        let v = Rational::from(word[(i + 2) % n] + word[i]) + lambda * &Rational::from(word[(i + 1) % n]);
        v >= zero && v < one
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact(n: i64, d: i64) -> ParamSpec {
        ParamSpec::exact(Rational::new(n, d)).unwrap()
    }

    #[test]
    fn step_examples() {
        assert_eq!(step(&exact(0, 1), (5, 7).into()), (7, -5).into());
        assert_eq!(step(&exact(1, 2), (3, 2).into()), (2, -4).into());
        assert_eq!(step(&ParamSpec::g(), (0, -1).into()), (-1, 2).into());
        for m in 0..20 {
            assert_eq!(step(&ParamSpec::h(), (m, m).into()), (m, m).into());
        }
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(step_inverse(&exact(0, 1), (7, -5).into()), (5, 7).into());
        assert_eq!(step_inverse(&ParamSpec::g(), (-1, 2).into()), (0, -1).into());
        assert_eq!(step_inverse(&exact(1, 2), (2, -4).into()), (3, 2).into());
        // the first coordinate is a multiple of q on the bumped side
        assert_eq!(step(&ParamSpec::h(), (0, -1).into()), (-1, -1).into());
        assert_eq!(step_inverse(&ParamSpec::h(), (-1, -1).into()), (0, -1).into());
    }

    #[test]
    fn rotation_by_quarter_turn() {
        let r = detect_cycle(&exact(0, 1), (5, 7).into(), 100);
        assert_eq!(r.cycle().unwrap().word(), &[5, 7, -5, -7]);
        assert_eq!(r.steps_used, 4);
        assert_eq!(r.max_abs, 7);
    }

    #[test]
    fn g_orbit_from_one_zero() {
        let r = detect_cycle(&ParamSpec::g(), (1, 0).into(), 1000);
        let c = r.cycle().unwrap();
        assert_eq!(c.word(), &[1, 0, -1, 2, -2, 2, -1, 0, 1, -1]);
        assert!(c.is_cyclic_palindrome());
    }

    #[test]
    fn h_diverges() {
        let r = detect_cycle(&ParamSpec::h(), (0, 1).into(), 1000);
        assert_eq!(r.outcome, OrbitOutcome::Diverged);
        let r = detect_cycle(&ParamSpec::h(), (3, 3).into(), 1000);
        assert_eq!(r.cycle().unwrap().word(), &[3]);
    }

    #[test]
    fn eight_fifths_from_minus_one() {
        let r = detect_cycle(&exact(8, 5), (-1, -1).into(), 10_000);
        let c = r.cycle().unwrap();
        assert_eq!(c.len(), 38);
        assert!(satisfies_exact(c.word(), &Rational::new(8, 5)));
    }

    #[test]
    fn cap_is_reported() {
        let r = detect_cycle(&exact(8, 5), (-1, -1).into(), 10);
        assert_eq!(r.outcome, OrbitOutcome::CapExceeded);
        assert_eq!(r.steps_used, 10);
    }

    #[test]
    fn parameter_ranges() {
        assert!(ParamSpec::exact(Rational::from(2)).is_err());
        assert!(ParamSpec::exact(Rational::from(-2)).is_err());
        assert!(ParamSpec::plus_zero(Rational::from(2)).is_err());
        assert!(ParamSpec::minus_zero(Rational::from(-2)).is_err());
        assert!(ParamSpec::plus_zero(Rational::from(-2)).is_ok());
        assert!(ParamSpec::minus_zero(Rational::from(2)).is_ok());
    }

    #[test]
    fn big_coefficients_agree_with_small() {
        // Same rational value routed through the arbitrary-precision path.
        let small = exact(7, 5);
        let big_val =
            Rational::from_bigints(BigInt::from(7) * BigInt::from(i64::MAX), BigInt::from(5) * BigInt::from(i64::MAX));
        assert_eq!(big_val, Rational::new(7, 5));
        let near = Rational::new(7, 5) + Rational::from_bigints(BigInt::from(1), BigInt::from(u64::MAX) * 4);
        let big = ParamSpec::exact(near).unwrap();
        assert!(matches!(big.coeffs, Coeffs::Big { .. }));
        for (x, y) in [(3, 4), (-7, 2), (0, 5), (11, -13)] {
            assert_eq!(step(&small, (x, y).into()), step(&big, (x, y).into()));
            let p = LatticePoint::new(x, y);
            assert_eq!(step_inverse(&big, step(&big, p)), p);
        }
    }
}
