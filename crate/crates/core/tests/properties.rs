use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use proptest::prelude::*;
use rotation_atlas::dynamics::{detect_cycle, satisfies_exact, step, step_inverse, LatticePoint, ParamSpec, Side};
use rotation_atlas::exact::{Interval, IntervalSet, Rational};
use rotation_atlas::partition::{compute_atlas, Limits, PartitionAtlas};
use rotation_atlas::tail::{
    label_of, ramp_index_closed_form, ramp_index_scan, tail_of, triangular, triangular_cycle, z_interval, TailKind,
};
use rotation_atlas::{interval_for_cycle, Cycle};

const CAP: u64 = 10_000_000;

fn cached_atlas(a0: i64, a1: i64) -> PartitionAtlas {
    static CACHE: OnceLock<Mutex<HashMap<(i64, i64), PartitionAtlas>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(a) = cache.lock().unwrap().get(&(a0, a1)) {
        return a.clone();
    }
    let atlas = compute_atlas(a0, a1, &Limits::default()).unwrap();
    cache.lock().unwrap().insert((a0, a1), atlas.clone());
    atlas
}

/// `p/q` strictly inside `(-2, 2)`.
fn lambda(max_q: i64) -> impl Strategy<Value = Rational> {
    (1..=max_q).prop_flat_map(|q| (-2 * q + 1..2 * q).prop_map(move |p| Rational::new(p, q)))
}

/// `p/q` in `[-2, 2]`.
fn lambda_closed(max_q: i64) -> impl Strategy<Value = Rational> {
    (1..=max_q).prop_flat_map(|q| (-2 * q..=2 * q).prop_map(move |p| Rational::new(p, q)))
}

fn point(r: i64) -> impl Strategy<Value = LatticePoint> {
    (-r..=r, -r..=r).prop_map(|(x, y)| LatticePoint::new(x, y))
}

/// The ceiling `ceil(-l*y - x)` computed directly with rationals.
fn ceil_oracle(l: &Rational, p: LatticePoint) -> i64 {
    let v = -(l * &Rational::from(p.y)) - Rational::from(p.x);
    let (n, d) = v.to_i64_pair().unwrap();
    n.div_euclid(d) + i64::from(n.rem_euclid(d) != 0)
}

/// A shift small enough that `l + eps` and `l` give the same ceilings away
/// from the exact-integer cases.
fn nudge(l: &Rational, y: i64) -> Rational {
    let (_, q) = l.to_i64_pair().unwrap();
    Rational::new(1, 4 * q * (y.abs() + 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn step_is_sound(l in lambda(500), p in point(1_000_000)) {
        let next = step(&ParamSpec::exact(l.clone()).unwrap(), p);
        prop_assert_eq!(next.x, p.y);
        let v = Rational::from(next.y) + &l * &Rational::from(p.y) + Rational::from(p.x);
        prop_assert!(v >= Rational::zero() && v < Rational::from(1));
        prop_assert_eq!(next.y, ceil_oracle(&l, p));
    }

    #[test]
    fn step_round_trips(l in lambda_closed(300), side in 0..3u8, p in point(1_000_000)) {
        let side = [Side::Exact, Side::PlusZero, Side::MinusZero][side as usize];
        let Ok(spec) = ParamSpec::new(side, l) else { return Ok(()) };
        prop_assert_eq!(step_inverse(&spec, step(&spec, p)), p);
        prop_assert_eq!(step(&spec, step_inverse(&spec, p)), p);
    }

    #[test]
    fn one_sided_maps_are_limits(l in lambda(200), p in point(10_000)) {
        let eps = nudge(&l, p.y);
        let plus = step(&ParamSpec::plus_zero(l.clone()).unwrap(), p);
        let minus = step(&ParamSpec::minus_zero(l.clone()).unwrap(), p);
        prop_assert_eq!(plus.y, ceil_oracle(&(&l + &eps), p));
        prop_assert_eq!(minus.y, ceil_oracle(&(&l - &eps), p));
    }

    #[test]
    fn g_and_h_specialize(p in point(1_000_000)) {
        let g = step(&ParamSpec::g(), p);
        prop_assert_eq!(g.y, -2 * p.y - p.x + i64::from(p.y > 0));
        let h = step(&ParamSpec::h(), p);
        prop_assert_eq!(h.y, 2 * p.y - p.x + i64::from(p.y < 0));
        prop_assert_eq!(ParamSpec::g(), ParamSpec::minus_zero(Rational::from(2)).unwrap());
        prop_assert_eq!(ParamSpec::h(), ParamSpec::plus_zero(Rational::from(-2)).unwrap());
    }

    #[test]
    fn zero_parameter_has_period_dividing_four(p in point(1_000_000)) {
        let r = detect_cycle(&ParamSpec::exact(Rational::zero()).unwrap(), p, CAP);
        let c = r.cycle().unwrap();
        prop_assert_eq!(4 % c.len(), 0);
    }

    #[test]
    fn time_reversal(l in lambda(60), p in point(40)) {
        let spec = ParamSpec::exact(l).unwrap();
        let fwd = detect_cycle(&spec, p, CAP).into_cycle().unwrap();
        let back = detect_cycle(&spec, LatticePoint::new(p.y, p.x), CAP).into_cycle().unwrap();
        prop_assert_eq!(back, fwd.reversed());
    }

    #[test]
    fn detected_cycles_are_sound_and_complete(l in lambda(60), p in point(30), t in 1..1000i64) {
        let spec = ParamSpec::exact(l.clone()).unwrap();
        let word = detect_cycle(&spec, p, CAP).into_cycle().unwrap();
        prop_assert!(satisfies_exact(word.word(), &l));
        let interval = interval_for_cycle(&word).unwrap();
        prop_assert!(interval.contains(&l));

        let mut inside = vec![interval.lo() + &((interval.hi() - interval.lo()) * Rational::new(t, 1000))];
        if interval.lo_closed() { inside.push(interval.lo().clone()); }
        if interval.hi_closed() { inside.push(interval.hi().clone()); }
        for x in inside {
            let again = detect_cycle(&ParamSpec::exact(x.clone()).unwrap(), p, CAP).into_cycle().unwrap();
            prop_assert_eq!(again.word(), word.word(), "at {}", x);
        }

        let eps = Rational::new(1, 1_000_000);
        let mut outside = Vec::new();
        if interval.lo_closed() { outside.push(interval.lo() - &eps); }
        if interval.hi_closed() { outside.push(interval.hi() + &eps); }
        for x in outside {
            let Ok(spec) = ParamSpec::exact(x.clone()) else { continue };
            let other = detect_cycle(&spec, p, CAP).into_cycle().unwrap();
            prop_assert!(other != word, "{} still realizes {} at {}", interval, word, x);
        }
    }

    #[test]
    fn reversal_keeps_interval(l in lambda(60), p in point(30)) {
        let word = detect_cycle(&ParamSpec::exact(l).unwrap(), p, CAP).into_cycle().unwrap();
        prop_assert_eq!(interval_for_cycle(&word.reversed()), interval_for_cycle(&word));
    }

    #[test]
    fn canonical_rationals(a in -10_000i64..10_000, b in 1i64..10_000, k in 1i64..1000) {
        let r = Rational::new(a * k, b * k);
        prop_assert!(r.is_canonical());
        prop_assert_eq!(&r, &Rational::new(a, b));
        prop_assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
    }

    #[test]
    fn set_difference_matches_membership(cuts in prop::collection::vec((interval(), 0..2usize), 1..8)) {
        let base = Interval::closed_open(Rational::from(-2), Rational::from(2));
        let mut set = IntervalSet::from_interval(base.clone());
        let mut probes: Vec<Rational> = vec![Rational::from(-3), Rational::from(3)];
        for (cut, _) in &cuts {
            probes.extend([cut.lo().clone(), cut.hi().clone()]);
        }
        probes.sort();
        probes.dedup();
        let mids: Vec<Rational> = probes.windows(2).map(|w| Rational::midpoint(&w[0], &w[1])).collect();
        probes.extend(mids);
        let mut removed: Vec<Interval> = Vec::new();
        for (cut, in_place) in cuts {
            if in_place == 0 { set.subtract_in_place(&cut) } else { set = set.subtract(&cut) }
            removed.push(cut);
            prop_assert!(set.is_valid());
            for x in &probes {
                let want = base.contains(x) && !removed.iter().any(|r| r.contains(x));
                prop_assert_eq!(set.contains(x), want, "{} in {}", x, set);
            }
        }
        for s in set.sample_points() {
            prop_assert!(set.contains(&s));
        }
    }

    #[test]
    fn triangular_cycles_tile_the_tail(s in 0i64..40, extra in 1i64..40, dk in 0i64..30) {
        let d = s + extra;
        let k = label_of_sd_k_min(s, d) + dk;
        let z = z_interval(s, d, k).unwrap();
        let next = z_interval(s, d, k + 1).unwrap();
        prop_assert_eq!(next.hi(), z.lo());
        prop_assert!(z.lo_closed() && !next.hi_closed());
        prop_assert_eq!(interval_for_cycle(&triangular_cycle(s, d, k).unwrap()), Some(z));
    }

    #[test]
    fn ramp_index_is_minimal(m in -10_000i64..0, t in 0i64..500) {
        let r = ramp_index_scan(m, t);
        prop_assert_eq!(ramp_index_closed_form(m, t), r);
        // m + r t + T_r is the first non-negative value of the ramp
        prop_assert!(m + r * t + triangular(r) >= 0);
        prop_assert!(r == 0 || m + (r - 1) * t + triangular(r - 1) < 0);
    }

    #[test]
    fn labels_are_admissible(a0 in -500i64..=500, a1 in -500i64..=500) {
        let l = label_of(a0, a1);
        prop_assert_eq!(l, label_of(a1, a0));
        if l.d > 0 {
            prop_assert!(0 <= l.s && l.s < l.d);
            prop_assert!(l.k_min >= 1);
            prop_assert!(l.s + l.k_min * l.d >= triangular(l.d));
            prop_assert!(l.k_min == 1 || l.s + (l.k_min - 1) * l.d < triangular(l.d));
        }
    }

    #[test]
    fn occurrence_starts_where_the_orbit_says(a0 in -12i64..=12, a1 in -12i64..=12, dk in 0i64..4) {
        let t = tail_of(a0, a1);
        prop_assume!(t.kind == TailKind::Triangular);
        let (s, d) = (t.label.s, t.label.d);
        for k in t.label.k_min..=t.k_start + dk {
            let c = triangular_cycle(s, d, k).unwrap();
            let lam = z_interval(s, d, k).unwrap().midpoint();
            let orbit = detect_cycle(&ParamSpec::exact(lam).unwrap(), LatticePoint::new(a0, a1), CAP);
            let on_c = orbit.cycle() == Some(&c);
            prop_assert_eq!(on_c, k >= t.k_start, "k={} start={}", k, t.k_start);
            prop_assert_eq!(c.contains_pair(a0, a1), on_c);
        }
    }

    #[test]
    fn swapped_points_mirror(a0 in -6i64..=6, a1 in -6i64..=6, t in 0..10_000i64) {
        let x = cached_atlas(a0, a1);
        let y = cached_atlas(a1, a0);
        let entries = |a: &PartitionAtlas| a.bridge.iter().chain(&a.body).cloned().collect::<Vec<_>>();
        let (ex, ey) = (entries(&x), entries(&y));
        prop_assert_eq!(ex.len(), ey.len());
        for (e, f) in ex.iter().zip(&ey) {
            prop_assert_eq!(&e.interval, &f.interval);
            prop_assert_eq!(&f.cycle, &e.cycle.reversed());
        }
        // and at one random parameter, directly
        let l = Rational::new(-19_999 + 4 * t, 10_000);
        prop_assert_eq!(x.tail.interval.contains(&l), y.tail.interval.contains(&l));
    }

    #[test]
    fn last_interval_ends_at_two(a0 in -200i64..=200, a1 in -200i64..=200, n in 1_000i64..1_000_000) {
        prop_assume!((a0, a1) != (0, 0));
        let g = detect_cycle(&ParamSpec::g(), LatticePoint::new(a0, a1), CAP).into_cycle().unwrap();
        prop_assert!(g.is_cyclic_palindrome());
        let near_two = interval_for_cycle(&g).unwrap();
        prop_assert!(!near_two.is_singleton() && near_two.hi() == &Rational::from(2) && !near_two.hi_closed());
        let l = Rational::from(2) - Rational::new(1, n);
        if near_two.contains(&l) {
            let at = detect_cycle(&ParamSpec::exact(l).unwrap(), LatticePoint::new(a0, a1), CAP);
            prop_assert_eq!(at.cycle(), Some(&g));
        }
    }
}

fn label_of_sd_k_min(s: i64, d: i64) -> i64 {
    // least k >= 1 with s + k d >= T_d
    (1..).find(|k| s + k * d >= triangular(d)).unwrap()
}

fn interval() -> impl Strategy<Value = Interval> {
    (lambda_closed(6), lambda_closed(6), any::<bool>(), any::<bool>()).prop_filter_map("empty", |(a, b, lc, hc)| {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        if lo == hi {
            Some(Interval::singleton(lo))
        } else {
            Interval::new(lo, lc, hi, hc)
        }
    })
}

#[test]
fn last_body_entry_is_open_at_two() {
    for a0 in -6..=6 {
        for a1 in -6..=6 {
            let atlas = cached_atlas(a0, a1);
            let last = &atlas.body.last().unwrap().interval;
            assert!(!last.is_singleton() && last.hi() == &Rational::from(2) && !last.hi_closed(), "({a0},{a1})");
            if (a0, a1) != (0, 0) {
                let g = detect_cycle(&ParamSpec::g(), LatticePoint::new(a0, a1), CAP).into_cycle().unwrap();
                assert_eq!(atlas.body.last().unwrap().cycle, g, "({a0},{a1})");
            }
        }
    }
}

#[test]
fn late_occurrences_up_to_twelve() {
    let mut late = Vec::new();
    for a0 in -12..=12 {
        for a1 in -12..=12 {
            let t = tail_of(a0, a1);
            if t.kind == TailKind::Triangular && t.k_start > t.label.k_min {
                let c = triangular_cycle(t.label.s, t.label.d, t.label.k_min).unwrap();
                assert!(!c.contains_pair(a0, a1));
                late.push((a0, a1));
            }
        }
    }
    assert_eq!(late.len(), 34);
    assert!(late.contains(&(2, 3)) && late.contains(&(3, 2)));
}

#[test]
fn atlases_are_deterministic() {
    for (a0, a1) in [(-2, -2), (2, 3), (5, -4)] {
        let a = compute_atlas(a0, a1, &Limits::default()).unwrap();
        assert_eq!(a, compute_atlas(a0, a1, &Limits::default()).unwrap());
    }
}

#[test]
fn listed_words_have_their_parameter() {
    let w: Cycle = "0,1,2,2,1,0,-1,-1".parse().unwrap();
    assert_eq!(interval_for_cycle(&w), Some("[-3/2,-1)".parse().unwrap()));
}
