//! Cycles through one initial pair at a few parameters, including the
//! one-sided limits at the ends of the range.
//!
//! cargo run --example orbit -- -1 1

use rotation_atlas::dynamics::{detect_cycle, LatticePoint, OrbitOutcome, ParamSpec, DEFAULT_CYCLE_CAP};
use rotation_atlas::Rational;

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let start = match args[..] {
        [x, y] => LatticePoint::new(x, y),
        _ => LatticePoint::new(-1, 1),
    };
    let mut specs: Vec<ParamSpec> = ["-3/2", "-3/4", "0", "1", "8/5", "19/10"]
        .iter()
        .map(|s| ParamSpec::exact(s.parse::<Rational>().unwrap()).unwrap())
        .collect();
    specs.push(ParamSpec::g());
    specs.push(ParamSpec::h());

    for spec in &specs {
        let r = detect_cycle(spec, start, DEFAULT_CYCLE_CAP);
        match r.outcome {
            OrbitOutcome::Cycle(c) => println!("{:>6}  len {:>3}  {c}", spec.to_string(), c.len()),
            OrbitOutcome::Diverged => println!("{:>6}  diverges", spec.to_string()),
            OrbitOutcome::CapExceeded => println!("{:>6}  no return within {} steps", spec.to_string(), r.steps_used),
        }
    }
}
