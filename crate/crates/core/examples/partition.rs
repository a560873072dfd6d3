//! Full partition of (-2, 2) for one initial pair, verified.
//!
//! cargo run --release --example partition -- -1 1

use rotation_atlas::partition::{compute_atlas, verify_atlas, Limits, DEFAULT_PROBES};
use rotation_atlas::report::render_endpoint_listing;

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let (a0, a1) = match args[..] {
        [a0, a1] => (a0, a1),
        _ => (-1, 1),
    };
    let atlas = compute_atlas(a0, a1, &Limits::default()).unwrap_or_else(|e| panic!("{e}"));
    println!("tail {}", atlas.tail.interval);
    for e in atlas.bridge.iter().chain(&atlas.body) {
        println!("{:<16} {:>4}  {}", e.interval.to_string(), e.cycle.len(), e.cycle);
    }
    println!("{}", render_endpoint_listing(&atlas));
    let s = &atlas.stats;
    println!("{} intervals, {} singletons, longest {} on {}", s.intervals, s.singletons, s.max_len, s.max_len_interval);

    let report = verify_atlas(&atlas, DEFAULT_PROBES);
    match report.failure {
        None => println!("verified ({} checks)", report.checks),
        Some(f) => println!("FAILED: {f}"),
    }
}
