//! Writes an SVG figure of one partition.
//!
//! cargo run --example diagram -- -2 -2 > atlas.svg

use rotation_atlas::partition::{compute_atlas, Limits};
use rotation_atlas::report::emit_diagram;

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let (a0, a1) = match args[..] {
        [a0, a1] => (a0, a1),
        _ => (-1, -1),
    };
    let atlas = compute_atlas(a0, a1, &Limits::default()).unwrap_or_else(|e| panic!("{e}"));
    print!("{}", emit_diagram(&atlas));
}
