//! Serializes a partition and reads it back.
//!
//! cargo run --example json -- 2 3

use rotation_atlas::partition::{compute_atlas, Limits};
use rotation_atlas::report::{atlas_from_json, atlas_to_json};

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let (a0, a1) = match args[..] {
        [a0, a1] => (a0, a1),
        _ => (2, 3),
    };
    let atlas = compute_atlas(a0, a1, &Limits::default()).unwrap_or_else(|e| panic!("{e}"));
    let text = atlas_to_json(&atlas);
    print!("{text}");
    assert_eq!(atlas_from_json(&text).unwrap(), atlas);
    eprintln!("round trip ok");
}
