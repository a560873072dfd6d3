//! Labels and the triangular cycles accumulating at -2.
//!
//! cargo run --example tail -- 2 3

use rotation_atlas::tail::{tail_of, TailKind};

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let points = match args[..] {
        [a0, a1] => vec![(a0, a1)],
        _ => vec![(0, 0), (3, 3), (-1, -1), (-2, -2), (2, 3)],
    };
    for (a0, a1) in points {
        let t = tail_of(a0, a1);
        println!("({a0},{a1}): s={} d={} K={} tail {}", t.label.s, t.label.d, t.label.k_min, t.interval);
        match t.kind {
            TailKind::Triangular => {
                if let Some(b) = t.bridge_range() {
                    println!("  first occurrence at k={}, refined bridge {b}", t.k_start);
                }
                for (z, c) in t.pieces().take(3) {
                    println!("  {z:<14} {c}");
                }
            }
            _ => println!("  {}", t.constant_cycle().unwrap()),
        }
    }
}
