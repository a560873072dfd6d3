//! Verifies every partition in a square of initial pairs and prints the
//! per-ring tables.
//!
//! cargo run --release --example sweep -- 4

use rotation_atlas::partition::{sweep, Limits};
use rotation_atlas::report::{render_tables, TableFormat};

fn main() {
    let m: i64 = std::env::args().nth(1).map_or(3, |a| a.parse().expect("integer"));
    let report = sweep(m, &Limits::default()).unwrap_or_else(|e| panic!("{e}"));
    print!("{}", render_tables(&report, TableFormat::Text));
    match report.first_failure() {
        None => println!("\nall {} partitions verified", report.summaries.len()),
        Some(s) => println!("\n({},{}) failed: {}", s.a0, s.a1, s.failure.as_deref().unwrap_or("")),
    }
}
