//! The inverse problem: from a cycle word to its exact parameter interval.
//!
//! cargo run --example cycle_interval -- "-2,-2,1,3,1"

use rotation_atlas::{constraints_for_cycle, interval_for_cycle, Cycle};

fn main() {
    let words: Vec<String> = std::env::args().skip(1).collect();
    let words = if words.is_empty() {
        vec!["-1,1,2,1,-1".into(), "-2,-2,1,3,1".into(), "0,1,2,2,1,0,-1,-1".into(), "0,0,1".into()]
    } else {
        words
    };
    for w in words {
        let c: Cycle = w.parse().expect("comma-separated integers");
        match constraints_for_cycle(&c) {
            Err(e) => println!("{c}: infeasible (zero at position {})", e.position),
            Ok(cs) => {
                let interval = interval_for_cycle(&c).map_or("empty".to_string(), |i| i.to_string());
                println!("{c}: {interval}");
                for h in cs {
                    println!("    {h}");
                }
            }
        }
    }
}
