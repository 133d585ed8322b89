//! Runs every law suite for a seed and prints the summary with timings.
//!
//! cargo run --release --example law_suites -- [seed] [count]

use std::time::Instant;

use gf::laws::{run_suite, Suite};

fn main() {
    let mut args = std::env::args().skip(1);
    let seed: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(7);
    let count: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(20);
    for suite in Suite::ALL {
        let t = Instant::now();
        let r = run_suite(suite, seed, count);
        println!("{:<14} {:>10}  {:.2}s", suite.name(), r.summary(), t.elapsed().as_secs_f64());
        for (i, m) in &r.failures {
            println!("    case {i}: {m}");
        }
    }
}
