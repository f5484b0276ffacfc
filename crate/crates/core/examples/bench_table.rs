//! Random-loop batch: verdict counts and decision times per dimension.
//!
//! cargo run --release --example bench_table -- 50

use linloop::bench::{run_suite, BenchConfig};

fn main() -> linloop::Result<()> {
    let loops = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(20);
    let config = BenchConfig {
        dimensions: vec![2, 3, 4, 5],
        loops_per_set: loops,
        entry_magnitude: 10,
        seed: 7,
    };
    let report = run_suite(&config)?;
    println!("{report}");
    Ok(())
}
