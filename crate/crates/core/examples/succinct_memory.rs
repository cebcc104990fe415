//! Compares the footprint of the succinct validator (eager and lazy block
//! copying) with the basic one on random valid border arrays.
//!
//! Run with:
//!
//! ```
//! cargo run --release --example succinct_memory
//! ```

use bordercheck::harness::gen::random_valid_pi;
use bordercheck::{CopyMode, OnlineValidator, PiValidator, SuccinctValidator};

fn main() -> bordercheck::Result<()> {
    println!(
        "{:>9} {:>14} {:>14} {:>14} {:>10} {:>8} {:>6}",
        "n", "basic bits", "succinct bits", "heap bytes", "bits/nllg", "window", "chase"
    );
    for n in [10_000, 100_000, 1_000_000] {
        let pi = random_valid_pi(n, 11, 0.5);

        let mut basic = OnlineValidator::new();
        let mut eager = SuccinctValidator::new();
        let mut lazy = SuccinctValidator::with_options(1 << 32, CopyMode::Lazy { budget: 32 })?;
        for &v in &pi {
            basic.push(v as i64)?;
            eager.push(v as i64)?;
            lazy.push(v as i64)?;
        }
        assert_eq!(eager.witness()?, lazy.witness()?);

        let loglog = (n as f64).log2().log2();
        println!(
            "{:>9} {:>14} {:>14} {:>14} {:>10.2} {:>8} {:>6}",
            n,
            basic.memory_bits(),
            eager.memory_bits(),
            eager.allocated_bytes(),
            eager.memory_bits() as f64 / (n as f64 * loglog),
            eager.max_window_fill(),
            lazy.max_chase()
        );
    }
    Ok(())
}
