//! Measures the worst per-value work of the real-time validator on a few
//! input families. The maximum should not grow with n.
//!
//! Run with:
//!
//! ```
//! cargo run --release --example realtime_delay
//! ```

use bordercheck::harness::gen::{family_pi, Family, GenOptions};
use bordercheck::{PiValidator, RealtimeValidator};

fn main() -> bordercheck::Result<()> {
    println!(
        "{:<16} {:>9} {:>10} {:>10} {:>12}",
        "family", "n", "max ops", "max LA", "avg ops"
    );
    for family in [Family::Unary, Family::Fibonacci, Family::RandomValidPi] {
        for n in [1_000, 10_000, 100_000, 1_000_000] {
            let pi = family_pi(
                family,
                &GenOptions {
                    n,
                    seed: 3,
                    ..GenOptions::default()
                },
            )?;
            let mut engine = RealtimeValidator::new();
            for &v in &pi {
                assert!(engine.push(v as i64)?.is_valid());
            }
            let ops = engine.ops();
            println!(
                "{:<16} {:>9} {:>10} {:>10} {:>12.2}",
                family.name(),
                n,
                ops.max(),
                engine.la_ops().max(),
                ops.total() as f64 / n as f64
            );
        }
    }
    Ok(())
}
