//! Validates a strict border array online and shows the border array the
//! engine recovers after every value.
//!
//! Run with:
//!
//! ```
//! cargo run --example strict_validation -- -1 1 -1 -1 1 -1 -1 5 1 -1 -1 5 0
//! ```

use std::env;

use bordercheck::{PiValidator, SlopeValidator, Verdict};

fn main() -> bordercheck::Result<()> {
    let mut values: Vec<i64> = env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    if values.is_empty() {
        values = vec![-1, 1, -1, -1, 1, -1, -1, 5, 1, -1, -1, 5, 0];
    }

    let mut engine = SlopeValidator::new();
    for &v in &values {
        match engine.push(v)? {
            Verdict::Valid { alphabet, .. } => {
                let (start, base) = engine.last_slope();
                println!(
                    "read {v:>3}  pi {:?}  last slope from {start} at {base}  alphabet {alphabet}",
                    engine.recovered_pi()?.values()
                );
            }
            Verdict::Invalid { position } => {
                println!("rejected at position {position}");
                return Ok(());
            }
        }
    }
    println!("some word with this prefix: {}", engine.witness()?);
    Ok(())
}
