//! Streams a border array through the basic validator, printing the
//! letter chosen for each position and the minimal alphabet.
//!
//! Run with:
//!
//! ```
//! cargo run --example validate_pi 0 1 0 1 2 3 4 5 2 3 4 5 0
//! cargo run --example validate_pi 0 1 1
//! ```

use std::env;

use bordercheck::{OnlineValidator, PiValidator, Verdict};

fn main() -> bordercheck::Result<()> {
    let mut values: Vec<i64> = env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    if values.is_empty() {
        values = vec![0, 1, 0, 1, 2, 3, 4, 5, 2, 3, 4, 5, 0];
    }

    let mut engine = OnlineValidator::new();
    for (i, &v) in values.iter().enumerate() {
        match engine.push(v)? {
            Verdict::Valid { alphabet, letter } => {
                let candidates = engine.next_candidates();
                println!("{:>4}  value {v:>4}  letter {:?}  alphabet {alphabet}  next may be {candidates:?}", i + 1, letter.unwrap_or(0));
            }
            Verdict::Invalid { position } => {
                println!("rejected at position {position}");
                return Ok(());
            }
        }
    }
    println!("witness {}", engine.witness()?);
    Ok(())
}
