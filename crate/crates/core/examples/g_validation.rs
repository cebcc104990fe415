//! Validates the shifted form g[i] = pi'[i-1] + 1. The leading g[1] = 0 is
//! implied, so the stream starts at g[2].
//!
//! Run with:
//!
//! ```
//! cargo run --example g_validation -- 0 0 3
//! ```

use std::env;

use bordercheck::strict::{strict_to_g, validate_g};
use bordercheck::{compute_pi, pi_to_pi_prime, Word};

fn main() -> bordercheck::Result<()> {
    let args: Vec<i64> = env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    if !args.is_empty() {
        println!("{:?}", validate_g(&args)?);
        return Ok(());
    }
    for text in ["aaa", "abaab", "aabaabaaabaac"] {
        let pp = pi_to_pi_prime(&compute_pi(&Word::from_ascii(text)))?;
        let g = strict_to_g(&pp);
        println!("{text:<14} g = {g:?} -> {:?}", validate_g(&g)?);
    }
    println!("g = [2]        -> {:?}", validate_g(&[2])?);
    Ok(())
}
