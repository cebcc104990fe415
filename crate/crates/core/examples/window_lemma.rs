//! Checks the two combinatorial facts behind the succinct layout on long
//! words: few distinct large strict border values per window, and the
//! strict failure chain halving every two steps.
//!
//! Run with:
//!
//! ```
//! cargo run --release --example window_lemma 100000
//! ```

use std::env;

use bordercheck::harness::gen::{fibonacci_word, random_word, thue_morse_word};
use bordercheck::realtime::halving_violations;
use bordercheck::succinct::window_distinct_check;
use bordercheck::{compute_pi, pi_to_pi_prime};

fn main() -> bordercheck::Result<()> {
    let n: usize = env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(100_000);
    let words = [
        ("fibonacci", fibonacci_word(n)),
        ("thue_morse", thue_morse_word(n)),
        ("random binary", random_word(n, 2, 1)),
        ("random ternary", random_word(n, 3, 1)),
    ];
    for (name, w) in words {
        let pp = pi_to_pi_prime(&compute_pi(&w))?;
        println!(
            "{name:<16} max distinct per window {:>3} (cap 48)   halving violations {}",
            window_distinct_check(&pp),
            halving_violations(pp.values())
        );
    }
    Ok(())
}
