//! Prints the border array and the strict border array of a word, and
//! converts between the two.
//!
//! Run with:
//!
//! ```
//! cargo run --example compute_arrays aabaabaaabaac
//! ```

use std::env;

use bordercheck::{compute_pi, pi_prime_to_pi, pi_to_pi_prime, Word};

fn main() -> bordercheck::Result<()> {
    let text = env::args().nth(1).unwrap_or_else(|| "aabaabaaabaac".into());
    let word = Word::from_ascii(&text);

    let pi = compute_pi(&word);
    let strict = pi_to_pi_prime(&pi)?;

    println!("word   {word}");
    println!("pi     {:?}", pi.values());
    println!("pi'    {:?}", strict.values());

    let back = pi_prime_to_pi(&strict);
    assert_eq!(back, pi);
    println!("pi' -> pi round trip ok");
    Ok(())
}
