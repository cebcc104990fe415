//! Brute-force facts for short lengths: how many border arrays exist, how
//! many local-looking arrays are not border arrays, and the largest minimal
//! alphabet any of them needs.
//!
//! Run with:
//!
//! ```
//! cargo run --release --example oracle_tables
//! ```

use bordercheck::oracle::{enumerate_valid_pi, local_border_arrays, max_min_alphabet};

fn main() -> bordercheck::Result<()> {
    println!(
        "{:>3} {:>8} {:>10} {:>9}",
        "n", "valid", "local", "max alph"
    );
    for n in 1..=10 {
        let valid = enumerate_valid_pi(n)?.len();
        let local = local_border_arrays(n).len();
        println!("{n:>3} {valid:>8} {local:>10} {:>9}", max_min_alphabet(n)?);
    }
    Ok(())
}
