//! Builds pairs of arrays that share their second half and differ in the
//! first, exactly one of which is valid. Any streaming validator must tell
//! them apart after reading only the shared part, which is why memory
//! cannot drop below linear in n bits.
//!
//! Run with:
//!
//! ```
//! cargo run --example lower_bound 24 5
//! ```

use std::env;

use bordercheck::harness::gen::lowerbound_pair;
use bordercheck::{run_all, OnlineValidator, RealtimeValidator, SuccinctValidator};

fn main() -> bordercheck::Result<()> {
    let mut args = env::args().skip(1);
    let n: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(24);
    let seed: u64 = args.next().and_then(|a| a.parse().ok()).unwrap_or(5);

    let pair = lowerbound_pair(n, seed)?;
    println!(
        "prefixes differ at {}, shared part starts at {}",
        pair.split,
        n / 2 + 1
    );
    for (k, a) in pair.arrays.iter().enumerate() {
        let s: Vec<i64> = a.iter().map(|&v| v as i64).collect();
        let basic = run_all(&mut OnlineValidator::new(), &s)?;
        let rt = run_all(&mut RealtimeValidator::new(), &s)?;
        let sc = run_all(&mut SuccinctValidator::new(), &s)?;
        assert_eq!(basic, rt);
        assert_eq!(basic, sc);
        let mark = if k == pair.valid { "valid" } else { "     " };
        println!("{mark} {a:?}\n      -> {basic:?}");
    }
    Ok(())
}
