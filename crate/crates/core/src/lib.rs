//! Border arrays and strict border arrays: computation, conversion and
//! online validation.
//!
//! Validators read an array one value at a time and reject at the first
//! position where no word can have that array as its (strict) border array.
//! [`OnlineValidator`] is the straightforward engine, [`RealtimeValidator`]
//! does constant work per value, [`SuccinctValidator`] keeps
//! O(n log log n) bits, and [`SlopeValidator`] reads strict border arrays.

pub mod border;
pub mod error;
pub mod harness;
pub mod instrument;
pub mod level_ancestor;
pub mod online;
pub mod oracle;
pub mod packed;
pub mod realtime;
pub mod strict;
pub mod succinct;
pub mod suffix;
pub mod verdict;
pub mod word;

pub use border::{
    compute_pi, naive_pi, naive_pi_prime, pi_prime_to_pi, pi_to_pi_prime, BorderArray,
    StrictBorderArray,
};
pub use error::{Error, Result};
pub use online::OnlineValidator;
pub use realtime::RealtimeValidator;
pub use strict::{validate_g, GValidator, SlopeValidator};
pub use succinct::{CopyMode, SuccinctValidator};
pub use suffix::OnlineSuffixIndex;
pub use verdict::{run_all, PiValidator, Verdict};
pub use word::{Symbol, Word};
