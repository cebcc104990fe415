//! Append-only index answering "does this suffix of the stream start with
//! that shifted copy of itself" in constant time.
//!
//! Every substring whose length is a power of two gets an integer name,
//! assigned online: the name of `s[t..t+2^k)` is looked up from the pair of
//! names of its two halves. Two substrings of length `L` are equal iff the
//! names of their leading and trailing `2^floor(log L)` pieces agree.
//! Appending costs one table lookup per level.

use std::collections::HashMap;

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default)]
pub struct OnlineSuffixIndex {
    stream: Vec<i64>,
    // names[k][s] names stream[s..s + 2^k] (0-based)
    names: Vec<Vec<u32>>,
    symbols: HashMap<i64, u32>,
    pairs: Vec<HashMap<(u32, u32), u32>>,
    steps: u64,
}

impl OnlineSuffixIndex {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.stream.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stream.is_empty()
    }

    /// Symbol at 1-based position `p`.
    pub fn at(&self, p: usize) -> i64 {
        self.stream[p - 1]
    }

    pub fn append(&mut self, symbol: i64) {
        self.stream.push(symbol);
        let t = self.stream.len() - 1;
        let fresh = self.symbols.len() as u32;
        let name = *self.symbols.entry(symbol).or_insert(fresh);
        if self.names.is_empty() {
            self.names.push(Vec::new());
            self.pairs.push(HashMap::new());
        }
        self.names[0].push(name);
        self.steps += 1;
        let mut k = 1;
        while 1usize << k <= t + 1 {
            if self.names.len() == k {
                self.names.push(Vec::new());
                self.pairs.push(HashMap::new());
            }
            let half = 1usize << (k - 1);
            let s = t + 1 - (1 << k);
            let key = (self.names[k - 1][s], self.names[k - 1][s + half]);
            let table = &mut self.pairs[k];
            let fresh = table.len() as u32;
            let name = *table.entry(key).or_insert(fresh);
            debug_assert_eq!(self.names[k].len(), s);
            self.names[k].push(name);
            self.steps += 1;
            k += 1;
        }
    }

    /// Equality of the length-`len` substrings starting at 0-based `x` and `y`.
    fn equal(&mut self, x: usize, y: usize, len: usize) -> bool {
        self.steps += 1;
        if len == 0 || x == y {
            return true;
        }
        let k = (usize::BITS - 1 - len.leading_zeros()) as usize;
        let tail = len - (1 << k);
        let level = &self.names[k];
        level[x] == level[y] && level[x + tail] == level[y + tail]
    }

    /// Whether `stream[p+l..=m]` equals `stream[p..=m-l]` (1-based), i.e.
    /// whether the suffix starting `l` places after `p` is a prefix of the
    /// suffix starting at `p`. The index must cover exactly `1..=m`.
    pub fn is_suffix_prefix_of_suffix(&mut self, p: usize, l: usize, m: usize) -> Result<bool> {
        if m != self.len() {
            return Err(Error::OutOfRange(format!(
                "index covers 1..={}, query asked for m={m}",
                self.len()
            )));
        }
        if p == 0 || p > m + 1 {
            return Err(Error::OutOfRange(format!(
                "start {p} outside 1..={}",
                m + 1
            )));
        }
        if l == 0 || p + l > m {
            self.steps += 1;
            return Ok(true);
        }
        let len = m - (p + l) + 1;
        Ok(self.equal(p + l - 1, p - 1, len))
    }

    /// Primitive steps spent so far (appends and queries).
    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn memory_bits(&self) -> u64 {
        let names: u64 = self.names.iter().map(|v| v.len() as u64 * 32).sum();
        let tables: u64 = self.pairs.iter().map(|t| t.len() as u64 * 96).sum();
        self.stream.len() as u64 * 64 + names + tables + self.symbols.len() as u64 * 96
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive(s: &[i64], p: usize, l: usize, m: usize) -> bool {
        if p + l > m {
            return true;
        }
        s[p + l - 1..m] == s[p - 1..m - l]
    }

    #[test]
    fn basic_queries() {
        let mut idx = OnlineSuffixIndex::new();
        assert!(idx.is_suffix_prefix_of_suffix(1, 0, 0).unwrap());
        for _ in 0..4 {
            idx.append(7);
        }
        assert!(idx.is_suffix_prefix_of_suffix(1, 2, 4).unwrap());
        assert!(idx.is_suffix_prefix_of_suffix(1, 2, 3).is_err());
        assert!(idx.is_suffix_prefix_of_suffix(9, 1, 4).is_err());
        idx.append(1);
        assert!(!idx.is_suffix_prefix_of_suffix(1, 2, 5).unwrap());
        assert!(idx.is_suffix_prefix_of_suffix(5, 0, 5).unwrap());
    }

    #[test]
    fn figure_one_stream() {
        let s = [-1, 1, -1, -1, 1, -1, -1, 5, 1, -1, -1, 5, 0];
        let mut idx = OnlineSuffixIndex::new();
        for (m, &x) in s.iter().enumerate() {
            idx.append(x);
            let m = m + 1;
            for p in 1..=m {
                for l in 0..=m {
                    assert_eq!(
                        idx.is_suffix_prefix_of_suffix(p, l, m).unwrap(),
                        naive(&s, p, l, m)
                    );
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn matches_naive(s in proptest::collection::vec(-1i64..3, 1..120), queries in proptest::collection::vec((0usize..1000, 0usize..1000), 50)) {
            let mut idx = OnlineSuffixIndex::new();
            for &x in &s {
                idx.append(x);
            }
            let m = s.len();
            for &(a, b) in &queries {
                let p = 1 + a % m;
                let l = b % (m + 1);
                let before = idx.steps();
                prop_assert_eq!(idx.is_suffix_prefix_of_suffix(p, l, m).unwrap(), naive(&s, p, l, m));
                prop_assert!(idx.steps() - before <= 2);
            }
        }
    }
}
