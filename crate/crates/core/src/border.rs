//! Border arrays, strict border arrays, and the bijection between them.
//!
//! Storage is 0-based; every position that crosses the API boundary
//! (error positions, documentation) is 1-based.

use crate::error::{Error, Result};
use crate::word::Word;

/// A validated border array: `A[1] = 0`, `A[i] < i`, `A[i+1] <= A[i] + 1`.
///
/// These are the local invariants only. Passing them does not mean some
/// word realises the array; the validators decide that.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BorderArray(Vec<usize>);

impl BorderArray {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        check_local(&values)?;
        Ok(BorderArray(values))
    }

    pub(crate) fn from_trusted(values: Vec<usize>) -> Self {
        debug_assert!(check_local(&values).is_ok());
        BorderArray(values)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// Value at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn into_values(self) -> Vec<usize> {
        self.0
    }
}

fn check_local(values: &[usize]) -> Result<()> {
    for (idx, &v) in values.iter().enumerate() {
        let pos = idx + 1;
        if v >= pos {
            return Err(Error::InvalidBorderArray {
                position: pos,
                reason: "value not below its position",
            });
        }
        if idx > 0 && v > values[idx - 1] + 1 {
            return Err(Error::InvalidBorderArray {
                position: pos,
                reason: "value exceeds previous value plus one",
            });
        }
    }
    Ok(())
}

/// A strict border array; `-1` marks positions with no qualifying border.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictBorderArray(Vec<i64>);

impl StrictBorderArray {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        for (idx, &v) in values.iter().enumerate() {
            if v < -1 || v >= (idx + 1) as i64 {
                return Err(Error::InvalidStrictBorderArray {
                    position: idx + 1,
                    reason: "value outside [-1, position)",
                });
            }
        }
        Ok(StrictBorderArray(values))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn at(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    pub fn into_values(self) -> Vec<i64> {
        self.0
    }
}

/// Morris-Pratt failure function in amortised linear time.
pub fn compute_pi(w: &Word) -> BorderArray {
    let s = w.letters();
    let mut pi = vec![0usize; s.len()];
    let mut k = 0;
    for i in 1..s.len() {
        while k > 0 && s[k] != s[i] {
            k = pi[k - 1];
        }
        if s[k] == s[i] {
            k += 1;
        }
        pi[i] = k;
    }
    BorderArray(pi)
}

/// Failure function straight from the definition; cubic time.
pub fn naive_pi(w: &Word) -> BorderArray {
    let s = w.letters();
    let pi = (1..=s.len())
        .map(|i| (0..i).rev().find(|&b| s[..b] == s[i - b..i]).unwrap_or(0))
        .collect();
    BorderArray(pi)
}

/// Strict failure function from the definition: for `i < n` the longest
/// proper border of `w[1..i]` whose next letter differs from `w[i+1]`.
pub fn naive_pi_prime(w: &Word) -> StrictBorderArray {
    let s = w.letters();
    let n = s.len();
    let pp = (1..=n)
        .map(|i| {
            let is_border = |b: usize| s[..b] == s[i - b..i];
            if i == n {
                return (0..i).rev().find(|&b| is_border(b)).unwrap_or(0) as i64;
            }
            (0..i)
                .rev()
                .find(|&b| is_border(b) && s[b] != s[i])
                .map_or(-1, |b| b as i64)
        })
        .collect();
    StrictBorderArray(pp)
}

/// Strict border array of any word with the given border array.
pub fn pi_to_pi_prime(pi: &BorderArray) -> Result<StrictBorderArray> {
    check_local(pi.values())?;
    Ok(pi_to_pi_prime_unchecked(pi.values()))
}

pub(crate) fn pi_to_pi_prime_unchecked(pi: &[usize]) -> StrictBorderArray {
    let n = pi.len();
    // index 0 holds the -1 sentinel, index i the value at position i
    let mut pp = vec![-1i64; n + 1];
    for i in 1..n {
        pp[i] = if pi[i] == pi[i - 1] + 1 {
            pp[pi[i - 1]]
        } else {
            pi[i - 1] as i64
        };
    }
    if n > 0 {
        pp[n] = pi[n - 1] as i64;
    }
    pp.remove(0);
    StrictBorderArray(pp)
}

/// Inverse of [`pi_to_pi_prime`]. Garbage in, garbage out: the input is
/// not validated, negative results are clamped to zero.
pub fn pi_prime_to_pi(pp: &StrictBorderArray) -> BorderArray {
    let v = pp.values();
    let n = v.len();
    let mut pi = vec![0usize; n];
    if n == 0 {
        return BorderArray(pi);
    }
    pi[n - 1] = v[n - 1].max(0) as usize;
    for i in (0..n - 1).rev() {
        pi[i] = v[i].max(pi[i + 1] as i64 - 1).max(0) as usize;
    }
    BorderArray(pi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig1() -> Word {
        Word::from_ascii("aabaabaaabaac")
    }

    #[test]
    fn compute_pi_examples() {
        assert_eq!(
            compute_pi(&fig1()).values(),
            &[0, 1, 0, 1, 2, 3, 4, 5, 2, 3, 4, 5, 0]
        );
        assert_eq!(compute_pi(&Word::from_ascii("abc")).values(), &[0, 0, 0]);
        assert_eq!(compute_pi(&Word::from_ascii("aaa")).values(), &[0, 1, 2]);
    }

    #[test]
    fn naive_pi_examples() {
        assert_eq!(naive_pi(&Word::from_ascii("aaa")).values(), &[0, 1, 2]);
        assert_eq!(naive_pi(&Word::from_ascii("abab")).values(), &[0, 0, 1, 2]);
        assert_eq!(naive_pi(&fig1()), compute_pi(&fig1()));
    }

    #[test]
    fn pi_prime_examples() {
        let to_pp = |v: Vec<usize>| pi_to_pi_prime(&BorderArray::new(v).unwrap()).unwrap();
        assert_eq!(to_pp(vec![0, 1, 2]).values(), &[-1, -1, 2]);
        assert_eq!(
            to_pp(vec![0, 1, 0, 1, 2, 3, 4, 5, 2, 3, 4, 5, 0]).values(),
            &[-1, 1, -1, -1, 1, -1, -1, 5, 1, -1, -1, 5, 0]
        );
        assert_eq!(to_pp(vec![0]).values(), &[0]);
    }

    #[test]
    fn pi_prime_to_pi_examples() {
        let back = |v: Vec<i64>| pi_prime_to_pi(&StrictBorderArray::new(v).unwrap());
        assert_eq!(back(vec![-1, -1, 2]).values(), &[0, 1, 2]);
        assert_eq!(back(vec![0]).values(), &[0]);
        assert_eq!(
            back(vec![-1, 1, -1, -1, 1, -1, -1, 5, 1, -1, -1, 5, 0]).values(),
            &[0, 1, 0, 1, 2, 3, 4, 5, 2, 3, 4, 5, 0]
        );
    }

    #[test]
    fn naive_pi_prime_examples() {
        assert_eq!(
            naive_pi_prime(&Word::from_ascii("aaa")).values(),
            &[-1, -1, 2]
        );
        // the only border of "a" is empty and w[1] != w[2]
        assert_eq!(naive_pi_prime(&Word::from_ascii("ab")).values(), &[0, 0]);
        assert_eq!(naive_pi_prime(&Word::from_ascii("a")).values(), &[0]);
        assert_eq!(
            naive_pi_prime(&fig1()),
            pi_to_pi_prime(&compute_pi(&fig1())).unwrap()
        );
    }

    #[test]
    fn constructor_rejects_local_violations() {
        assert!(BorderArray::new(vec![1]).is_err());
        assert!(BorderArray::new(vec![0, 0, 2]).is_err());
        assert!(BorderArray::new(vec![0, 1, 1]).is_ok());
        assert!(StrictBorderArray::new(vec![-2]).is_err());
        assert!(StrictBorderArray::new(vec![-1, 2]).is_err());
    }

    #[test]
    fn empty_arrays() {
        assert!(compute_pi(&Word::default()).is_empty());
        assert!(pi_to_pi_prime(&BorderArray::default()).unwrap().is_empty());
        assert!(pi_prime_to_pi(&StrictBorderArray::default()).is_empty());
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn fast_matches_naive(letters in proptest::collection::vec(1u32..4, 0..40)) {
                let w = Word::new(letters);
                let pi = compute_pi(&w);
                prop_assert_eq!(&pi, &naive_pi(&w));
                let pp = pi_to_pi_prime(&pi).unwrap();
                prop_assert_eq!(&pp, &naive_pi_prime(&w));
                prop_assert_eq!(pi_prime_to_pi(&pp), pi);
            }
        }
    }
}
