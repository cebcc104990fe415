//! Exhaustive ground truth over canonical words.
//!
//! A canonical (restricted-growth) word uses symbols in order of first
//! appearance, so every word is a renaming of exactly one canonical word.
//! Failure functions only compare letters for equality, hence enumerating
//! canonical words covers every word.

use std::collections::{BTreeSet, HashMap};

use crate::border::{pi_to_pi_prime_unchecked, BorderArray, StrictBorderArray};
use crate::error::{Error, Result};
use crate::word::{Symbol, Word};

pub const MAX_PI_LEN: usize = 14;
pub const MAX_PI_PRIME_LEN: usize = 12;

/// Iterator over canonical words of a fixed length using at most
/// `max_alpha` distinct symbols.
#[derive(Clone, Debug)]
pub struct CanonicalWords {
    current: Option<Vec<Symbol>>,
    max_alpha: Symbol,
}

impl CanonicalWords {
    pub fn new(len: usize, max_alpha: usize) -> Self {
        let current = if len > 0 && max_alpha == 0 {
            None
        } else {
            Some(vec![1; len])
        };
        CanonicalWords {
            current,
            max_alpha: max_alpha as Symbol,
        }
    }
}

impl Iterator for CanonicalWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let cur = self.current.as_mut()?;
        let out = Word::new(cur.clone());
        // successor in restricted-growth order
        let mut prefix_max = Vec::with_capacity(cur.len());
        let mut m = 0;
        for &c in cur.iter() {
            m = m.max(c);
            prefix_max.push(m);
        }
        let mut advanced = false;
        for i in (1..cur.len()).rev() {
            let bound = (prefix_max[i - 1] + 1).min(self.max_alpha);
            if cur[i] < bound {
                cur[i] += 1;
                for c in &mut cur[i + 1..] {
                    *c = 1;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            self.current = None;
        }
        Some(out)
    }
}

/// Depth-first walk over canonical words of length `len`, maintaining the
/// failure function incrementally. `visit` receives each complete word,
/// its border array and its number of distinct letters.
fn walk_canonical(len: usize, max_alpha: usize, visit: &mut dyn FnMut(&[Symbol], &[usize], usize)) {
    fn rec(
        len: usize,
        max_alpha: usize,
        word: &mut Vec<Symbol>,
        pi: &mut Vec<usize>,
        used: usize,
        visit: &mut dyn FnMut(&[Symbol], &[usize], usize),
    ) {
        if word.len() == len {
            visit(word, pi, used);
            return;
        }
        let top = (used + 1).min(max_alpha);
        for c in 1..=top as Symbol {
            let i = word.len();
            word.push(c);
            let value = if i == 0 {
                0
            } else {
                let mut k = pi[i - 1];
                while k > 0 && word[k] != c {
                    k = pi[k - 1];
                }
                if word[k] == c {
                    k + 1
                } else {
                    0
                }
            };
            pi.push(value);
            rec(len, max_alpha, word, pi, used.max(c as usize), visit);
            pi.pop();
            word.pop();
        }
    }
    rec(
        len,
        max_alpha,
        &mut Vec::with_capacity(len),
        &mut Vec::with_capacity(len),
        0,
        visit,
    );
}

fn check_cap(len: usize, cap: usize) -> Result<()> {
    if len > cap {
        return Err(Error::LengthTooLarge { len, cap });
    }
    Ok(())
}

/// Every border array of length `n` realised by some word.
pub fn enumerate_valid_pi(n: usize) -> Result<BTreeSet<BorderArray>> {
    check_cap(n, MAX_PI_LEN)?;
    let mut seen: std::collections::HashSet<Vec<usize>> = Default::default();
    walk_canonical(n, n.max(1), &mut |_, pi, _| {
        if !seen.contains(pi) {
            seen.insert(pi.to_vec());
        }
    });
    Ok(seen.into_iter().map(BorderArray::from_trusted).collect())
}

/// Minimal alphabet over which some word has border array `a`, or `None`
/// when no word does.
pub fn min_alphabet_bruteforce(a: &[usize]) -> Result<Option<usize>> {
    check_cap(a.len(), MAX_PI_LEN)?;
    if a.is_empty() {
        return Ok(Some(0));
    }
    fn rec(
        a: &[usize],
        k: usize,
        word: &mut Vec<Symbol>,
        pi: &mut Vec<usize>,
        used: usize,
    ) -> bool {
        let i = word.len();
        if i == a.len() {
            return true;
        }
        for c in 1..=(used + 1).min(k) as Symbol {
            let value = if i == 0 {
                0
            } else {
                let mut b = pi[i - 1];
                while b > 0 && word[b] != c {
                    b = pi[b - 1];
                }
                if word[b] == c {
                    b + 1
                } else {
                    0
                }
            };
            if value != a[i] {
                continue;
            }
            word.push(c);
            pi.push(value);
            let found = rec(a, k, word, pi, used.max(c as usize));
            pi.pop();
            word.pop();
            if found {
                return true;
            }
        }
        false
    }
    for k in 1..=a.len() {
        if rec(a, k, &mut Vec::new(), &mut Vec::new(), 0) {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Minimal alphabet size of every valid border array of length `n`.
pub fn min_alphabet_table(n: usize) -> Result<HashMap<BorderArray, usize>> {
    check_cap(n, MAX_PI_LEN)?;
    let mut best: HashMap<Vec<usize>, usize> = HashMap::new();
    walk_canonical(n, n.max(1), &mut |_, pi, used| match best.get_mut(pi) {
        Some(b) => *b = (*b).min(used),
        None => {
            best.insert(pi.to_vec(), used);
        }
    });
    Ok(best
        .into_iter()
        .map(|(k, v)| (BorderArray::from_trusted(k), v))
        .collect())
}

/// Largest minimal alphabet over all valid border arrays of length `n`.
pub fn max_min_alphabet(n: usize) -> Result<usize> {
    Ok(min_alphabet_table(n)?.into_values().max().unwrap_or(0))
}

/// Everything the oracle knows about one strict-border-array prefix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixWitnesses {
    /// Pointwise maximum of `pi[1..=k+1]` over all witness words.
    pub max_pi: Vec<usize>,
    /// Every distinct `pi[1..=k+1]` among witness words.
    pub pis: BTreeSet<Vec<usize>>,
}

/// The prefixes `pi'[1..=k]` of all words of length `k + 1`.
pub fn enumerate_pi_prime_prefix_witnesses(k: usize) -> Result<BTreeSet<StrictBorderArray>> {
    Ok(pi_prime_prefix_table(k)?.into_keys().collect())
}

/// Prefix table keyed by `pi'[1..=k]`, over all words of length `k + 1`.
pub fn pi_prime_prefix_table(k: usize) -> Result<HashMap<StrictBorderArray, PrefixWitnesses>> {
    check_cap(k, MAX_PI_PRIME_LEN)?;
    let mut table: HashMap<Vec<i64>, PrefixWitnesses> = HashMap::new();
    if k == 0 {
        table.insert(
            Vec::new(),
            PrefixWitnesses {
                max_pi: vec![0],
                pis: [vec![0]].into(),
            },
        );
    } else {
        walk_canonical(k + 1, k + 1, &mut |_, pi, _| {
            let mut pp = pi_to_pi_prime_unchecked(pi).into_values();
            pp.truncate(k);
            let entry = table.entry(pp).or_insert_with(|| PrefixWitnesses {
                max_pi: pi.to_vec(),
                pis: BTreeSet::new(),
            });
            for (m, &v) in entry.max_pi.iter_mut().zip(pi) {
                *m = (*m).max(v);
            }
            if !entry.pis.contains(pi) {
                entry.pis.insert(pi.to_vec());
            }
        });
    }
    Ok(table
        .into_iter()
        .map(|(key, v)| {
            (
                StrictBorderArray::new(key).expect("prefix of a strict border array"),
                v,
            )
        })
        .collect())
}

/// Visits every canonical word of length `len` over at most `max_alpha`
/// symbols together with its border array.
pub fn for_each_canonical_word(
    len: usize,
    max_alpha: usize,
    mut visit: impl FnMut(&[Symbol], &[usize]),
) {
    walk_canonical(len, max_alpha, &mut |w, pi, _| visit(w, pi));
}

/// Every array satisfying the local border-array invariants
/// (`A[1] = 0`, `0 <= A[i] <= A[i-1] + 1`), in lexicographic order.
pub fn local_border_arrays(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let top = cur.last().map_or(0, |&v| v + 1);
        for v in 0..=top {
            cur.push(v);
            rec(n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}
