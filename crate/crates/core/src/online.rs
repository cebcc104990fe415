//! Candidate-set validator for border arrays.
//!
//! Node `p` of the failure tree has father `f = A[p-1] + 1`. For every node
//! we keep the set of positions on its root path whose letter occurs there
//! for the first time (walking up from the node). A value `a > 0` is
//! acceptable at `p` exactly when `a` belongs to that set for `f`, and the
//! set for `p` is the father's set with `a` swapped out for `p`.

use crate::error::{Error, Result};
use crate::instrument::OpStats;
use crate::verdict::{PiValidator, Verdict};
use crate::word::{Symbol, Word};

const WORD_BITS: u64 = 64;

#[derive(Clone, Debug, Default)]
pub struct OnlineValidator {
    // 1-based; index 0 is padding
    values: Vec<usize>,
    first_occ: Vec<Vec<usize>>,
    letters: Vec<Symbol>,
    max_alph: usize,
    failed: Option<usize>,
    ops: OpStats,
    stored_words: u64,
}

impl OnlineValidator {
    pub fn new() -> Self {
        OnlineValidator {
            values: vec![0],
            first_occ: vec![Vec::new()],
            letters: vec![0],
            ..Default::default()
        }
    }

    /// Value accepted at 1-based position `p`.
    pub fn value(&self, p: usize) -> usize {
        self.values[p]
    }

    pub fn values(&self) -> &[usize] {
        &self.values[1..]
    }

    pub fn letter(&self, p: usize) -> Symbol {
        self.letters[p]
    }

    /// Distinct letters on the root path of node `p`.
    pub fn path_alphabet(&self, p: usize) -> usize {
        self.first_occ[p].len()
    }

    /// First-occurrence positions on the root path of node `p`, ascending.
    pub fn first_occurrences(&self, p: usize) -> &[usize] {
        &self.first_occ[p]
    }

    /// Every value that would be accepted next, in descending order.
    pub fn next_candidates(&self) -> Vec<usize> {
        let n = self.len();
        if n == 0 {
            return vec![0];
        }
        let f = self.values[n] + 1;
        let mut c: Vec<usize> = self.first_occ[f].iter().rev().copied().collect();
        c.push(0);
        c
    }

    fn reject(&mut self, position: usize) -> Verdict {
        self.failed = Some(position);
        self.ops.finish_push();
        Verdict::Invalid { position }
    }
}

impl PiValidator for OnlineValidator {
    fn push(&mut self, value: i64) -> Result<Verdict> {
        if let Some(position) = self.failed {
            return Err(Error::PushAfterFailure { position });
        }
        let p = self.values.len();
        self.ops.tick(1);
        if value < 0 {
            return Ok(self.reject(p));
        }
        let a = value as usize;
        if p == 1 {
            if a != 0 {
                return Ok(self.reject(1));
            }
            self.values.push(0);
            self.first_occ.push(vec![1]);
            self.letters.push(1);
            self.max_alph = 1;
            self.stored_words += 4;
            self.ops.finish_push();
            return Ok(Verdict::Valid {
                alphabet: 1,
                letter: Some(1),
            });
        }

        let f = self.values[p - 1] + 1;
        let inherited = &self.first_occ[f];
        self.ops.tick(inherited.len() as u64);
        let (set, letter) = if a == 0 {
            let mut set = inherited.clone();
            set.push(p);
            let letter = set.len() as Symbol;
            (set, letter)
        } else {
            match inherited.binary_search(&a) {
                Ok(idx) => {
                    let mut set = inherited.clone();
                    set.remove(idx);
                    set.push(p);
                    (set, self.letters[a])
                }
                Err(_) => return Ok(self.reject(p)),
            }
        };
        self.max_alph = self.max_alph.max(set.len());
        self.stored_words += 3 + set.len() as u64;
        self.values.push(a);
        self.first_occ.push(set);
        self.letters.push(letter);
        self.ops.finish_push();
        Ok(Verdict::Valid {
            alphabet: self.max_alph,
            letter: Some(letter),
        })
    }

    fn len(&self) -> usize {
        self.values.len() - 1
    }

    fn failed_at(&self) -> Option<usize> {
        self.failed
    }

    fn alphabet_size(&self) -> usize {
        self.max_alph
    }

    fn witness(&self) -> Result<Word> {
        if let Some(position) = self.failed {
            return Err(Error::StateInvalid { position });
        }
        Ok(Word::new(self.letters[1..].to_vec()))
    }

    fn ops(&self) -> &OpStats {
        &self.ops
    }

    fn memory_bits(&self) -> u64 {
        self.stored_words * WORD_BITS
    }
}
